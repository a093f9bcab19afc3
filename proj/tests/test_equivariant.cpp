#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>

#include "stein/equivariant.hpp"

using namespace stein;

namespace {

std::shared_ptr<const FiniteGroup> shared(const FiniteGroup& g) { return std::make_shared<const FiniteGroup>(g); }

// Every set map G -> L checked for the homomorphism property.
std::set<std::vector<int>> brute_homs(const FiniteGroup& g, const FiniteGroup& l) {
  std::set<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(g.order()), 0);
  for (;;) {
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x)
      for (int y = 0; y < g.order() && ok; ++y)
        ok = f[static_cast<std::size_t>(g.mul(x, y))] == l.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]);
    if (ok) out.insert(f);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == l.order()) f[k++] = 0;
    if (k == f.size()) break;
  }
  return out;
}

std::set<std::vector<int>> image_lists(const std::vector<GroupHom>& homs) {
  std::set<std::vector<int>> out;
  for (const auto& h : homs) out.insert(h.images);
  return out;
}

int count_of_order(const FiniteGroup& g, int k) {
  int c = 0;
  for (int x = 0; x < g.order(); ++x) c += g.element_order(x) == k;
  return c;
}

}  // namespace

TEST_CASE("group constructors") {
  const auto v4 = make_pgroup("Z2^2");
  CHECK(v4.order() == 4);
  CHECK(count_of_order(v4, 2) == 3);
  const auto c4 = make_pgroup("C4");
  CHECK(c4.order() == 4);
  CHECK(count_of_order(c4, 4) == 2);
  const auto q8 = quaternion8();
  CHECK(q8.order() == 8);
  CHECK(count_of_order(q8, 2) == 1);
  CHECK(count_of_order(q8, 4) == 6);
  const auto d8 = dihedral8();
  CHECK(count_of_order(d8, 2) == 5);
  CHECK_FALSE(d8.is_abelian());
  const auto h3 = heisenberg(3);
  CHECK(h3.order() == 27);
  CHECK(count_of_order(h3, 3) == 26);
  CHECK(make_pgroup("Z2xZ4").order() == 8);
  CHECK(make_pgroup("Heis3").prime() == 3);
  CHECK_FALSE(make_pgroup("trivial").prime().has_value());
  CHECK_THROWS_AS(make_pgroup("Z6"), std::invalid_argument);
  CHECK_THROWS_AS(make_pgroup("Z2xZ3"), std::invalid_argument);
  CHECK_THROWS_AS(make_pgroup("S3"), std::invalid_argument);
}

TEST_CASE("Cayley table validation and JSON ingestion") {
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {0, 1}}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1, 0}}, {0}), std::invalid_argument);
  const auto c4 = cyclic(4);
  nlohmann::json j = {{"order", 4}, {"table", c4.table()}, {"generators", {1}}};
  CHECK(pgroup_from_json(j).order() == 4);
  const std::string path = "test_group_table.json";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  CHECK(make_pgroup("file:" + path).order() == 4);
  std::remove(path.c_str());
  nlohmann::json bad = {{"order", 6}, {"table", cyclic(6).table()}, {"generators", {1}}};
  CHECK_THROWS_AS(pgroup_from_json(bad), std::invalid_argument);
}

TEST_CASE("homomorphism enumeration against all set maps") {
  const std::vector<std::pair<FiniteGroup, FiniteGroup>> cases = {
      {cyclic(4), elementary_abelian(2, 1)}, {cyclic(2), elementary_abelian(2, 2)}, {cyclic(1), elementary_abelian(2, 2)},
      {elementary_abelian(2, 2), elementary_abelian(2, 2)}, {quaternion8(), elementary_abelian(2, 1)},
      {dihedral8(), elementary_abelian(2, 1)}, {cyclic(3), elementary_abelian(3, 1)}, {cyclic(2), dihedral8()}};
  for (const auto& [g, l] : cases) {
    const auto homs = enumerate_homs(shared(g), shared(l));
    CHECK(image_lists(homs) == brute_homs(g, l));
    CHECK(image_lists(homs).size() == homs.size());
  }
  CHECK(enumerate_homs(shared(cyclic(4)), shared(elementary_abelian(2, 1))).size() == 2);
  CHECK(enumerate_homs(shared(cyclic(2)), shared(elementary_abelian(2, 2))).size() == 4);
  CHECK(enumerate_homs(shared(cyclic(1)), shared(elementary_abelian(2, 2))).size() == 1);
}

TEST_CASE("graph subgroups and centralizers") {
  const auto gl = enumerate_group(GroupKind::GL, 2, Prime(2));
  auto lambda = shared(as_finite_group(gl));
  const auto homs = enumerate_homs(shared(cyclic(2)), lambda);
  CHECK(homs.size() == 4);
  const GFMatrix t(Prime(2), {{1, 1}, {0, 1}});
  const int ti = static_cast<int>(gl.index_of(t));
  for (const auto& f : homs) {
    CHECK(graph_subgroup(f).size() == 2);
    if (f.is_trivial()) {
      CHECK(static_cast<int>(centralizer_of_image(f).size()) == lambda->order());
      CHECK(f.kernel().size() == 2);
    }
    if (f(1) == ti) {
      // brute force over the six matrices
      int commuting = 0;
      for (const auto& x : gl.elements()) commuting += x * t == t * x;
      CHECK(static_cast<int>(centralizer_of_image(f).size()) == commuting);
      CHECK(commuting == 2);
    }
  }
}

TEST_CASE("fixed-point index") {
  const auto gl = shared(as_finite_group(enumerate_group(GroupKind::GL, 2, Prime(2))));
  const auto idx = fixed_point_index(shared(cyclic(2)), gl);
  CHECK(idx.witness.pass);
  REQUIRE(idx.classes.size() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& c : idx.classes) sizes.insert(c.orbit_size);
  CHECK(sizes == std::multiset<std::size_t>{1, 3});
  CHECK(idx.hom_count == 4);

  const auto ab = fixed_point_index(shared(cyclic(4)), shared(elementary_abelian(2, 2)));
  CHECK(ab.witness.pass);
  for (const auto& c : ab.classes) CHECK(c.orbit_size == 1);

  const auto triv = fixed_point_index(shared(cyclic(1)), gl);
  REQUIRE(triv.classes.size() == 1);
  CHECK(static_cast<int>(triv.classes[0].centralizer.size()) == gl->order());

  const auto gl3 = shared(as_finite_group(enumerate_group(GroupKind::GL, 2, Prime(3))));
  CHECK(fixed_point_index(shared(cyclic(3)), gl3).witness.pass);
}

TEST_CASE("contractible summands") {
  for (auto [g, n, p] : std::vector<std::tuple<FiniteGroup, int, int>>{
           {cyclic(2), 2, 2}, {cyclic(3), 2, 3}, {cyclic(4), 3, 2}, {elementary_abelian(2, 2), 3, 2}}) {
    const auto w = contractible_summand_report(shared(g), n, Prime(p));
    CHECK(w.pass);
    CHECK(w.data["surviving_nontrivial"] == 0);
  }
  const auto w = contractible_summand_report(shared(cyclic(1)), 2, Prime(2));
  CHECK(w.data["summands"].size() == 1);
  CHECK(w.data["summands"][0]["trivial"] == true);
}

TEST_CASE("family of normal subgroups with elementary abelian quotient") {
  const auto v4 = frattini_family(elementary_abelian(2, 2), Prime(2));
  CHECK(v4.witness.pass);
  CHECK(v4.members.size() == 5);
  CHECK(v4.minimal.size() == 1);
  CHECK(*std::max_element(v4.d.begin(), v4.d.end()) == 2);

  const auto c4 = frattini_family(cyclic(4), Prime(2));
  CHECK(c4.members.size() == 2);
  CHECK(c4.minimal == Subgroup{0, 2});
  CHECK(c4.d == std::vector<int>{0, 1});

  const auto q8 = quaternion8();
  const auto fq = frattini_family(q8, Prime(2));
  CHECK(fq.minimal.size() == 2);
  CHECK(fq.d.back() == 2);
  // the minimal member is the center
  for (int z : fq.minimal)
    for (int x = 0; x < 8; ++x) CHECK(q8.mul(z, x) == q8.mul(x, z));

  for (const auto& name : {"D8", "Z2xZ4", "Heis3", "Z3^2", "Z9"}) {
    const auto g = make_pgroup(name);
    CHECK(frattini_family(g, Prime(*g.prime())).witness.pass);
  }
}

TEST_CASE("partition of Hom(G, (Z/p)^n) into Stiefel sets") {
  const auto a = hom_partition_check(cyclic(4), 2, Prime(2));
  CHECK(a.pass);
  CHECK(a.data["hom_count"] == 4);
  const auto b = hom_partition_check(elementary_abelian(2, 2), 1, Prime(2));
  CHECK(b.pass);
  CHECK(b.data["hom_count"] == 4);
  CHECK(hom_partition_check(cyclic(1), 2, Prime(2)).pass);
  for (const auto& name : {"Z4", "Z2^2", "Z2xZ4", "Q8", "D8"})
    for (int n = 1; n <= 3; ++n) CHECK(hom_partition_check(make_pgroup(name), n, Prime(2)).pass);
  for (const auto& name : {"Z9", "Z3^2", "Heis3"})
    for (int n = 1; n <= 2; ++n) CHECK(hom_partition_check(make_pgroup(name), n, Prime(3)).pass);
}

TEST_CASE("graded splitting identity for Hom(G, (Z/p)^n)") {
  const auto a = theorem15_graded_check(cyclic(2), 1, Prime(2), 3);
  CHECK(a.pass);
  for (const auto& row : a.data["conventions"]["homology"]["per_subgroup"]) CHECK(row["formula"] == nlohmann::json({1, 1, 1, 1}));
  const auto b = theorem15_graded_check(cyclic(3), 1, Prime(3), 2);
  CHECK(b.pass);
  for (const auto& row : b.data["conventions"]["homology"]["per_subgroup"])
    if (row["d"] == 1) CHECK(row["homs"] == nlohmann::json({1, 1, 1}));
  for (const auto& g : {cyclic(2), cyclic(4), elementary_abelian(2, 2)}) {
    const auto w = theorem15_graded_check(g, 2, Prime(2), 4);
    CHECK(w.pass);
    CHECK(w.data["conventions"]["plain-substitution"]["aggregate_pass"] == true);
  }
}

TEST_CASE("product compatibility") {
  const auto v4 = elementary_abelian(2, 2);
  CHECK(product_compatibility_check(v4, 1, 1, {0, 1}, {0, 2}, Prime(2)).pass);
  CHECK(product_compatibility_check(v4, 1, 1, {0, 1, 2, 3}, {0, 1, 2, 3}, Prime(2)).pass);
  CHECK(product_compatibility_check(elementary_abelian(3, 2), 1, 1, {0, 1, 2}, {0, 3, 6}, Prime(3)).pass);
  CHECK_THROWS(product_compatibility_check(v4, 1, 1, {0, 1}, {0, 1}, Prime(2)));
}

TEST_CASE("subgroups") {
  CHECK(all_subgroups(elementary_abelian(2, 2)).size() == 5);
  CHECK(all_subgroups(quaternion8()).size() == 6);
  CHECK(all_subgroups(dihedral8()).size() == 10);
  const auto d8 = dihedral8();
  int normal = 0;
  for (const auto& h : all_subgroups(d8)) normal += is_normal(d8, h);
  CHECK(normal == 6);
  const auto sub = subgroup_as_group(d8, {0, 1, 2, 3}, "rotations");
  CHECK(sub.order() == 4);
  CHECK(sub.is_abelian());
}
