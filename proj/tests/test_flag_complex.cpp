#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "stein/chain_complex.hpp"
#include "stein/flag_complex.hpp"

using namespace stein;

namespace {

// Chain complex of a simplicial complex given by its maximal faces.
ChainComplex from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> faces;
  for (const auto& f : facets) {
    const int k = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) s.push_back(f[static_cast<std::size_t>(b)]);
      std::sort(s.begin(), s.end());
      if (faces.size() < s.size()) faces.resize(s.size());
      faces[s.size() - 1].insert(s);
    }
  }
  ChainComplex c;
  std::vector<std::vector<std::vector<int>>> lists;
  for (const auto& f : faces) lists.emplace_back(f.begin(), f.end());
  for (const auto& l : lists) c.dims.push_back(static_cast<Eigen::Index>(l.size()));
  c.boundary.push_back(Mat<Integer>::Constant(1, c.dims[0], Integer(1)));
  for (std::size_t k = 1; k < lists.size(); ++k) {
    Mat<Integer> d = Mat<Integer>::Zero(c.dims[k - 1], c.dims[k]);
    for (std::size_t col = 0; col < lists[k].size(); ++col)
      for (std::size_t drop = 0; drop <= k; ++drop) {
        auto face = lists[k][col];
        face.erase(face.begin() + static_cast<long>(drop));
        const auto row = std::lower_bound(lists[k - 1].begin(), lists[k - 1].end(), face) - lists[k - 1].begin();
        d(row, static_cast<Eigen::Index>(col)) = drop % 2 ? -1 : 1;
      }
    c.boundary.push_back(d);
  }
  return c;
}

long long complete_flags(int n, int p) {
  long long c = 1;
  for (int i = 1; i <= n; ++i) c *= (ipow(p, i) - 1) / (p - 1);
  return c;
}

}  // namespace

TEST_CASE("homology of small known complexes") {
  const auto circle = homology(from_facets({{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(circle.degree(1));
  CHECK(circle.degree(1)->rank == 1);
  CHECK(circle.degree(0)->is_zero());

  const auto sphere = homology(from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(sphere.degree(2)->rank == 1);
  CHECK(sphere.degree(1)->is_zero());

  // six-vertex real projective plane
  const auto rp2 = homology(from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
  REQUIRE(rp2.degree(1));
  CHECK(rp2.degree(1)->rank == 0);
  REQUIRE(rp2.degree(1)->torsion.size() == 1);
  CHECK(rp2.degree(1)->torsion[0] == 2);
  CHECK(rp2.degree(2)->is_zero());

  const auto point = homology(from_facets({{0}}));
  CHECK(point.acyclic());
  const auto two_points = homology(from_facets({{0}, {1}}));
  CHECK(two_points.degree(0)->rank == 1);
  const auto unreduced = homology(from_facets({{0}, {1}}), false);
  CHECK(unreduced.degree(0)->rank == 2);
}

TEST_CASE("chain complex export") {
  std::ostringstream os;
  write_chain_complex(os, from_facets({{0, 1}}));
  CHECK_FALSE(os.str().empty());
}

TEST_CASE("flag complex sizes against counting formulas") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto k = build_complex(ComplexMode::B, n, Prime(p));
    long long vertices = 0;
    for (int d = 1; d < n; ++d) vertices += gaussian_binomial(n, d, p);
    CHECK(static_cast<long long>(k.count(0)) == vertices);
    CHECK(static_cast<long long>(k.count(n - 2)) == complete_flags(n, p));
  }
  const auto d = build_complex(ComplexMode::BDiamond, 2, Prime(3));
  CHECK(d.count(0) == 6);
  CHECK(d.count(1) == 8);
}

TEST_CASE("reduced homology of B_n is p^C(n,2) copies of Z in degree n-2") {
  const std::vector<std::tuple<int, int, std::size_t>> cases = {{2, 2, 2}, {2, 3, 3}, {2, 5, 5}, {3, 2, 8}, {3, 3, 27}};
  for (auto [n, p, rank] : cases) {
    CAPTURE(n);
    CAPTURE(p);
    const auto h = homology(chain_complex(build_complex(ComplexMode::B, n, Prime(p))));
    REQUIRE(h.degree(n - 2));
    CHECK(h.degree(n - 2)->rank == rank);
    CHECK(h.degree(n - 2)->torsion.empty());
    for (const auto& g : h.groups)
      if (g.degree != n - 2) CHECK(g.is_zero());
    CHECK(homology_check(ComplexMode::B, n, Prime(p)).pass);
  }
  CHECK(homology_check(ComplexMode::BDiamond, 2, Prime(3)).pass);
  CHECK(homology_check(ComplexMode::BDiamond, 3, Prime(2)).pass);
}

TEST_CASE("s_I at n = 2, p = 2 is <e1> - <e2>") {
  const Prime p(2);
  const auto s = steinberg_cycle(GFMatrix::identity(p, 2));
  GFMatrix e1(p, 2, 1), e2(p, 2, 1);
  e1.set(0, 0, 1);
  e2.set(1, 0, 1);
  FlagChain expected;
  expected[{Subspace::span_cols(e1)}] = 1;
  expected[{Subspace::span_cols(e2)}] = -1;
  CHECK(s == expected);
  CHECK_THROWS_AS(steinberg_cycle(GFMatrix(p, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("Steinberg cycles") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto g = GFMatrix::identity(Prime(p), n);
    CHECK(boundary(steinberg_cycle(g)).empty());
    CHECK(cycles_check(n, Prime(p)).pass);
    CHECK(top_homology_iso_check(n, Prime(p)).pass);
  }
}

TEST_CASE("transverse flags") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto f = Flag::from_columns(GFMatrix::identity(Prime(p), n));
    const auto t = transverse_basis(f);
    CHECK(static_cast<long long>(t.flags.size()) == ipow(p, n * (n - 1) / 2));
    CHECK(t.offset == 1);
  }
}

TEST_CASE("join product, parabolic induction and Bruhat") {
  for (auto [i, j, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {2, 1, 2}}) CHECK(join_product_check(i, j, Prime(p)).pass);
  for (auto [n, i, p] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 2}}) CHECK(prop10_check(n, i, Prime(p)).pass);
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) CHECK(bruhat_check(n, Prime(p)).pass);
}

TEST_CASE("p-subgroup classes and contractible fixed posets") {
  // oracle: classes of nontrivial p-subgroups among all subgroups of GL
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto gl = enumerate_group(GroupKind::GL, n, Prime(p));
    std::vector<MatrixGroup> psubs;
    for (auto& h : all_subgroups(gl)) {
      auto order = static_cast<long long>(h.order());
      while (order % p == 0) order /= p;
      if (order == 1 && h.order() > 1) psubs.push_back(h);
    }
    const auto reps = p_subgroup_representatives(n, Prime(p));
    CHECK(reps.size() == conjugacy_representatives(gl, psubs).size());
    for (const auto& u : reps) CHECK(unipotent_fixed_check(u).pass);
  }
  CHECK(p_subgroup_representatives(3, Prime(2)).size() == 5);
}

TEST_CASE("fixed complex of the full unitriangular group is a cone") {
  const auto u = enumerate_group(GroupKind::UpperUnitriangular, 3, Prime(2));
  const auto h = homology(chain_complex(fixed_complex(3, Prime(2), u.elements())));
  CHECK(h.acyclic());
  const auto whole = homology(chain_complex(fixed_complex(3, Prime(2), {GFMatrix::identity(Prime(2), 3)})));
  CHECK_FALSE(whole.acyclic());
}
