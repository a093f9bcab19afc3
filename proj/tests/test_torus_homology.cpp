#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "stein/torus_homology.hpp"

using namespace stein;

namespace {

DimensionSeries series(std::vector<long long> c) { return {std::move(c)}; }

// Admissible monomials by direct enumeration over exponent boxes.
long long brute_monomials(int n, int p, int k) {
  long long count = 0;
  const int ext_max = p == 2 ? 0 : 1;
  const int poly_weight = p == 2 ? 1 : 2;
  std::vector<int> ext(static_cast<std::size_t>(n), 0), pol(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (used > k) return;
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int e = 0; e <= ext_max; ++e)
      for (int a = 0; poly_weight * a + e + used <= k; ++a) rec(i + 1, used + e + poly_weight * a);
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("dimensions of torus homology") {
  CHECK(dimension_series(torus_homology(1, Prime(2), 3)) == series({1, 1, 1, 1}));
  CHECK(dimension_series(torus_homology(2, Prime(2), 2)) == series({1, 2, 3}));
  CHECK(dimension_series(torus_homology(1, Prime(3), 2)) == series({1, 1, 1}));
  CHECK(dimension_series(torus_homology(0, Prime(3), 2)) == series({1, 0, 0}));
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const auto d = dimension_series(torus_homology(n, Prime(p), 5));
    for (int k = 0; k <= 5; ++k) CHECK(d.at(k) == brute_monomials(n, p, k));
  }
}

TEST_CASE("the action is a homomorphism and degree 1 is the natural module") {
  for (const auto c : {TorusConvention::Homology, TorusConvention::PlainSubstitution})
    for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
      const auto w = torus_action_check(n, Prime(p), 4, c);
      CHECK(w.pass);
      if (c == TorusConvention::Homology) CHECK(w.data["degree1_is_natural"] == true);
    }
  const auto t = torus_homology(2, Prime(2), 1);
  const GFMatrix g(Prime(2), {{1, 1}, {0, 1}});
  CHECK(t.degrees[1].matrix(g) == g.entries().cast<long>());
}

TEST_CASE("degree zero is trivial and every action is invertible") {
  const auto t = torus_homology(2, Prime(3), 4);
  for (const auto& g : gl_generators(2, Prime(3))) {
    CHECK(t.degrees[0].matrix(g) == IntMat::Identity(1, 1));
    for (const auto& m : t.degrees) CHECK(rank_mod_p(m.matrix(g), 3) == static_cast<std::size_t>(m.dim));
  }
}

TEST_CASE("Kunneth") {
  const auto a = torus_homology(1, Prime(2), 2);
  CHECK(dimension_series(kunneth(a, a)) == series({1, 2, 3}));
  const auto b = torus_homology(1, Prime(3), 2);
  CHECK(dimension_series(kunneth(b, b)).at(2) == 3);
  // unit law
  const auto unit = torus_homology(0, Prime(2), 2);
  CHECK(dimension_series(kunneth(a, unit)) == dimension_series(a));
  CHECK_THROWS(kunneth(a, torus_homology(1, Prime(2), 3)));
  CHECK_THROWS(kunneth(a, b));
  const auto k = kunneth(a, a);
  CHECK_THROWS(k.degrees[1].matrix(GFMatrix(Prime(2), {{1, 1}, {0, 1}})));
  for (const auto c : {TorusConvention::Homology, TorusConvention::PlainSubstitution})
    for (auto [x, y, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {1, 2, 3}, {0, 2, 2}})
      CHECK(kunneth_check(x, y, Prime(p), 4, c).pass);
}

TEST_CASE("Steinberg dimension series") {
  CHECK(steinberg_dim_series(torus_homology(1, Prime(2), 3)) == series({1, 1, 1, 1}));
  // GL_1(F_3) acts by -1 in degrees 1 and 2, so e_1 keeps degree 0 only
  CHECK(steinberg_dim_series(torus_homology(1, Prime(3), 2)) == series({1, 0, 0}));
  CHECK(steinberg_dim_series(torus_homology(2, Prime(2), 0)) == series({0}));
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto t = torus_homology(n, Prime(p), 3);
    CHECK(steinberg_dim_series(t) == steinberg_dim_series(t, Idempotent::Conjugate));
  }
}

TEST_CASE("series arithmetic") {
  CHECK(convolve(series({1, 1, 1}), series({1, 1, 1}), 2) == series({1, 2, 3}));
  CHECK(scale(series({1, 2}), 3) == series({3, 6}));
}

TEST_CASE("graded ranks of Stiefel sets against tensor products") {
  const std::vector<std::tuple<int, int, int>> cases = {{1, 1, 2}, {2, 1, 2}, {2, 2, 2}, {2, 1, 3}, {2, 0, 2}};
  for (const auto f : {FunctorFamily::Trivial, FunctorFamily::Torus})
    for (auto [n, d, p] : cases) {
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(p);
      CHECK(lemma17_rank_check(n, d, Prime(p), f, 4).pass);
    }
  // F trivial, n = d = 2, p = 2: dim e_2 F_2[GL_2] = 2
  const auto w = lemma17_rank_check(2, 2, Prime(2), FunctorFamily::Trivial, 0);
  CHECK(w.data["rhs"][0] == 2);
  const auto v = lemma17_rank_check(2, 1, Prime(2), FunctorFamily::Trivial, 0);
  CHECK(v.data["rhs"][0] == 1);
  CHECK_THROWS(lemma17_rank_check(1, 2, Prime(2), FunctorFamily::Trivial, 1));
}
