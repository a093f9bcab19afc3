#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stein/steinberg.hpp"

using namespace stein;

namespace {

Rational trace(const Mat<Rational>& a) {
  Rational t = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

}  // namespace

TEST_CASE("rank of e_n on the regular module is p^C(n,2)") {
  const std::vector<std::tuple<int, int, std::size_t>> cases = {{1, 2, 1}, {1, 3, 1}, {2, 2, 2}, {2, 3, 3}, {3, 2, 8}};
  for (auto [n, p, expected] : cases) {
    CAPTURE(n);
    CAPTURE(p);
    const auto reg = regular_module(n, Prime(p));
    const auto e = steinberg_idempotent(n, Prime(p), Ring::plocal(p));
    const auto a = act(e, reg);
    // oracle: an idempotent matrix over Q has rank equal to its trace
    CHECK(trace(a) == Rational(static_cast<long>(expected)));
    CHECK(rank_in(Ring::plocal(p), a) == expected);
    CHECK(summand(Idempotent::Steinberg, reg, Ring::prime_field(p)).rank == expected);
    CHECK(summand(Idempotent::Conjugate, reg, Ring::plocal(p)).rank == expected);
  }
}

TEST_CASE("act is a representation") {
  const auto reg = regular_module(2, Prime(3));
  const Ring ring = Ring::plocal(3);
  CHECK_FALSE(homomorphism_defect(reg, gl_generators(2, Prime(3))).has_value());
  const auto x = AlgebraElement::delta(GFMatrix(Prime(3), {{0, 1}, {1, 0}}), ring);
  const auto y = AlgebraElement::delta(GFMatrix(Prime(3), {{1, 2}, {0, 1}}), ring);
  CHECK(act(x * y, reg) == Mat<Rational>(act(x, reg) * act(y, reg)));
}

TEST_CASE("trivial and permutation modules") {
  const Prime p(2);
  const auto triv = trivial_module(2, p);
  CHECK(triv.dim == 1);
  // Sigma_bar kills the trivial module for n >= 2
  CHECK(rank_in(Ring::plocal(2), act(steinberg_idempotent(2, p, Ring::plocal(2)), triv)) == 0);
  // e_1 is the identity on the trivial module
  CHECK(rank_in(Ring::plocal(3), act(steinberg_idempotent(1, Prime(3), Ring::plocal(3)), trivial_module(1, Prime(3)))) == 1);
  CHECK(permutation_module(stiefel_set(2, 1, p)).dim == 3);
  CHECK(regular_module(2, p).dim == 6);
  const GLSet point = GLSet::left_multiplication(2, p, {GFMatrix(p, 2, 0)}, "point");
  const auto pt = permutation_module(point);
  CHECK(pt.dim == 1);
  for (const auto& g : gl_generators(2, p)) CHECK(pt.matrix(g) == triv.matrix(g));
}

TEST_CASE("modular modules refuse characteristic-zero rings") {
  auto m = trivial_module(1, Prime(2));
  m.characteristic = 2;
  CHECK_THROWS_AS(act(steinberg_idempotent(1, Prime(2), Ring::plocal(2)), m), std::invalid_argument);
}

TEST_CASE("Steinberg module") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto st = steinberg_module(n, Prime(p));
    CHECK(st.dim == ipow(p, n * (n - 1) / 2));
    CHECK_FALSE(homomorphism_defect(st, gl_generators(n, Prime(p))).has_value());
  }
}

TEST_CASE("conjugate idempotent and coinvariants") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    const auto reg = regular_module(n, Prime(p));
    CHECK(conjugate_iso_check(n, Prime(p), reg, Ring::plocal(p)).pass);
    CHECK(coinvariants_iso_check(n, Prime(p), reg, Ring::prime_field(p)).pass);
    CHECK(coinvariants_iso_check(n, Prime(p), trivial_module(n, Prime(p)), Ring::prime_field(p)).pass);
  }
}

TEST_CASE("coinvariants of small modules") {
  CHECK(coinvariant_rank(trivial_module(2, Prime(2)), Ring::prime_field(2)) == 1);
  CHECK(coinvariant_rank(regular_module(2, Prime(2)), Ring::prime_field(2)) == 1);
  CHECK(coinvariant_rank(permutation_module(stiefel_set(2, 1, Prime(2))), Ring::plocal(2)) == 1);
}

TEST_CASE("retraction on the regular module") {
  for (auto [i, j, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 1, 3}, {1, 2, 2}}) {
    CAPTURE(i);
    CAPTURE(j);
    CAPTURE(p);
    CHECK(retraction_check(i, j, Prime(p), regular_module(i + j, Prime(p)), Ring::plocal(p)).pass);
  }
}

TEST_CASE("associativity and signed commutativity") {
  CHECK(associativity_check(1, 1, 1, Prime(2), regular_module(3, Prime(2)), Ring::plocal(2)).pass);
  for (auto [i, j, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 1, 3}, {1, 2, 2}}) {
    const auto w = commutativity_check(i, j, Prime(p), regular_module(i + j, Prime(p)), Ring::plocal(p));
    CHECK(w.pass);
  }
}

TEST_CASE("rotation shuffle") {
  const auto s = rotation_shuffle(1, 2, Prime(2));
  CHECK(s * s * s == GFMatrix::identity(Prime(2), 3));
  CHECK_FALSE(s.is_identity());
}
