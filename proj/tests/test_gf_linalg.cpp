#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "stein/exact.hpp"
#include "stein/gf_matrix.hpp"
#include "stein/matrix_group.hpp"
#include "stein/subspace.hpp"

using namespace stein;

namespace {

GFMatrix random_matrix(std::mt19937& rng, Prime p, int rows, int cols) {
  std::uniform_int_distribution<int> dist(0, p - 1);
  GFMatrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

// All vectors of F_p^n as n x 1 matrices.
std::vector<GFMatrix> vectors(int n, Prime p) {
  std::vector<GFMatrix> out;
  const long long total = ipow(p, n);
  for (long long code = 0; code < total; ++code) {
    GFMatrix v(p, n, 1);
    long long c = code;
    for (int i = 0; i < n; ++i, c /= p) v.set(i, 0, c % p);
    out.push_back(v);
  }
  return out;
}

// Rank by counting the kernel: |ker A| = p^(cols - rank).
int brute_rank(const GFMatrix& a) {
  const Prime p = a.prime();
  long long kernel = 0;
  for (const auto& v : vectors(static_cast<int>(a.cols()), p))
    if ((a * v).is_zero()) ++kernel;
  int k = 0;
  while (kernel > 1) {
    kernel /= p;
    ++k;
  }
  return static_cast<int>(a.cols()) - k;
}

long long brute_gl_count(int n, Prime p) {
  long long count = 0;
  const long long total = ipow(p, n * n);
  for (long long code = 0; code < total; ++code) {
    GFMatrix m(p, n, n);
    long long c = code;
    for (int i = 0; i < n * n; ++i, c /= p) m.set(i / n, i % n, c % p);
    if (brute_rank(m) == n) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("rank agrees with kernel counting") {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5})
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, Prime(p), 3, 3 + trial % 2);
      CHECK(rank(m) == brute_rank(m));
      const auto r = rref(m);
      CHECK(r.rank == rank(m));
      CHECK(static_cast<int>(r.pivots.size()) == r.rank);
    }
}

TEST_CASE("nullspace is the kernel") {
  std::mt19937 rng(11);
  for (int p : {2, 3})
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, Prime(p), 2, 4);
      const auto ns = nullspace(m);
      CHECK(ns.cols() == 4 - rank(m));
      CHECK((m * ns).is_zero());
    }
}

TEST_CASE("inverse and invertibility") {
  const auto gl = enumerate_group(GroupKind::GL, 2, Prime(3));
  for (const auto& g : gl.elements()) {
    CHECK(is_invertible(g));
    CHECK((g * inverse(g)).is_identity());
    CHECK((inverse(g) * g).is_identity());
  }
  CHECK_FALSE(is_invertible(GFMatrix(Prime(3), {{1, 2}, {2, 1}})));
  CHECK_THROWS(inverse(GFMatrix(Prime(2), {{1, 1}, {1, 1}})));
}

TEST_CASE("GL orders match brute-force counts") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 5}, {2, 2}, {2, 3}}) {
    const long long brute = brute_gl_count(n, Prime(p));
    CHECK(gl_order(n, p) == brute);
    CHECK(static_cast<long long>(enumerate_group(GroupKind::GL, n, Prime(p)).order()) == brute);
  }
  CHECK(gl_order(3, 2) == 168);
  CHECK(enumerate_group(GroupKind::GL, 3, Prime(2)).order() == 168);
}

TEST_CASE("subgroup orders") {
  const Prime p(3);
  CHECK(enumerate_group(GroupKind::Borel, 2, p).order() == 12);
  CHECK(enumerate_group(GroupKind::PermMatrices, 3, Prime(2)).order() == 6);
  CHECK(enumerate_group(GroupKind::UpperUnitriangular, 3, Prime(2)).order() == 8);
  CHECK(enumerate_group(GroupKind::Unipotent, 2, p, 1, 1).order() == 3);
  for (const auto kind : {GroupKind::Borel, GroupKind::PermMatrices, GroupKind::UpperUnitriangular})
    CHECK(enumerate_group(kind, 2, p).verify_axioms());
}

TEST_CASE("permutation matrix convention P e_k = e_sigma(k)") {
  const Prime p(2);
  const std::vector<int> sigma{2, 0, 1};
  const auto pm = GFMatrix::permutation(p, sigma);
  for (int k = 0; k < 3; ++k) {
    GFMatrix e(p, 3, 1);
    e.set(k, 0, 1);
    GFMatrix expected(p, 3, 1);
    expected.set(sigma[static_cast<std::size_t>(k)], 0, 1);
    CHECK(pm * e == expected);
  }
}

TEST_CASE("permutation sign against cycle count") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_permutations(n)) {
      std::vector<bool> seen(s.size(), false);
      int cycles = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(s[j])) seen[j] = true;
      }
      CHECK(permutation_sign(s) == ((n - cycles) % 2 ? -1 : 1));
    }
}

TEST_CASE("subspace counts match Gaussian binomials and brute-force spans") {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (int k = 0; k <= n; ++k) {
      const auto subs = enumerate_subspaces(n, Prime(p), k);
      CHECK(static_cast<long long>(subs.size()) == gaussian_binomial(n, k, p));
    }
    // every subspace is the span of some set of vectors; collect spans of all pairs and triples
    std::set<Subspace> spans;
    const auto vs = vectors(n, Prime(p));
    for (const auto& a : vs)
      for (const auto& b : vs) {
        GFMatrix m(Prime(p), n, 2);
        for (int r = 0; r < n; ++r) {
          m.set(r, 0, a(r, 0));
          m.set(r, 1, b(r, 0));
        }
        spans.insert(Subspace::span_cols(m));
      }
    if (n == 2) CHECK(spans.size() == enumerate_subspaces(n, Prime(p)).size());
  }
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
}

TEST_CASE("dimension formula for sums and intersections") {
  const auto subs = enumerate_subspaces(3, Prime(2));
  for (const auto& u : subs)
    for (const auto& w : subs) {
      CHECK((u + w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
      CHECK((u + w).contains(u));
      CHECK(u.contains(intersect(u, w)));
    }
}

TEST_CASE("exact rational and integer linear algebra") {
  Mat<Rational> a(2, 2);
  a << 1, 2, 2, 4;
  CHECK(rank_rational(a) == 1);
  Mat<Rational> b(2, 2);
  b << 2, 1, 1, 1;
  Vec<Rational> rhs(2);
  rhs << 3, 2;
  const auto x = solve_rational(b, rhs);
  REQUIRE(x);
  CHECK((*x)(0) == 1);
  CHECK((*x)(1) == 1);

  Mat<Integer> s(2, 2);
  s << 2, 4, 6, 8;
  const auto inv = smith_invariants(s);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 4);

  IntMat m(2, 3);
  m << 1, 1, 0, 0, 1, 1;
  CHECK(rank_mod_p(m, 2) == 2);
  const auto ns = nullspace_mod_p(m, 2);
  CHECK(ns.cols() == 1);
  CHECK(((m * ns).unaryExpr([](long v) { return v % 2; })).isZero());
}

TEST_CASE("Bruhat factorization reconstructs GL_2(F_3)") {
  const auto gl = enumerate_group(GroupKind::GL, 2, Prime(3));
  for (const auto& g : gl.elements()) {
    const auto f = bruhat_factor(g);
    CHECK(f.a.is_upper_triangular());
    CHECK(f.b.is_upper_triangular());
    CHECK(f.a * f.sigma * f.b == g);
  }
}

TEST_CASE("Stiefel sets") {
  CHECK(stiefel(2, 1, Prime(2)).size() == 3);
  CHECK(stiefel(2, 2, Prime(2)).size() == 6);
  CHECK(stiefel(3, 2, Prime(2)).size() == 42);
  CHECK(stiefel(1, 2, Prime(2)).empty());
}
