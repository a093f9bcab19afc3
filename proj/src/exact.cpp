#include "stein/exact.hpp"

#include <stdexcept>
#include <utility>

#include "stein/prime.hpp"

namespace stein {

namespace {

Mat<Integer> clear_denominators(const Mat<Rational>& a) {
  Mat<Integer> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Integer d = boost::multiprecision::denominator(a(i, j));
      if (d != 1) l = boost::multiprecision::lcm(l, d);
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Rational& q = a(i, j);
      out(i, j) = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
    }
  }
  return out;
}

}  // namespace

Echelon echelon_integer(Mat<Integer> a) {
  Echelon e;
  const Eigen::Index m = a.rows(), n = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Integer pv = a(r, c);
    for (Eigen::Index i = r + 1; i < m; ++i) {
      const Integer f = a(i, c);
      for (Eigen::Index j = c + 1; j < n; ++j) {
        Integer v = pv * a(i, j);
        if (!f.is_zero()) v -= f * a(r, j);
        a(i, j) = v / prev;
      }
      a(i, c) = 0;
    }
    prev = pv;
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = static_cast<std::size_t>(r);
  return e;
}

Echelon echelon_rational(const Mat<Rational>& a) { return echelon_integer(clear_denominators(a)); }

Echelon echelon_mod_p(IntMat a, int p) {
  Echelon e;
  const Eigen::Index m = a.rows(), n = a.cols();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = mod(a(i, j), p);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const long inv = inv_mod(static_cast<int>(a(r, c)), p);
    for (Eigen::Index j = c; j < n; ++j) a(r, j) = a(r, j) * inv % p;
    for (Eigen::Index i = r + 1; i < m; ++i) {
      const long f = a(i, c);
      if (f == 0) continue;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) = mod(a(i, j) - f * a(r, j), p);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = static_cast<std::size_t>(r);
  return e;
}

std::size_t rank_rational(const Mat<Rational>& a) { return echelon_rational(a).rank; }
std::size_t rank_mod_p(const IntMat& a, int p) { return echelon_mod_p(a, p).rank; }

Mat<Rational> column_basis_rational(const Mat<Rational>& a) {
  const Echelon e = echelon_rational(a);
  Mat<Rational> out(a.rows(), static_cast<Eigen::Index>(e.rank));
  for (std::size_t k = 0; k < e.rank; ++k) out.col(static_cast<Eigen::Index>(k)) = a.col(e.pivots[k]);
  return out;
}

IntMat column_basis_mod_p(const IntMat& a, int p) {
  const Echelon e = echelon_mod_p(a, p);
  IntMat out(a.rows(), static_cast<Eigen::Index>(e.rank));
  for (std::size_t k = 0; k < e.rank; ++k) {
    const auto c = e.pivots[k];
    for (Eigen::Index i = 0; i < a.rows(); ++i) out(i, static_cast<Eigen::Index>(k)) = mod(a(i, c), p);
  }
  return out;
}

std::optional<Mat<Rational>> solve_rational(const Mat<Rational>& a, const Mat<Rational>& b) {
  const Eigen::Index m = a.rows(), n = a.cols(), k = b.cols();
  Mat<Rational> aug(m, n + k);
  aug << a, b;
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivots;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (!aug(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;  // rank deficient
    if (piv != r) aug.row(piv).swap(aug.row(r));
    const Rational inv = 1 / aug(r, c);
    for (Eigen::Index j = c; j < n + k; ++j) aug(r, j) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      const Rational f = aug(i, c);
      for (Eigen::Index j = c; j < n + k; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < n) return std::nullopt;
  for (Eigen::Index i = r; i < m; ++i)
    for (Eigen::Index j = n; j < n + k; ++j)
      if (!aug(i, j).is_zero()) return std::nullopt;  // inconsistent
  return Mat<Rational>(aug.block(0, n, n, k));
}

std::optional<Vec<Rational>> solve_rational(const Mat<Rational>& a, const Vec<Rational>& b) {
  Mat<Rational> bm = b;
  auto x = solve_rational(a, bm);
  if (!x) return std::nullopt;
  return Vec<Rational>(x->col(0));
}

IntMat nullspace_mod_p(const IntMat& a0, int p) {
  IntMat a = a0;
  const Eigen::Index m = a.rows(), n = a.cols();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = mod(a(i, j), p);
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const long inv = inv_mod(static_cast<int>(a(r, c)), p);
    for (Eigen::Index j = 0; j < n; ++j) a(r, j) = a(r, j) * inv % p;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const long f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = mod(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  IntMat out = IntMat::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const auto col = static_cast<Eigen::Index>(f);
    out(free[f], col) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      out(pivots[k], col) = mod(-a(static_cast<Eigen::Index>(k), free[f]), p);
  }
  return out;
}

Mat<Rational> to_rational(const IntMat& a) {
  Mat<Rational> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = Rational(a(i, j));
  return out;
}

IntMat reduce_mod_p(const Mat<Rational>& a, int p) {
  IntMat out(a.rows(), a.cols());
  const Integer pp = p;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Integer num = boost::multiprecision::numerator(a(i, j));
      const Integer den = boost::multiprecision::denominator(a(i, j));
      const Integer dr = den % pp;
      if (dr.is_zero()) throw std::domain_error("reduce_mod_p: denominator divisible by p");
      const long n = static_cast<long>(Integer(num % pp).convert_to<long long>());
      const long d = static_cast<long>(dr.convert_to<long long>());
      out(i, j) = static_cast<long>(mod(static_cast<long long>(mod(n, p)) * inv_mod(static_cast<int>(d), p), p));
    }
  return out;
}

std::vector<Integer> smith_invariants(Mat<Integer> a) {
  using boost::multiprecision::abs;
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<Integer> diag;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // Pivot: a unit if one exists, otherwise the smallest nonzero entry.
    Eigen::Index pi = -1, pj = -1;
    Integer best;
    for (Eigen::Index j = t; j < n && !(pi >= 0 && best == 1); ++j)
      for (Eigen::Index i = t; i < m; ++i) {
        if (a(i, j).is_zero()) continue;
        Integer v = abs(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi < 0) break;
    if (pi != t) a.row(pi).swap(a.row(t));
    if (pj != t) a.col(pj).swap(a.col(t));
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        const Integer q = a(i, t) / a(t, t);
        if (!q.is_zero())
          for (Eigen::Index j = t; j < n; ++j)
            if (!a(t, j).is_zero()) a(i, j) -= q * a(t, j);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        const Integer q = a(t, j) / a(t, t);
        if (!q.is_zero())
          for (Eigen::Index i = t; i < m; ++i)
            if (!a(i, t).is_zero()) a(i, j) -= q * a(i, t);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (clean) break;
      // Move the smallest remaining entry of row/column t onto the diagonal.
      Integer small = abs(a(t, t));
      Eigen::Index si = -1, sj = -1;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (!a(i, t).is_zero() && abs(a(i, t)) < small) {
          small = abs(a(i, t));
          si = i;
          sj = -1;
        }
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (!a(t, j).is_zero() && abs(a(t, j)) < small) {
          small = abs(a(t, j));
          sj = j;
          si = -1;
        }
      if (si >= 0) a.row(si).swap(a.row(t));
      if (sj >= 0) a.col(sj).swap(a.col(t));
    }
    diag.push_back(abs(a(t, t)));
  }
  bool all_units = true;
  for (const auto& d : diag) all_units = all_units && d == 1;
  if (!all_units) {
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        const Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
        const Integer l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  }
  return diag;
}

}  // namespace stein
