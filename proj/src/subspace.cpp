#include "stein/subspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stein {

Subspace Subspace::span_rows(const GFMatrix& generators) {
  auto r = rref(generators);
  GFMatrix::Storage basis = r.form.entries().topRows(r.rank);
  return {GFMatrix(generators.prime(), basis), std::move(r.pivots)};
}

Subspace Subspace::span_cols(const GFMatrix& generators) { return span_rows(transpose(generators)); }

Subspace Subspace::zero(Prime p, int n) { return {GFMatrix(p, 0, n), {}}; }

Subspace Subspace::whole(Prime p, int n) { return span_rows(GFMatrix::identity(p, n)); }

bool Subspace::contains(const GFMatrix& v) const {
  GFMatrix::Storage stacked(basis_.rows() + 1, basis_.cols());
  stacked << basis_.entries(), v.entries().reshaped<Eigen::RowMajor>(1, basis_.cols());
  return rank(GFMatrix(prime(), stacked)) == dim();
}

bool Subspace::contains(const Subspace& w) const {
  if (w.dim() > dim()) return false;
  GFMatrix::Storage stacked(basis_.rows() + w.basis_.rows(), basis_.cols());
  stacked << basis_.entries(), w.basis_.entries();
  return rank(GFMatrix(prime(), stacked)) == dim();
}

Subspace Subspace::image(const GFMatrix& g) const {
  if (dim() == 0) return *this;
  return span_rows(basis_ * transpose(g));
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_ < b.basis_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.prime(), a.ambient_dim());
  // x^T A = y^T B  <=>  [A^T | -B^T] (x; y) = 0
  const int p = a.prime().value();
  GFMatrix::Storage m(a.ambient_dim(), a.dim() + b.dim());
  m << a.basis().entries().transpose(), (-b.basis().entries().transpose()).unaryExpr([p](int v) { return mod(v, p); });
  const GFMatrix ns = nullspace(GFMatrix(a.prime(), m));
  if (ns.cols() == 0) return Subspace::zero(a.prime(), a.ambient_dim());
  GFMatrix coeffs(a.prime(), GFMatrix::Storage(ns.entries().topRows(a.dim()).transpose()));
  return Subspace::span_rows(coeffs * a.basis());
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  GFMatrix::Storage stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis().entries(), b.basis().entries();
  if (stacked.rows() == 0) return Subspace::zero(a.prime(), a.ambient_dim());
  return Subspace::span_rows(GFMatrix(a.prime(), stacked));
}

long long gaussian_binomial(int n, int k, int p) {
  if (k < 0 || k > n) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(int n, Prime p, std::optional<int> dim) {
  if (dim && (*dim < 0 || *dim > n)) throw std::invalid_argument("enumerate_subspaces: dim out of range");
  std::vector<Subspace> out;
  const int lo = dim ? *dim : 0, hi = dim ? *dim : n;
  for (int k = lo; k <= hi; ++k) {
    if (k == 0) {
      out.push_back(Subspace::zero(p, n));
      continue;
    }
    // Each RREF matrix of rank k: choose pivot columns, then fill the free slots.
    std::vector<int> piv(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free_slots;
        for (int r = 0; r < k; ++r)
          for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_slots.emplace_back(r, c);
        const long long total = ipow(p, static_cast<int>(free_slots.size()));
        for (long long code = 0; code < total; ++code) {
          GFMatrix b(p, k, n);
          for (int r = 0; r < k; ++r) b.set(r, piv[static_cast<std::size_t>(r)], 1);
          long long c = code;
          for (const auto& [r, col] : free_slots) {
            b.set(r, col, c % p);
            c /= p;
          }
          out.push_back(Subspace::span_rows(b));
        }
        return;
      }
      for (int c = start; c <= n - (k - idx); ++c) {
        piv[static_cast<std::size_t>(idx)] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Flag::Flag(std::vector<Subspace> spaces, bool diamond) : ambient_(0), diamond_(diamond), spaces_(std::move(spaces)) {
  if (spaces_.empty()) return;
  ambient_ = spaces_.front().ambient_dim();
  for (std::size_t i = 0; i < spaces_.size(); ++i) {
    const auto& w = spaces_[i];
    if (w.ambient_dim() != ambient_) throw std::invalid_argument("Flag: mixed ambient spaces");
    if (i > 0 && !(w.dim() > spaces_[i - 1].dim() && w.contains(spaces_[i - 1])))
      throw std::invalid_argument("Flag: chain is not strictly increasing");
  }
  if (diamond) {
    if (spaces_.front().is_zero() && spaces_.back().is_whole())
      throw std::invalid_argument("Flag: diamond flag touches both 0 and the whole space");
  } else {
    for (const auto& w : spaces_)
      if (!w.is_proper_nonzero()) throw std::invalid_argument("Flag: members must be proper and nonzero");
  }
}

Flag Flag::from_columns(const GFMatrix& m) {
  std::vector<Subspace> spaces;
  for (Eigen::Index k = 1; k < m.cols(); ++k)
    spaces.push_back(Subspace::span_cols(GFMatrix(m.prime(), GFMatrix::Storage(m.entries().leftCols(k)))));
  Flag f(std::move(spaces));
  f.ambient_ = static_cast<int>(m.rows());
  return f;
}

Flag Flag::image(const GFMatrix& g) const {
  std::vector<Subspace> spaces;
  spaces.reserve(spaces_.size());
  for (const auto& w : spaces_) spaces.push_back(w.image(g));
  Flag f(std::move(spaces), diamond_);
  f.ambient_ = ambient_;
  return f;
}

}  // namespace stein
