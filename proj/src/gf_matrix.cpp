#include "stein/gf_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "stein/exact.hpp"

namespace stein {

GFMatrix::GFMatrix(Prime p, Eigen::Index rows, Eigen::Index cols) : p_(p), a_(Storage::Zero(rows, cols)) {}

GFMatrix::GFMatrix(Prime p, Storage entries) : p_(p), a_(std::move(entries)) {
  a_ = a_.unaryExpr([q = p.value()](int v) { return mod(v, q); });
}

GFMatrix::GFMatrix(Prime p, std::initializer_list<std::initializer_list<int>> rows) : p_(p) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  a_ = Storage::Zero(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw std::invalid_argument("GFMatrix: ragged rows");
    Eigen::Index j = 0;
    for (int v : row) a_(i, j++) = mod(v, p.value());
    ++i;
  }
}

GFMatrix GFMatrix::identity(Prime p, int n) { return {p, Storage::Identity(n, n)}; }

GFMatrix GFMatrix::permutation(Prime p, const std::vector<int>& sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.size());
  GFMatrix m(p, n, n);
  for (Eigen::Index k = 0; k < n; ++k) m.a_(sigma[static_cast<std::size_t>(k)], k) = 1;
  return m;
}

std::uint64_t GFMatrix::key() const {
  std::uint64_t k = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(p_.value());
  long double bound = 1;
  for (Eigen::Index i = 0; i < a_.size(); ++i) bound *= static_cast<long double>(base);
  if (bound >= 1.8e19L) throw std::overflow_error("GFMatrix::key: matrix too large to pack");
  for (Eigen::Index i = 0; i < a_.rows(); ++i)
    for (Eigen::Index j = 0; j < a_.cols(); ++j) k = k * base + static_cast<std::uint64_t>(a_(i, j));
  return k;
}

GFMatrix GFMatrix::from_key(Prime p, int rows, int cols, std::uint64_t key) {
  GFMatrix m(p, rows, cols);
  const auto base = static_cast<std::uint64_t>(p.value());
  for (int i = rows - 1; i >= 0; --i)
    for (int j = cols - 1; j >= 0; --j) {
      m.a_(i, j) = static_cast<int>(key % base);
      key /= base;
    }
  return m;
}

std::vector<int> GFMatrix::entry_list() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a_.size()) + 2);
  out.push_back(static_cast<int>(a_.rows()));
  out.push_back(static_cast<int>(a_.cols()));
  for (Eigen::Index i = 0; i < a_.rows(); ++i)
    for (Eigen::Index j = 0; j < a_.cols(); ++j) out.push_back(a_(i, j));
  return out;
}

GFMatrix GFMatrix::col(Eigen::Index j) const { return {p_, Storage(a_.col(j))}; }
GFMatrix GFMatrix::row(Eigen::Index i) const { return {p_, Storage(a_.row(i))}; }

bool GFMatrix::is_identity() const { return a_.rows() == a_.cols() && a_.isIdentity(); }

bool GFMatrix::is_upper_triangular() const {
  for (Eigen::Index i = 0; i < a_.rows(); ++i)
    for (Eigen::Index j = 0; j < std::min(i, a_.cols()); ++j)
      if (a_(i, j) != 0) return false;
  return true;
}

GFMatrix operator*(const GFMatrix& x, const GFMatrix& y) {
  if (!(x.prime() == y.prime())) throw std::invalid_argument("GFMatrix: prime mismatch");
  if (x.cols() != y.rows()) throw std::invalid_argument("GFMatrix: dimension mismatch in product");
  return {x.prime(), GFMatrix::Storage(x.entries() * y.entries())};
}

GFMatrix operator+(const GFMatrix& x, const GFMatrix& y) {
  if (!(x.prime() == y.prime()) || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("GFMatrix: shape or prime mismatch in sum");
  return {x.prime(), GFMatrix::Storage(x.entries() + y.entries())};
}

GFMatrix operator-(const GFMatrix& x, const GFMatrix& y) {
  if (!(x.prime() == y.prime()) || x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("GFMatrix: shape or prime mismatch in difference");
  return {x.prime(), GFMatrix::Storage(x.entries() - y.entries())};
}

GFMatrix transpose(const GFMatrix& m) { return {m.prime(), GFMatrix::Storage(m.entries().transpose())}; }

std::ostream& operator<<(std::ostream& os, const GFMatrix& m) {
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RrefResult rref(const GFMatrix& m) {
  const int p = m.prime().value();
  GFMatrix::Storage a = m.entries();
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const int inv = inv_mod(a(r, c), p);
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) = static_cast<int>(1LL * a(r, j) * inv % p);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const long long f = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = mod(a(i, j) - f * a(r, j), p);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {GFMatrix(m.prime(), a), static_cast<int>(r), std::move(pivots)};
}

int rank(const GFMatrix& m) { return rref(m).rank; }

bool is_invertible(const GFMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

GFMatrix inverse(const GFMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix is not square");
  const auto n = m.rows();
  GFMatrix::Storage aug(n, 2 * n);
  aug << m.entries(), GFMatrix::Storage::Identity(n, n);
  const auto r = rref(GFMatrix(m.prime(), aug));
  if (r.rank < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  return {m.prime(), GFMatrix::Storage(r.form.entries().block(0, n, n, n))};
}

GFMatrix nullspace(const GFMatrix& m) {
  IntMat a = m.entries().cast<long>();
  const IntMat ns = nullspace_mod_p(a, m.prime().value());
  return {m.prime(), GFMatrix::Storage(ns.cast<int>())};
}

GFMatrix block_diag(const GFMatrix& a, const GFMatrix& b) {
  if (!(a.prime() == b.prime())) throw std::invalid_argument("block_diag: prime mismatch");
  GFMatrix::Storage s = GFMatrix::Storage::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  s.block(0, 0, a.rows(), a.cols()) = a.entries();
  s.block(a.rows(), a.cols(), b.rows(), b.cols()) = b.entries();
  return {a.prime(), s};
}

GFMatrix block_embed(const GFMatrix& a, const GFMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw std::invalid_argument("block_embed: inputs must be square");
  return block_diag(a, b);
}

int permutation_sign(const std::vector<int>& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace stein
