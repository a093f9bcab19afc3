#pragma once

// Dense matrices over F_p.

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "stein/prime.hpp"

namespace stein {

class GFMatrix {
 public:
  using Storage = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  GFMatrix(Prime p, Eigen::Index rows, Eigen::Index cols);
  /// Entries are reduced mod p.
  GFMatrix(Prime p, Storage entries);
  GFMatrix(Prime p, std::initializer_list<std::initializer_list<int>> rows);

  static GFMatrix identity(Prime p, int n);
  static GFMatrix zero(Prime p, Eigen::Index rows, Eigen::Index cols) { return {p, rows, cols}; }
  /// Permutation matrix with P e_k = e_{sigma[k]} (0-based images).
  static GFMatrix permutation(Prime p, const std::vector<int>& sigma);
  static GFMatrix from_key(Prime p, int rows, int cols, std::uint64_t key);

  Prime prime() const { return p_; }
  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  int operator()(Eigen::Index i, Eigen::Index j) const { return a_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, long long v) { a_(i, j) = mod(v, p_.value()); }
  const Storage& entries() const { return a_; }

  /// Row-major base-p packing of the entries; requires p^(rows*cols) < 2^64.
  std::uint64_t key() const;
  /// Row-major entry list, usable as an ordered map key for any size.
  std::vector<int> entry_list() const;

  GFMatrix col(Eigen::Index j) const;
  GFMatrix row(Eigen::Index i) const;
  bool is_zero() const { return a_.isZero(); }
  bool is_identity() const;
  bool is_upper_triangular() const;

  friend bool operator==(const GFMatrix& x, const GFMatrix& y) {
    return x.p_ == y.p_ && x.a_.rows() == y.a_.rows() && x.a_.cols() == y.a_.cols() && x.a_ == y.a_;
  }
  friend bool operator<(const GFMatrix& x, const GFMatrix& y) { return x.entry_list() < y.entry_list(); }

 private:
  Prime p_;
  Storage a_;
};

GFMatrix operator*(const GFMatrix& x, const GFMatrix& y);
GFMatrix operator+(const GFMatrix& x, const GFMatrix& y);
GFMatrix operator-(const GFMatrix& x, const GFMatrix& y);
GFMatrix transpose(const GFMatrix& m);
std::ostream& operator<<(std::ostream& os, const GFMatrix& m);

struct RrefResult {
  GFMatrix form;
  int rank;
  std::vector<int> pivots;
};

/// Reduced row echelon form: pivots equal to 1, zero above and below, zero rows last.
RrefResult rref(const GFMatrix& m);
int rank(const GFMatrix& m);
bool is_invertible(const GFMatrix& m);
/// Throws std::domain_error if m is singular or non-square.
GFMatrix inverse(const GFMatrix& m);
/// Basis of the right nullspace {x : m x = 0}, as columns.
GFMatrix nullspace(const GFMatrix& m);

/// Block diagonal matrix diag(a, b); a and b may be rectangular.
GFMatrix block_diag(const GFMatrix& a, const GFMatrix& b);
/// Block inclusion GL_i x GL_j -> GL_{i+j}; throws if a or b is not square.
GFMatrix block_embed(const GFMatrix& a, const GFMatrix& b);

/// Sign of a permutation given by its images.
int permutation_sign(const std::vector<int>& sigma);
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace stein
