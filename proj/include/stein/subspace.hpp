#pragma once

// Canonical subspaces of F_p^n and flags of them.

#include <optional>
#include <vector>

#include "stein/gf_matrix.hpp"

namespace stein {

/// A subspace of F_p^n stored as the RREF of a basis (rows). The zero space
/// has a 0 x n basis.
class Subspace {
 public:
  /// Span of the rows of `generators`.
  static Subspace span_rows(const GFMatrix& generators);
  /// Span of the columns of `generators`.
  static Subspace span_cols(const GFMatrix& generators);
  static Subspace zero(Prime p, int n);
  static Subspace whole(Prime p, int n);

  Prime prime() const { return basis_.prime(); }
  int ambient_dim() const { return static_cast<int>(basis_.cols()); }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const GFMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_dim(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_whole(); }

  /// v is a column vector.
  bool contains(const GFMatrix& v) const;
  bool contains(const Subspace& w) const;

  /// Image g W for g acting on column vectors.
  Subspace image(const GFMatrix& g) const;
  bool is_invariant(const GFMatrix& g) const { return image(g) == *this; }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Subspace(GFMatrix basis, std::vector<int> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  GFMatrix basis_;
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace operator+(const Subspace& a, const Subspace& b);

/// Number of dim-k subspaces of F_p^n.
long long gaussian_binomial(int n, int k, int p);

/// All subspaces of F_p^n of the given dimension (all dimensions if omitted),
/// each exactly once, ordered by dimension then entries. Throws if dim > n.
std::vector<Subspace> enumerate_subspaces(int n, Prime p, std::optional<int> dim = std::nullopt);

/// A strictly increasing chain of subspaces.
class Flag {
 public:
  /// Throws unless the chain is strictly increasing in one ambient space.
  /// With `diamond` set, the chain may touch 0 or the whole space but not both;
  /// otherwise every member must be proper and nonzero.
  explicit Flag(std::vector<Subspace> spaces, bool diamond = false);

  /// Complete flag spanned by leading columns: <v_1> < <v_1,v_2> < ... (n - 1 proper members).
  static Flag from_columns(const GFMatrix& m);

  int ambient_dim() const { return ambient_; }
  const std::vector<Subspace>& spaces() const { return spaces_; }
  std::size_t length() const { return spaces_.size(); }
  bool is_complete() const { return static_cast<int>(spaces_.size()) == ambient_ - 1; }
  Flag image(const GFMatrix& g) const;

  friend bool operator==(const Flag& a, const Flag& b) { return a.spaces_ == b.spaces_; }
  friend bool operator<(const Flag& a, const Flag& b) { return a.spaces_ < b.spaces_; }

 private:
  int ambient_;
  bool diamond_;
  std::vector<Subspace> spaces_;
};

}  // namespace stein
