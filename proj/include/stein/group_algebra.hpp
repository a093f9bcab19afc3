#pragma once

// The group algebra of GL_n(F_p) with exact coefficients.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stein/gf_matrix.hpp"
#include "stein/matrix_group.hpp"
#include "stein/scalar.hpp"

namespace stein {

/// A finite formal linear combination of elements of GL_n(F_p). Zero
/// coefficients are never stored; all coefficients lie in one Ring.
class AlgebraElement {
 public:
  AlgebraElement(int n, Prime p, Ring ring) : n_(n), p_(p), ring_(ring) {}

  static AlgebraElement delta(const GFMatrix& g, Ring ring);
  static AlgebraElement identity(int n, Prime p, Ring ring) { return delta(GFMatrix::identity(p, n), ring); }
  /// Sum of the elements of a subgroup, optionally weighted by sign(g) when the
  /// subgroup consists of permutation matrices.
  static AlgebraElement group_sum(const MatrixGroup& g, Ring ring, bool signed_by_permutation = false);

  int degree() const { return n_; }
  Prime prime() const { return p_; }
  const Ring& ring() const { return ring_; }
  std::size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coefficient(const GFMatrix& g) const;
  void add_term(const GFMatrix& g, const Rational& c);
  /// Terms sorted by group element key.
  std::vector<std::pair<GFMatrix, Scalar>> terms() const;
  std::vector<std::pair<std::uint64_t, Rational>> sorted_raw_terms() const;

  /// The same formal sum read in another ring (e.g. Z_(p) -> F_p).
  AlgebraElement change_ring(Ring target) const;
  /// g * x and x * g.
  AlgebraElement left_translate(const GFMatrix& g) const;
  AlgebraElement right_translate(const GFMatrix& g) const;

  AlgebraElement& operator+=(const AlgebraElement& y);
  AlgebraElement& operator-=(const AlgebraElement& y);

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  /// Convolution: (xy)_k = sum_{gh = k} x_g y_h.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

  /// First group element where the two elements differ, with both coefficients.
  struct Difference {
    GFMatrix element;
    Scalar left;
    Scalar right;
  };
  static std::optional<Difference> first_difference(const AlgebraElement& x, const AlgebraElement& y);

  const std::unordered_map<std::uint64_t, Rational>& raw() const { return coeffs_; }

 private:
  void require_compatible(const AlgebraElement& y) const;
  int n_;
  Prime p_;
  Ring ring_;
  std::unordered_map<std::uint64_t, Rational> coeffs_;
};

/// Image of x (x) y under the block inclusion GL_i x GL_j -> GL_{i+j}.
AlgebraElement block_product(const AlgebraElement& x, const AlgebraElement& y);

/// c_n = prod_{i=1..n} (p^i - 1); c_0 = 1.
Integer steinberg_constant(int n, int p);

/// Signed sum over permutation matrices.
AlgebraElement sigma_bar(int n, Prime p, Ring ring);
/// Sum over the Borel subgroup.
AlgebraElement b_bar(int n, Prime p, Ring ring);
/// Sum over U(i,j) = (I_i *; 0 I_j).
AlgebraElement u_bar(int i, int j, Prime p, Ring ring);
/// Signed sum over the (i,j)-shuffles, as permutation matrices in GL_{i+j}.
AlgebraElement shuffle_bar(int i, int j, Prime p, Ring ring);
/// The (i,j)-shuffle permutations: increasing on {0..i-1} and on {i..i+j-1}.
std::vector<std::vector<int>> shuffles(int i, int j);

}  // namespace stein
