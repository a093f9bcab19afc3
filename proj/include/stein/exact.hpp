#pragma once

// Exact dense linear algebra over Z, Q and F_p.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace stein {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<long>;

struct Echelon {
  std::size_t rank = 0;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Row echelon form over Q by fraction-free (Bareiss) elimination.
/// Denominators are cleared row by row; only the pivot structure is returned.
Echelon echelon_rational(const Mat<Rational>& a);
Echelon echelon_integer(Mat<Integer> a);
Echelon echelon_mod_p(IntMat a, int p);

std::size_t rank_rational(const Mat<Rational>& a);
std::size_t rank_mod_p(const IntMat& a, int p);

/// Columns of `a` at the pivot positions of its echelon form (a basis of the column space).
Mat<Rational> column_basis_rational(const Mat<Rational>& a);
IntMat column_basis_mod_p(const IntMat& a, int p);

/// Unique x with a x = b, if a has full column rank and b lies in its column space.
std::optional<Vec<Rational>> solve_rational(const Mat<Rational>& a, const Vec<Rational>& b);
std::optional<Mat<Rational>> solve_rational(const Mat<Rational>& a, const Mat<Rational>& b);

/// Basis of {x : a x = 0 mod p}, one vector per column.
IntMat nullspace_mod_p(const IntMat& a, int p);

Mat<Rational> to_rational(const IntMat& a);
/// Reduces integral rational entries mod p; throws if an entry has denominator divisible by p.
IntMat reduce_mod_p(const Mat<Rational>& a, int p);

/// Invariant factors of an integer matrix (Smith normal form diagonal, nonzero part).
std::vector<Integer> smith_invariants(Mat<Integer> a);

}  // namespace stein
