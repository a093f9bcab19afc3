#pragma once

// Concrete finite-dimensional representations of GL_n(F_p) and the
// linearization of group-algebra elements on them.

#include <functional>
#include <string>
#include <vector>

#include "stein/exact.hpp"
#include "stein/group_algebra.hpp"
#include "stein/matrix_group.hpp"

namespace stein {

/// A representation g -> rho(g). Matrices with characteristic 0 are integral
/// and may be read in any coefficient ring; characteristic p means the matrices
/// are only meaningful mod p.
struct ModuleData {
  std::string name;
  int n = 0;
  Prime p{2};
  int dim = 0;
  int characteristic = 0;
  std::function<IntMat(const GFMatrix&)> rho;
  /// Set for permutation modules: images of the basis indices under g.
  std::function<std::vector<int>(const GFMatrix&)> permutation;

  IntMat matrix(const GFMatrix& g) const;
};

ModuleData trivial_module(int n, Prime p);
/// F[GL_n] with g acting by left multiplication.
ModuleData regular_module(int n, Prime p);
ModuleData permutation_module(const GLSet& set);
/// Diagonal action on M (x) N, basis ordered with the N index fastest.
ModuleData tensor(const ModuleData& m, const ModuleData& n);

/// sum_g x_g rho(g), entries canonical in x.ring(). Throws std::invalid_argument
/// if the module is modular and the ring has characteristic zero, or the groups differ.
Mat<Rational> act(const AlgebraElement& x, const ModuleData& m);
/// rho(g) read in `ring`.
Mat<Rational> act(const GFMatrix& g, const ModuleData& m, const Ring& ring);

std::size_t rank_in(const Ring& ring, const Mat<Rational>& a);
Mat<Rational> column_basis_in(const Ring& ring, const Mat<Rational>& a);
/// a == b after reading both in `ring`.
bool equal_in(const Ring& ring, const Mat<Rational>& a, const Mat<Rational>& b);
Mat<Rational> canonical_in(const Ring& ring, Mat<Rational> a);

/// First generator pair (g, h) with rho(g) rho(h) != rho(gh), if any.
std::optional<std::pair<GFMatrix, GFMatrix>> homomorphism_defect(const ModuleData& m, const std::vector<GFMatrix>& gens);

/// Rank of the coinvariants M_G = M / span{g x - x}, computed from generators.
std::size_t coinvariant_rank(const ModuleData& m, const Ring& ring);

}  // namespace stein
