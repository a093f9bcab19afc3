#pragma once

// The graded GL_n(F_p)-module H_*((Z/p)^n; F_p), graded tensor products and
// Steinberg-summand dimension series.

#include <string>
#include <vector>

#include "stein/module.hpp"
#include "stein/steinberg.hpp"
#include "stein/witness.hpp"

namespace stein {

/// How g acts on the monomial basis. With Subst(g) the algebra map
/// x_i -> sum_j g_ij x_j on cohomology:
///   Homology:          rho(g) = Subst(g)^T (the dual of the natural cohomology action; degree 1 is F_p^n)
///   PlainSubstitution: rho(g) = Subst(g^-1) (the natural cohomology action itself)
enum class TorusConvention { Homology, PlainSubstitution };
std::string to_string(TorusConvention c);

struct GradedGLModule {
  std::string name;
  int n = 0;
  Prime p{2};
  int max_degree = 0;
  std::vector<ModuleData> degrees;  // degrees[k] for k = 0 .. max_degree
};

struct DimensionSeries {
  std::vector<long long> coefficients;

  long long at(std::size_t k) const { return k < coefficients.size() ? coefficients[k] : 0; }
  friend bool operator==(const DimensionSeries& a, const DimensionSeries& b) { return a.coefficients == b.coefficients; }
  nlohmann::json to_json() const { return coefficients; }
};

/// Truncated product of power series.
DimensionSeries convolve(const DimensionSeries& a, const DimensionSeries& b, int max_degree);
DimensionSeries scale(const DimensionSeries& a, long long s);

/// Monomial basis, degree k: p = 2 polynomial on n degree-1 generators; odd p
/// exterior on degree-1 generators tensor polynomial on degree-2 generators.
/// n = 0 gives the trivial module in degree 0 (a point).
GradedGLModule torus_homology(int n, Prime p, int max_degree, TorusConvention c = TorusConvention::Homology);
/// F_p in degree 0 with trivial action (the sphere S^0).
GradedGLModule trivial_graded(int n, Prime p, int max_degree);
DimensionSeries dimension_series(const GradedGLModule& m);

/// Degree-wise M (x) G_k.
GradedGLModule tensor(const ModuleData& m, const GradedGLModule& g);
/// Module for GL_a x GL_b inside GL_{a+b}: degree k is sum_{i+j=k} A_i (x) B_j.
/// The action is defined on block-diagonal matrices only.
GradedGLModule kunneth(const GradedGLModule& a, const GradedGLModule& b);

/// Degree-wise rank over F_p of the idempotent; n = 0 uses e_0 = 1.
DimensionSeries steinberg_dim_series(const GradedGLModule& m, Idempotent e = Idempotent::Steinberg);

/// Homomorphism property on generators, dimension counts and (at degree 1 under
/// the homology convention) agreement with the natural module F_p^n.
Witness torus_action_check(int n, Prime p, int max_degree, TorusConvention c);
/// Explicit monomial isomorphism between torus(a + b) and kunneth(torus(a), torus(b)),
/// intertwining the block-diagonal generators.
Witness kunneth_check(int a, int b, Prime p, int max_degree, TorusConvention c);

enum class FunctorFamily { Trivial, Torus };
std::string to_string(FunctorFamily f);
/// Graded F_p-dimension shadow of the Stiefel-variety lemma.
Witness lemma17_rank_check(int n, int d, Prime p, FunctorFamily f, int max_degree,
                           TorusConvention c = TorusConvention::Homology);

}  // namespace stein
