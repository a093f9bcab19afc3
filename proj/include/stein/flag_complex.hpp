#pragma once

// Order complexes of subspace posets: the flag complex B_n, its unreduced
// suspension B_n^diamond, fixed subposets, Steinberg cycles and products.

#include <map>
#include <optional>
#include <vector>

#include "stein/chain_complex.hpp"
#include "stein/matrix_group.hpp"
#include "stein/module.hpp"
#include "stein/subspace.hpp"
#include "stein/witness.hpp"

namespace stein {

enum class ComplexMode {
  B,         // proper nonzero subspaces
  BDiamond,  // all subspaces; chains may contain 0 or the whole space but not both
  Fixed,     // proper nonzero subspaces invariant under a group
};

/// A simplicial complex whose simplices are chains of subspaces, vertices
/// listed in increasing dimension.
struct OrderComplex {
  Prime p{2};
  int n = 0;
  ComplexMode mode = ComplexMode::B;
  std::vector<Subspace> vertices;
  std::vector<std::vector<std::vector<int>>> simplices;  // simplices[k]: k-simplices as vertex indices

  std::size_t count(int k) const {
    return k >= 0 && k < static_cast<int>(simplices.size()) ? simplices[static_cast<std::size_t>(k)].size() : 0;
  }
  /// Index of a chain among the simplices of its dimension.
  std::optional<std::size_t> index_of(const std::vector<Subspace>& chain) const;

 private:
  friend OrderComplex order_complex(ComplexMode, int, Prime, std::vector<Subspace>);
  std::map<std::vector<int>, std::size_t> lookup_;
  std::map<Subspace, int> vertex_index_;
};

/// Order complex on an explicit vertex set (closed under nothing in particular).
OrderComplex order_complex(ComplexMode mode, int n, Prime p, std::vector<Subspace> vertices);
OrderComplex build_complex(ComplexMode mode, int n, Prime p);
/// Proper nonzero subspaces invariant under every generator.
OrderComplex fixed_complex(int n, Prime p, const std::vector<GFMatrix>& generators);

/// Simplicial chains with alternating-sign boundary, plus the augmentation.
ChainComplex chain_complex(const OrderComplex& k);

/// A chain as a formal sum of subspace chains.
using FlagChain = std::map<std::vector<Subspace>, long>;

FlagChain boundary(const FlagChain& c);
FlagChain translate(const FlagChain& c, const GFMatrix& g);
/// sum over sigma of sign(sigma) <v_s1> < <v_s1, v_s2> < ... for the columns
/// v_1..v_k of an injective matrix (proper nonzero subspaces of their span).
FlagChain column_cycle(const GFMatrix& columns);
/// s_m for m invertible; throws std::domain_error if m is singular.
FlagChain steinberg_cycle(const GFMatrix& m);
/// Coordinates of a chain on the simplices of the given degree.
Vec<Integer> chain_vector(const OrderComplex& k, int degree, const FlagChain& c);

/// Complete flags spanned by leading columns.
FlagChain flag_of(const GFMatrix& m);

struct TransverseBasis {
  int offset = 0;  // W_i meets F_{n-i+offset} in a line
  std::vector<Flag> flags;
  std::vector<GFMatrix> matrices;  // columns w_i with <w_i> = W_i ∩ F_{n-i+offset}
};

/// All complete flags W with W_i ∩ F_{n-i} = 0. The line convention is
/// searched among offsets -1, 0, +1 and the first one for which every
/// s_m contains its own flag with coefficient 1 and no other transverse flag
/// is returned. Throws std::invalid_argument for an incomplete F.
TransverseBasis transverse_basis(const Flag& f);

Witness homology_check(ComplexMode mode, int n, Prime p);
/// Cycle, equivariance and span-rank properties of s_m.
Witness cycles_check(int n, Prime p);
/// H_{n-2}(B_n) in the transverse s-basis.
ModuleData top_homology_module(int n, Prime p);
/// m Sigma_bar B_bar <-> s_m is a well-defined isomorphism of GL_n-modules.
Witness top_homology_iso_check(int n, Prime p);

/// Sign relating the shuffle product of flag chains to the Steinberg product.
inline constexpr int kJoinSign = 1;
/// Shuffle product of chains in complementary subspaces: the simplices of
/// the product of two chains, ordered with the left factor first.
FlagChain join(const FlagChain& left, const Subspace& left_top, const FlagChain& right, const Subspace& right_top);
Witness join_product_check(int i, int j, Prime p);

Witness prop10_check(int n, int i, Prime p);
Witness bruhat_check(int n, Prime p);

/// Contractibility of the fixed poset of a nontrivial p-subgroup.
Witness unipotent_fixed_check(const MatrixGroup& u);
/// Nontrivial p-subgroups of GL_n(F_p) up to conjugacy.
std::vector<MatrixGroup> p_subgroup_representatives(int n, Prime p);

}  // namespace stein
