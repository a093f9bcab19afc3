#pragma once

// Steinberg idempotents, the Steinberg product and Steinberg summands of
// explicit modules.

#include <string>

#include "stein/group_algebra.hpp"
#include "stein/module.hpp"
#include "stein/witness.hpp"

namespace stein {

/// e_n = (1/c_n) Sigma_bar B_bar. Throws std::domain_error over the integers.
AlgebraElement steinberg_idempotent(int n, Prime p, Ring ring);
/// e^_n = (1/c_n) B_bar Sigma_bar.
AlgebraElement conjugate_idempotent(int n, Prime p, Ring ring);
/// e_{i_1} [x] ... [x] e_{i_k} under the block inclusion.
AlgebraElement block_idempotent(const std::vector<int>& blocks, Prime p, Ring ring);
/// Sigma_shuf(i,j) U_bar(i,j): the element implementing the Steinberg product.
AlgebraElement steinberg_product_element(int i, int j, Prime p, Ring ring);
/// The rotation a -> a + j mod (i + j) as a permutation matrix.
GFMatrix rotation_shuffle(int i, int j, Prime p);

/// e_n^2 = e_n and e^_n^2 = e^_n over Z_(p) and F_p, and reduction mod p
/// commutes with the construction.
Witness idempotent_check(int n, Prime p);
/// Sigma_bar B_bar Sigma_bar B_bar = c_n Sigma_bar B_bar.
Witness steinberg_lemma_check(int n, Prime p);
/// The three sum identities relating U(i,j), shuffles and Young subgroups.
Witness shuffle_identities_check(int i, int j, Prime p);
/// Sigma_shuf U_bar (e_i [x] e_j) = (c_{i+j} / (c_i c_j)) e_{i+j}.
Witness product_identity_check(int i, int j, Prime p);

enum class Idempotent { Steinberg, Conjugate };

struct SummandBasis {
  std::string module;
  Idempotent idempotent = Idempotent::Steinberg;
  Ring ring;
  Mat<Rational> basis;  // columns spanning eM
  std::size_t rank = 0;
};

SummandBasis summand(Idempotent e, const ModuleData& m, Ring ring);

/// St_n = R_n e_n on the basis {u w_0 Sigma_bar B_bar : u upper unitriangular}.
/// Throws std::logic_error if some g acts by a non-integral matrix.
ModuleData steinberg_module(int n, Prime p);

Witness conjugate_iso_check(int n, Prime p, const ModuleData& m, Ring ring);
/// rank e_n M = rank (St_n (x) M)_{GL_n}.
Witness coinvariants_iso_check(int n, Prime p, const ModuleData& m, Ring ring);
/// The Steinberg product after the map f is the identity on e_{i+j}M.
Witness retraction_check(int i, int j, Prime p, const ModuleData& m, Ring ring);
Witness associativity_check(int i, int j, int k, Prime p, const ModuleData& m, Ring ring);
/// Signed commutativity on the image of f; the unrestricted triangle is reported too.
Witness commutativity_check(int i, int j, Prime p, const ModuleData& m, Ring ring);

}  // namespace stein
