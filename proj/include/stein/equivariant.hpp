#pragma once

// Finite p-groups given by Cayley tables, homomorphism enumeration, graph
// subgroups and centralizers, the family of normal subgroups with elementary
// abelian quotient, and graded-dimension checks of the equivariant splitting.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stein/matrix_group.hpp"
#include "stein/subspace.hpp"
#include "stein/torus_homology.hpp"
#include "stein/witness.hpp"

namespace stein {

/// A finite group on elements 0 .. order-1 given by its multiplication table.
class FiniteGroup {
 public:
  /// Validates the group axioms on the full table; throws std::invalid_argument.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<int> generators,
              nlohmann::json labels = nullptr);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  int power(int a, long long e) const;
  int element_order(int a) const;
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// The prime p when the order is a nontrivial power of p.
  std::optional<int> prime() const;
  bool is_abelian() const;
  /// Optional per-element descriptions (e.g. matrices), null if absent.
  const nlohmann::json& labels() const { return labels_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> generators_;
  std::vector<int> inverse_;
  int identity_ = 0;
  nlohmann::json labels_;
};

/// (Z/p)^k; element id sum_i v_i p^i is the vector v.
FiniteGroup elementary_abelian(int p, int k);
FiniteGroup cyclic(int order);
FiniteGroup dihedral8();
FiniteGroup quaternion8();
/// Upper unitriangular 3x3 matrices over F_p.
FiniteGroup heisenberg(int p);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// The elements of a matrix group in index order, with matrix labels.
FiniteGroup as_finite_group(const MatrixGroup& g);
/// {order, table, generators}; the order must be a prime power.
FiniteGroup pgroup_from_json(const nlohmann::json& j);
/// Names: trivial, Z<n> (or C<n>), Z<n>^<k>, Z<n>xZ<m> (any x-separated factors), D8, Q8,
/// Heis<p>, file:<path>. The order must be a prime power (or 1).
FiniteGroup make_pgroup(const std::string& spec);

/// Sorted list of element ids.
using Subgroup = std::vector<int>;

std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The subgroup as a group in its own right, with elements renumbered in sorted order.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name);

struct GroupHom {
  std::shared_ptr<const FiniteGroup> source;
  std::shared_ptr<const FiniteGroup> target;
  std::vector<int> images;  // images[x] = f(x)

  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
  bool is_trivial() const;
  Subgroup kernel() const;
  Subgroup image() const;
};

/// All homomorphisms, sorted by image list. Generator images are chosen first,
/// then extended along words and checked on every pair.
std::vector<GroupHom> enumerate_homs(std::shared_ptr<const FiniteGroup> source, std::shared_ptr<const FiniteGroup> target);

/// {(x, f(x))} as pairs, verified closed under the product of source x target.
std::vector<std::pair<int, int>> graph_subgroup(const GroupHom& f);
Subgroup centralizer_of_image(const GroupHom& f);
/// lambda f(-) lambda^-1.
GroupHom conjugate(const GroupHom& f, int lambda);

struct FixedPointClass {
  GroupHom representative;  // smallest member of its orbit
  Subgroup centralizer;
  std::size_t orbit_size = 0;
};

struct FixedPointIndex {
  std::vector<FixedPointClass> classes;
  std::size_t hom_count = 0;
  Witness witness;  // orbit sums, orbit-stabilizer and centralizer conjugation
};

FixedPointIndex fixed_point_index(std::shared_ptr<const FiniteGroup> h, std::shared_ptr<const FiniteGroup> lambda);

/// For each class of Hom(H, GL_n(F_p)), the homology of the subposet of proper
/// nonzero subspaces fixed by im f; nontrivial classes must be acyclic.
Witness contractible_summand_report(std::shared_ptr<const FiniteGroup> h, int n, Prime p);

struct FrattiniFamily {
  std::vector<Subgroup> members;  // sorted by decreasing size, then ids
  std::vector<int> d;             // d[k] = rank of G / members[k]
  Subgroup minimal;               // F, the intersection of all members
  /// Elements of G whose images form the chosen basis of G/F.
  std::vector<int> quotient_basis;
  Witness witness;
};

FrattiniFamily frattini_family(const FiniteGroup& g, Prime p);
/// Coordinates in F_p^d of x modulo H, relative to an ordered basis of G/H.
std::vector<int> quotient_basis(const FiniteGroup& g, const Subgroup& h, Prime p);

/// Hom(G, (Z/p)^n) as GL_n-set: f is stored as the n x (#generators) matrix of
/// generator images, and g acts by left multiplication.
GLSet hom_set(const FiniteGroup& g, int n, Prime p, const std::optional<Subgroup>& kernel = std::nullopt);

Witness hom_partition_check(const FiniteGroup& g, int n, Prime p);
Witness theorem15_graded_check(const FiniteGroup& g, int n, Prime p, int max_degree);
/// H in Cat(G) of rank m-part, K of rank n-part, transverse: d(H cap K) = d(H) + d(K).
Witness product_compatibility_check(const FiniteGroup& g, int m, int n, const Subgroup& h, const Subgroup& k, Prime p);

}  // namespace stein
