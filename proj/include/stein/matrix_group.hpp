#pragma once

// Finite matrix groups over F_p, their distinguished subgroups, finite GL_n-sets
// and the Bruhat factorization.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "stein/gf_matrix.hpp"

namespace stein {

/// A finite group of n x n matrices, elements sorted by key.
class MatrixGroup {
 public:
  /// Takes an element list that is already closed under multiplication.
  MatrixGroup(int n, Prime p, std::vector<GFMatrix> elements, std::string name = {});
  /// Closure of a generating set.
  static MatrixGroup generated_by(int n, Prime p, const std::vector<GFMatrix>& generators, std::string name = {});

  int degree() const { return n_; }
  Prime prime() const { return p_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GFMatrix>& elements() const { return elements_; }
  const GFMatrix& element(std::size_t i) const { return elements_[i]; }

  bool contains(const GFMatrix& g) const { return index_.count(g.key()) != 0; }
  /// Throws std::out_of_range if g is not an element.
  std::size_t index_of(const GFMatrix& g) const;
  std::size_t identity_index() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  /// Exhaustive closure and identity check; inverse check on every element.
  bool verify_axioms() const;

 private:
  int n_;
  Prime p_;
  std::string name_;
  std::vector<GFMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t identity_ = 0;
};

enum class GroupKind {
  GL,                  // GL_n
  Borel,               // invertible upper triangular
  PermMatrices,        // Sigma_n
  Unipotent,           // U(i,j) = (I_i *; 0 I_j), i + j = n
  Parabolic,           // P_W, W spanned by the first i coordinates, 0 < i < n
  BlockGL,             // GL_i x GL_j block diagonal, i + j = n
  UpperUnitriangular,  // the Sylow p-subgroup
};

/// Throws std::invalid_argument on inconsistent block parameters.
MatrixGroup enumerate_group(GroupKind kind, int n, Prime p, int i = 0, int j = 0);

/// |GL_n(F_p)| = prod_{k<n} (p^n - p^k).
long long gl_order(int n, int p);

/// Elementary transvections I + E_ab and diag(w, 1, ..., 1), w a primitive root.
std::vector<GFMatrix> gl_generators(int n, Prime p);

/// All n x d matrices of rank d, in lexicographic column order. Empty if d > n.
std::vector<GFMatrix> stiefel(int n, int d, Prime p);

/// A finite set of matrices with a left GL_n-action.
class GLSet {
 public:
  using Action = std::function<GFMatrix(const GFMatrix& g, const GFMatrix& x)>;

  GLSet(int n, Prime p, std::vector<GFMatrix> elements, Action action, std::string name = {});
  /// Left multiplication x -> g x on a set of n x d matrices.
  static GLSet left_multiplication(int n, Prime p, std::vector<GFMatrix> elements, std::string name = {});

  int degree() const { return n_; }
  Prime prime() const { return p_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GFMatrix>& elements() const { return elements_; }
  /// Index of g . elements[i]; throws if the action leaves the set.
  std::size_t act(const GFMatrix& g, std::size_t i) const;
  std::size_t index_of(const GFMatrix& x) const;

 private:
  int n_;
  Prime p_;
  std::string name_;
  std::vector<GFMatrix> elements_;
  Action action_;
  std::map<std::vector<int>, std::size_t> index_;
};

GLSet stiefel_set(int n, int d, Prime p);

struct BruhatFactors {
  GFMatrix a;                // upper triangular
  GFMatrix sigma;            // permutation matrix
  GFMatrix b;                // upper triangular
  std::vector<int> permutation;
};

/// m = a * sigma * b with a, b in B_n. Throws std::domain_error if m is singular.
BruhatFactors bruhat_factor(const GFMatrix& m);

}  // namespace stein

namespace stein {

/// Every subgroup of g exactly once, ordered by order and then by element keys.
std::vector<MatrixGroup> all_subgroups(const MatrixGroup& g);
/// {x in ambient : x h x^-1 = h}.
MatrixGroup normalizer(const MatrixGroup& ambient, const MatrixGroup& h);
/// x h x^-1 as a group.
MatrixGroup conjugate(const MatrixGroup& h, const GFMatrix& x);
/// One representative of each ambient-conjugacy class among the given subgroups,
/// keeping the first member of each class in input order.
std::vector<MatrixGroup> conjugacy_representatives(const MatrixGroup& ambient, const std::vector<MatrixGroup>& subgroups);

}  // namespace stein
