#pragma once

// Free chain complexes over Z and their homology.

#include <iosfwd>
#include <string>
#include <vector>

#include "stein/exact.hpp"

namespace stein {

/// C_0 .. C_top with boundary[k] : C_k -> C_{k-1}. boundary[0] is the
/// augmentation C_0 -> Z used for reduced homology.
struct ChainComplex {
  std::vector<Eigen::Index> dims;
  std::vector<Mat<Integer>> boundary;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  /// Largest degree k with d_{k-1} d_k != 0, if any.
  std::optional<int> square_defect() const;
};

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

struct HomologyResult {
  bool reduced = true;
  std::vector<HomologyGroup> groups;  // ascending degree; from -1 when reduced

  const HomologyGroup* degree(int k) const;
  /// True when every group is zero.
  bool acyclic() const;
  std::string summary() const;
};

HomologyResult homology(const ChainComplex& c, bool reduced = true);

/// Plain-text export: one block per boundary, "degree rows cols" then "i j value" lines.
void write_chain_complex(std::ostream& os, const ChainComplex& c);

}  // namespace stein
