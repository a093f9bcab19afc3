#include "stein/chain_complex.hpp"

#include <ostream>
#include <sstream>

namespace stein {

std::optional<int> ChainComplex::square_defect() const {
  for (int k = top_degree(); k >= 1; --k) {
    const auto& outer = boundary[static_cast<std::size_t>(k - 1)];
    const auto& inner = boundary[static_cast<std::size_t>(k)];
    if (outer.size() == 0 || inner.size() == 0) continue;
    const Mat<Integer> prod = outer * inner;
    for (Eigen::Index i = 0; i < prod.size(); ++i)
      if (!prod.data()[i].is_zero()) return k;
  }
  return std::nullopt;
}

const HomologyGroup* HomologyResult::degree(int k) const {
  for (const auto& g : groups)
    if (g.degree == k) return &g;
  return nullptr;
}

bool HomologyResult::acyclic() const {
  for (const auto& g : groups)
    if (!g.is_zero()) return false;
  return true;
}

std::string HomologyResult::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : groups) {
    if (g.is_zero()) continue;
    if (!first) os << ", ";
    first = false;
    os << "H" << g.degree << " = Z^" << g.rank;
    for (const auto& t : g.torsion) os << " + Z/" << t;
  }
  if (first) os << "0";
  return os.str();
}

HomologyResult homology(const ChainComplex& c, bool reduced) {
  const int top = c.top_degree();
  // invariants[k] = Smith invariants of boundary[k], k = 0 .. top.
  std::vector<std::vector<Integer>> invariants(static_cast<std::size_t>(top + 1));
  for (int k = reduced ? 0 : 1; k <= top; ++k) invariants[static_cast<std::size_t>(k)] = smith_invariants(c.boundary[static_cast<std::size_t>(k)]);

  auto rank_of = [&](int k) -> std::size_t {
    if (k < 0 || k > top) return 0;
    return invariants[static_cast<std::size_t>(k)].size();
  };
  auto dim_of = [&](int k) -> std::size_t {
    if (k == -1) return reduced ? 1 : 0;
    if (k < 0 || k > top) return 0;
    return static_cast<std::size_t>(c.dims[static_cast<std::size_t>(k)]);
  };

  HomologyResult out;
  out.reduced = reduced;
  for (int k = reduced ? -1 : 0; k <= std::max(top, 0); ++k) {
    HomologyGroup g;
    g.degree = k;
    g.rank = dim_of(k) - rank_of(k) - rank_of(k + 1);
    if (k + 1 <= top)
      for (const auto& d : invariants[static_cast<std::size_t>(k + 1)])
        if (d > 1) g.torsion.push_back(d);
    out.groups.push_back(std::move(g));
  }
  return out;
}

void write_chain_complex(std::ostream& os, const ChainComplex& c) {
  os << "dims";
  for (auto d : c.dims) os << ' ' << d;
  os << '\n';
  for (std::size_t k = 0; k < c.boundary.size(); ++k) {
    const auto& b = c.boundary[k];
    os << "boundary " << k << ' ' << b.rows() << ' ' << b.cols() << '\n';
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = 0; i < b.rows(); ++i)
        if (!b(i, j).is_zero()) os << i << ' ' << j << ' ' << b(i, j) << '\n';
  }
}

}  // namespace stein
