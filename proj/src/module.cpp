#include "stein/module.hpp"

#include <memory>
#include <stdexcept>

namespace stein {

IntMat ModuleData::matrix(const GFMatrix& g) const {
  if (rho) return rho(g);
  const auto perm = permutation(g);
  IntMat out = IntMat::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) out(perm[static_cast<std::size_t>(k)], k) = 1;
  return out;
}

ModuleData trivial_module(int n, Prime p) {
  ModuleData m{"trivial", n, p, 1, 0, nullptr, [](const GFMatrix&) { return std::vector<int>{0}; }};
  return m;
}

ModuleData permutation_module(const GLSet& set) {
  auto shared = std::make_shared<GLSet>(set);
  ModuleData m;
  m.name = "F[" + set.name() + "]";
  m.n = set.degree();
  m.p = set.prime();
  m.dim = static_cast<int>(set.size());
  m.permutation = [shared](const GFMatrix& g) {
    std::vector<int> out(shared->size());
    for (std::size_t k = 0; k < shared->size(); ++k) out[k] = static_cast<int>(shared->act(g, k));
    return out;
  };
  return m;
}

ModuleData regular_module(int n, Prime p) {
  auto group = std::make_shared<MatrixGroup>(enumerate_group(GroupKind::GL, n, p));
  ModuleData m;
  m.name = "regular";
  m.n = n;
  m.p = p;
  m.dim = static_cast<int>(group->order());
  m.permutation = [group](const GFMatrix& g) {
    const auto gi = group->index_of(g);
    std::vector<int> out(group->order());
    for (std::size_t k = 0; k < group->order(); ++k) out[k] = static_cast<int>(group->mul(gi, k));
    return out;
  };
  return m;
}

ModuleData tensor(const ModuleData& a, const ModuleData& b) {
  if (a.n != b.n || !(a.p == b.p)) throw std::invalid_argument("tensor: modules for different groups");
  ModuleData m;
  m.name = a.name + " (x) " + b.name;
  m.n = a.n;
  m.p = a.p;
  m.dim = a.dim * b.dim;
  m.characteristic = std::max(a.characteristic, b.characteristic);
  if (a.permutation && b.permutation && !a.rho && !b.rho) {
    m.permutation = [a, b](const GFMatrix& g) {
      const auto pa = a.permutation(g), pb = b.permutation(g);
      std::vector<int> out;
      out.reserve(pa.size() * pb.size());
      for (int x : pa)
        for (int y : pb) out.push_back(x * static_cast<int>(pb.size()) + y);
      return out;
    };
    return m;
  }
  const int p = m.characteristic;
  m.rho = [a, b, p](const GFMatrix& g) {
    const IntMat ma = a.matrix(g), mb = b.matrix(g);
    IntMat out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (Eigen::Index i = 0; i < ma.rows(); ++i)
      for (Eigen::Index j = 0; j < ma.cols(); ++j) {
        auto block = out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols());
        block = ma(i, j) * mb;
        if (p != 0) block = block.unaryExpr([p](long v) { return static_cast<long>(mod(v, p)); });
      }
    return out;
  };
  return m;
}

namespace {

void require_readable(const ModuleData& m, const Ring& ring) {
  if (ring.kind == Ring::Kind::PrimeField) {
    if (ring.p != m.p.value()) throw std::invalid_argument("act: ring characteristic differs from the module prime");
    return;
  }
  if (m.characteristic != 0) throw std::invalid_argument("act: modular module " + m.name + " read in " + ring.name());
}

}  // namespace

Mat<Rational> canonical_in(const Ring& ring, Mat<Rational> a) {
  if (ring.kind == Ring::Kind::PrimeField)
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = canonicalize(ring, a.data()[i]);
  return a;
}

Mat<Rational> act(const AlgebraElement& x, const ModuleData& m) {
  if (x.degree() != m.n || !(x.prime() == m.p)) throw std::invalid_argument("act: element and module live over different groups");
  require_readable(m, x.ring());
  Mat<Rational> out = Mat<Rational>::Zero(m.dim, m.dim);
  for (const auto& [g, c] : x.terms()) {
    if (m.permutation && !m.rho) {
      const auto perm = m.permutation(g);
      for (int k = 0; k < m.dim; ++k) out(perm[static_cast<std::size_t>(k)], k) += c.value();
      continue;
    }
    const IntMat r = m.rho(g);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j)
        if (r(i, j) != 0) out(i, j) += c.value() * r(i, j);
  }
  return canonical_in(x.ring(), std::move(out));
}

Mat<Rational> act(const GFMatrix& g, const ModuleData& m, const Ring& ring) {
  require_readable(m, ring);
  return canonical_in(ring, to_rational(m.matrix(g)));
}

std::size_t rank_in(const Ring& ring, const Mat<Rational>& a) {
  if (ring.kind == Ring::Kind::PrimeField) return rank_mod_p(reduce_mod_p(a, ring.p), ring.p);
  return rank_rational(a);
}

Mat<Rational> column_basis_in(const Ring& ring, const Mat<Rational>& a) {
  if (ring.kind == Ring::Kind::PrimeField) return to_rational(column_basis_mod_p(reduce_mod_p(a, ring.p), ring.p));
  return column_basis_rational(a);
}

bool equal_in(const Ring& ring, const Mat<Rational>& a, const Mat<Rational>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (ring.kind != Ring::Kind::PrimeField) return a == b;
  return reduce_mod_p(a, ring.p) == reduce_mod_p(b, ring.p);
}

std::optional<std::pair<GFMatrix, GFMatrix>> homomorphism_defect(const ModuleData& m, const std::vector<GFMatrix>& gens) {
  const int p = m.characteristic;
  auto reduce = [p](IntMat a) {
    if (p != 0) a = a.unaryExpr([p](long v) { return static_cast<long>(mod(v, p)); });
    return a;
  };
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (reduce(m.matrix(g) * m.matrix(h)) != reduce(m.matrix(g * h))) return std::make_pair(g, h);
  return std::nullopt;
}

std::size_t coinvariant_rank(const ModuleData& m, const Ring& ring) {
  const auto gens = gl_generators(m.n, m.p);
  Mat<Rational> stacked(static_cast<Eigen::Index>(gens.size()) * m.dim, m.dim);
  for (std::size_t s = 0; s < gens.size(); ++s)
    stacked.middleRows(static_cast<Eigen::Index>(s) * m.dim, m.dim) =
        act(gens[s], m, ring) - Mat<Rational>::Identity(m.dim, m.dim);
  if (stacked.rows() == 0) return static_cast<std::size_t>(m.dim);
  return static_cast<std::size_t>(m.dim) - rank_in(ring, stacked);
}

}  // namespace stein
