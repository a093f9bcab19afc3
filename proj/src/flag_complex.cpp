#include "stein/flag_complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "stein/steinberg.hpp"

namespace stein {

std::optional<std::size_t> OrderComplex::index_of(const std::vector<Subspace>& chain) const {
  if (chain.empty()) return std::nullopt;
  std::vector<int> ids;
  ids.reserve(chain.size());
  for (const auto& w : chain) {
    const auto it = vertex_index_.find(w);
    if (it == vertex_index_.end()) return std::nullopt;
    ids.push_back(it->second);
  }
  const auto it = lookup_.find(ids);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

OrderComplex order_complex(ComplexMode mode, int n, Prime p, std::vector<Subspace> vertices) {
  std::sort(vertices.begin(), vertices.end());
  OrderComplex k;
  k.p = p;
  k.n = n;
  k.mode = mode;
  k.vertices = std::move(vertices);
  const int v = static_cast<int>(k.vertices.size());
  for (int i = 0; i < v; ++i) k.vertex_index_.emplace(k.vertices[static_cast<std::size_t>(i)], i);

  std::vector<std::vector<int>> above(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      const auto& a = k.vertices[static_cast<std::size_t>(i)];
      const auto& b = k.vertices[static_cast<std::size_t>(j)];
      if (a.dim() < b.dim() && b.contains(a)) above[static_cast<std::size_t>(i)].push_back(j);
    }

  auto allowed = [&](const std::vector<int>& chain) {
    if (mode != ComplexMode::BDiamond) return true;
    return !(k.vertices[static_cast<std::size_t>(chain.front())].is_zero() &&
             k.vertices[static_cast<std::size_t>(chain.back())].is_whole());
  };
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    if (!allowed(chain)) return;
    const auto deg = chain.size() - 1;
    if (k.simplices.size() <= deg) k.simplices.resize(deg + 1);
    k.simplices[deg].push_back(chain);
    for (int next : above[static_cast<std::size_t>(last)]) {
      chain.push_back(next);
      extend(next);
      chain.pop_back();
    }
  };
  for (int i = 0; i < v; ++i) {
    chain = {i};
    extend(i);
  }
  for (auto& level : k.simplices) {
    std::sort(level.begin(), level.end());
    for (std::size_t s = 0; s < level.size(); ++s) k.lookup_.emplace(level[s], s);
  }
  return k;
}

OrderComplex build_complex(ComplexMode mode, int n, Prime p) {
  if (n < 1) throw std::invalid_argument("build_complex: n must be >= 1");
  std::vector<Subspace> vertices;
  for (auto& w : enumerate_subspaces(n, p))
    if (mode == ComplexMode::BDiamond || w.is_proper_nonzero()) vertices.push_back(std::move(w));
  return order_complex(mode == ComplexMode::BDiamond ? mode : ComplexMode::B, n, p, std::move(vertices));
}

OrderComplex fixed_complex(int n, Prime p, const std::vector<GFMatrix>& generators) {
  std::vector<Subspace> vertices;
  for (auto& w : enumerate_subspaces(n, p)) {
    if (!w.is_proper_nonzero()) continue;
    bool fixed = true;
    for (const auto& g : generators) fixed = fixed && w.is_invariant(g);
    if (fixed) vertices.push_back(std::move(w));
  }
  return order_complex(ComplexMode::Fixed, n, p, std::move(vertices));
}

ChainComplex chain_complex(const OrderComplex& k) {
  ChainComplex c;
  const int top = static_cast<int>(k.simplices.size()) - 1;
  for (int d = 0; d <= top; ++d) c.dims.push_back(static_cast<Eigen::Index>(k.count(d)));
  if (top < 0) return c;
  c.boundary.push_back(Mat<Integer>::Constant(1, c.dims[0], Integer(1)));
  for (int d = 1; d <= top; ++d) {
    Mat<Integer> b = Mat<Integer>::Zero(c.dims[static_cast<std::size_t>(d - 1)], c.dims[static_cast<std::size_t>(d)]);
    const auto& level = k.simplices[static_cast<std::size_t>(d)];
    for (std::size_t s = 0; s < level.size(); ++s)
      for (std::size_t t = 0; t < level[s].size(); ++t) {
        std::vector<Subspace> face;
        for (std::size_t u = 0; u < level[s].size(); ++u)
          if (u != t) face.push_back(k.vertices[static_cast<std::size_t>(level[s][u])]);
        const auto idx = k.index_of(face);
        if (!idx) throw std::logic_error("chain_complex: face missing from complex");
        b(static_cast<Eigen::Index>(*idx), static_cast<Eigen::Index>(s)) += (t % 2 == 0) ? 1 : -1;
      }
    c.boundary.push_back(std::move(b));
  }
  return c;
}

namespace {

void accumulate(FlagChain& c, std::vector<Subspace> key, long v) {
  if (v == 0) return;
  auto [it, inserted] = c.emplace(std::move(key), v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

GFMatrix leading_columns(const GFMatrix& m, Eigen::Index k) {
  return {m.prime(), GFMatrix::Storage(m.entries().leftCols(k))};
}

long long count_with_offset(int n, int p) { return ipow(p, static_cast<int>(binomial(n, 2))); }

}  // namespace

FlagChain boundary(const FlagChain& c) {
  FlagChain out;
  for (const auto& [chain, v] : c)
    for (std::size_t t = 0; t < chain.size(); ++t) {
      std::vector<Subspace> face;
      for (std::size_t u = 0; u < chain.size(); ++u)
        if (u != t) face.push_back(chain[u]);
      accumulate(out, std::move(face), t % 2 == 0 ? v : -v);
    }
  return out;
}

FlagChain translate(const FlagChain& c, const GFMatrix& g) {
  FlagChain out;
  for (const auto& [chain, v] : c) {
    std::vector<Subspace> moved;
    moved.reserve(chain.size());
    for (const auto& w : chain) moved.push_back(w.image(g));
    accumulate(out, std::move(moved), v);
  }
  return out;
}

FlagChain column_cycle(const GFMatrix& columns) {
  const auto k = static_cast<int>(columns.cols());
  if (rank(columns) != k) throw std::domain_error("column_cycle: columns are dependent");
  FlagChain out;
  for (const auto& sigma : all_permutations(k)) {
    const GFMatrix permuted = columns * GFMatrix::permutation(columns.prime(), sigma);
    std::vector<Subspace> chain;
    for (int a = 1; a < k; ++a) chain.push_back(Subspace::span_cols(leading_columns(permuted, a)));
    accumulate(out, std::move(chain), permutation_sign(sigma));
  }
  return out;
}

FlagChain steinberg_cycle(const GFMatrix& m) {
  if (!is_invertible(m)) throw std::domain_error("steinberg_cycle: matrix is singular");
  return column_cycle(m);
}

FlagChain flag_of(const GFMatrix& m) {
  std::vector<Subspace> chain;
  for (Eigen::Index a = 1; a < m.cols(); ++a) chain.push_back(Subspace::span_cols(leading_columns(m, a)));
  return {{std::move(chain), 1}};
}

Vec<Integer> chain_vector(const OrderComplex& k, int degree, const FlagChain& c) {
  Vec<Integer> v = Vec<Integer>::Zero(static_cast<Eigen::Index>(k.count(degree)));
  for (const auto& [chain, coeff] : c) {
    if (static_cast<int>(chain.size()) != degree + 1) throw std::invalid_argument("chain_vector: wrong degree");
    const auto idx = k.index_of(chain);
    if (!idx) throw std::invalid_argument("chain_vector: chain is not a simplex");
    v(static_cast<Eigen::Index>(*idx)) += coeff;
  }
  return v;
}

TransverseBasis transverse_basis(const Flag& f) {
  if (!f.is_complete()) throw std::invalid_argument("transverse_basis: flag is not complete");
  const int n = f.ambient_dim();
  const Prime p = f.spaces().empty() ? Prime(2) : f.spaces().front().prime();
  // F_0 = 0, F_1..F_{n-1} from the flag, F_n = V.
  std::vector<Subspace> big{Subspace::zero(p, n)};
  for (const auto& w : f.spaces()) big.push_back(w);
  big.push_back(Subspace::whole(p, n));

  const auto complete = build_complex(ComplexMode::B, n, p);
  std::vector<std::vector<Subspace>> transverse;
  if (n >= 2)
    for (const auto& s : complete.simplices[static_cast<std::size_t>(n - 2)]) {
      std::vector<Subspace> chain;
      for (int id : s) chain.push_back(complete.vertices[static_cast<std::size_t>(id)]);
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) ok = intersect(chain[static_cast<std::size_t>(i - 1)], big[static_cast<std::size_t>(n - i)]).is_zero();
      if (ok) transverse.push_back(std::move(chain));
    }
  else
    transverse.push_back({});

  for (int offset : {-1, 0, 1}) {
    TransverseBasis out;
    out.offset = offset;
    bool ok = true;
    for (const auto& chain : transverse) {
      GFMatrix m(p, n, n);
      for (int i = 1; i <= n && ok; ++i) {
        const int idx = n - i + offset;
        if (idx < 0 || idx > n) {
          ok = false;
          break;
        }
        const Subspace wi = i < n ? chain[static_cast<std::size_t>(i - 1)] : Subspace::whole(p, n);
        const Subspace line = intersect(wi, big[static_cast<std::size_t>(idx)]);
        if (line.dim() != 1) {
          ok = false;
          break;
        }
        for (int r = 0; r < n; ++r) m.set(r, i - 1, line.basis()(0, r));
      }
      if (!ok) break;
      if (!is_invertible(m) || flag_of(m).begin()->first != chain) {
        ok = false;
        break;
      }
      const auto s = steinberg_cycle(m);
      for (const auto& other : transverse) {
        const auto it = s.find(other);
        const long coeff = it == s.end() ? 0 : it->second;
        if (coeff != (other == chain ? 1 : 0)) ok = false;
      }
      if (!ok) break;
      out.flags.emplace_back(chain);
      out.matrices.push_back(m);
    }
    if (ok && static_cast<long long>(out.flags.size()) == count_with_offset(n, p)) return out;
  }
  throw std::logic_error("transverse_basis: no index convention satisfies the basis properties");
}

Witness homology_check(ComplexMode mode, int n, Prime p) {
  const auto k = build_complex(mode, n, p);
  const auto c = chain_complex(k);
  const auto h = homology(c);
  const int expected_degree = mode == ComplexMode::BDiamond ? n - 1 : n - 2;
  const auto expected_rank = static_cast<std::size_t>(count_with_offset(n, p));
  Witness w;
  auto counts = nlohmann::json::array();
  for (auto d : c.dims) counts.push_back(d);
  w.data["simplex_counts"] = counts;
  w.data["homology"] = h.summary();
  w.require("boundary squares to zero", !c.square_defect().has_value());
  bool concentrated = true;
  for (const auto& g : h.groups) {
    if (g.degree == expected_degree) {
      w.data["top_rank"] = g.rank;
      w.require("top rank p^C(n,2)", g.rank == expected_rank);
      w.require("top group torsion-free", g.torsion.empty());
    } else {
      concentrated = concentrated && g.is_zero();
    }
  }
  w.require("concentrated in one degree", concentrated);
  return w;
}

Witness cycles_check(int n, Prime p) {
  const auto group = enumerate_group(GroupKind::GL, n, p);
  const auto k = build_complex(ComplexMode::B, n, p);
  std::vector<FlagChain> cycles;
  cycles.reserve(group.order());
  bool closed = true;
  for (const auto& m : group.elements()) {
    cycles.push_back(steinberg_cycle(m));
    closed = closed && boundary(cycles.back()).empty();
  }
  bool equivariant = true;
  nlohmann::json bad = nullptr;
  for (std::size_t g = 0; g < group.order() && equivariant; ++g)
    for (std::size_t m = 0; m < group.order(); ++m)
      if (translate(cycles[m], group.element(g)) != cycles[group.mul(g, m)]) {
        equivariant = false;
        bad = {{"g", to_json(group.element(g))}, {"m", to_json(group.element(m))}};
        break;
      }
  Mat<Rational> span(static_cast<Eigen::Index>(k.count(n - 2)), static_cast<Eigen::Index>(group.order()));
  for (std::size_t m = 0; m < group.order(); ++m) {
    const auto v = chain_vector(k, n - 2, cycles[m]);
    for (Eigen::Index r = 0; r < v.size(); ++r) span(r, static_cast<Eigen::Index>(m)) = Rational(v(r));
  }
  const auto expected = static_cast<std::size_t>(count_with_offset(n, p));
  const auto rank_q = rank_rational(span);
  const auto rank_p = rank_in(Ring::prime_field(p), span);
  Witness w;
  w.data["span_rank_Q"] = rank_q;
  w.data["span_rank_Fp"] = rank_p;
  w.require("every s_m is a cycle", closed);
  w.require("g s_m = s_gm", equivariant);
  if (!equivariant) w.data["witness"] = bad;
  w.require("span rank p^C(n,2) over Q", rank_q == expected);
  w.require("span rank p^C(n,2) over F_p", rank_p == expected);
  return w;
}

namespace {

struct TopBasis {
  MatrixGroup group;
  TransverseBasis basis;
  std::map<std::vector<Subspace>, std::size_t> position;

  /// Coefficients of a top chain at the transverse flags.
  Vec<Integer> readout(const FlagChain& c) const {
    Vec<Integer> v = Vec<Integer>::Zero(static_cast<Eigen::Index>(basis.flags.size()));
    for (const auto& [chain, coeff] : c) {
      const auto it = position.find(chain);
      if (it != position.end()) v(static_cast<Eigen::Index>(it->second)) = coeff;
    }
    return v;
  }
};

std::shared_ptr<TopBasis> top_basis(int n, Prime p) {
  auto t = std::make_shared<TopBasis>(TopBasis{enumerate_group(GroupKind::GL, n, p),
                                               transverse_basis(Flag::from_columns(GFMatrix::identity(p, n))), {}});
  for (std::size_t i = 0; i < t->basis.flags.size(); ++i) t->position.emplace(t->basis.flags[i].spaces(), i);
  return t;
}

}  // namespace

ModuleData top_homology_module(int n, Prime p) {
  if (n < 2) throw std::invalid_argument("top_homology_module: n must be >= 2");
  auto t = top_basis(n, p);
  ModuleData m;
  m.name = "H_top(B_" + std::to_string(n) + ")";
  m.n = n;
  m.p = p;
  m.dim = static_cast<int>(t->basis.flags.size());
  m.rho = [t](const GFMatrix& g) {
    const auto d = static_cast<Eigen::Index>(t->basis.matrices.size());
    IntMat out(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto v = t->readout(steinberg_cycle(g * t->basis.matrices[static_cast<std::size_t>(c)]));
      for (Eigen::Index r = 0; r < d; ++r) out(r, c) = v(r).convert_to<long>();
    }
    return out;
  };
  return m;
}

Witness top_homology_iso_check(int n, Prime p) {
  const auto t = top_basis(n, p);
  const Ring ring = Ring::plocal(p);
  const auto sb = sigma_bar(n, p, ring) * b_bar(n, p, ring);
  const auto& group = t->group;
  const auto d = static_cast<Eigen::Index>(t->basis.matrices.size());

  auto column = [&](const AlgebraElement& x) {
    Vec<Rational> v = Vec<Rational>::Zero(static_cast<Eigen::Index>(group.order()));
    for (const auto& [key, q] : x.raw()) v(static_cast<Eigen::Index>(group.index_of(GFMatrix::from_key(p, n, n, key)))) = q;
    return v;
  };
  Mat<Rational> alg_basis(static_cast<Eigen::Index>(group.order()), d);
  std::vector<FlagChain> basis_cycles;
  for (Eigen::Index c = 0; c < d; ++c) {
    alg_basis.col(c) = column(sb.left_translate(t->basis.matrices[static_cast<std::size_t>(c)]));
    basis_cycles.push_back(steinberg_cycle(t->basis.matrices[static_cast<std::size_t>(c)]));
  }
  Mat<Rational> translates(static_cast<Eigen::Index>(group.order()), static_cast<Eigen::Index>(group.order()));
  for (std::size_t m = 0; m < group.order(); ++m) translates.col(static_cast<Eigen::Index>(m)) = column(sb.left_translate(group.element(m)));
  const auto alg_coords = solve_rational(alg_basis, translates);

  bool expands = true, matches = alg_coords.has_value();
  nlohmann::json bad = nullptr;
  for (std::size_t m = 0; m < group.order(); ++m) {
    const auto s = steinberg_cycle(group.element(m));
    const auto r = t->readout(s);
    FlagChain rebuilt;
    for (Eigen::Index c = 0; c < d; ++c)
      for (const auto& [chain, v] : basis_cycles[static_cast<std::size_t>(c)])
        accumulate(rebuilt, chain, v * r(c).convert_to<long>());
    if (rebuilt != s) {
      expands = false;
      bad = {{"m", to_json(group.element(m))}};
    }
    if (matches)
      for (Eigen::Index c = 0; c < d; ++c)
        if ((*alg_coords)(c, static_cast<Eigen::Index>(m)) != Rational(r(c))) {
          matches = false;
          bad = {{"m", to_json(group.element(m))}, {"coordinate", c}};
        }
  }
  const auto h = homology(chain_complex(build_complex(ComplexMode::B, n, p)));
  Witness w;
  w.data["dimension"] = d;
  w.data["transverse_offset"] = t->basis.offset;
  w.require("rank equals top homology rank", h.degree(n - 2) && h.degree(n - 2)->rank == static_cast<std::size_t>(d));
  w.require("every s_m expands in the transverse basis", expands);
  w.require("coordinates of m SB match coordinates of s_m", matches);
  if (!bad.is_null()) w.data["witness"] = bad;
  return w;
}

FlagChain join(const FlagChain& left, const Subspace& left_top, const FlagChain& right, const Subspace& right_top) {
  FlagChain out;
  const Prime p = left_top.prime();
  const int n = left_top.ambient_dim();
  for (const auto& [a, ca] : left)
    for (const auto& [b, cb] : right) {
      std::vector<Subspace> as{Subspace::zero(p, n)}, bs{Subspace::zero(p, n)};
      as.insert(as.end(), a.begin(), a.end());
      as.push_back(left_top);
      bs.insert(bs.end(), b.begin(), b.end());
      bs.push_back(right_top);
      const int ra = static_cast<int>(as.size()) - 1, rb = static_cast<int>(bs.size()) - 1;
      // Lattice paths (0,0) -> (ra, rb); a step in the left factor is 0, in the right factor 1.
      std::vector<int> steps(static_cast<std::size_t>(ra), 0);
      steps.resize(static_cast<std::size_t>(ra + rb), 1);
      do {
        int x = 0, y = 0, inversions = 0, right_seen = 0;
        std::vector<Subspace> chain;
        for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
          if (steps[s] == 0) {
            ++x;
            inversions += right_seen;
          } else {
            ++y;
            ++right_seen;
          }
          chain.push_back(as[static_cast<std::size_t>(x)] + bs[static_cast<std::size_t>(y)]);
        }
        if (!steps.empty() && steps.back() == 0) inversions += right_seen;
        accumulate(out, std::move(chain), (inversions % 2 == 0 ? 1 : -1) * ca * cb);
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  return out;
}

Witness join_product_check(int i, int j, Prime p) {
  if (i < 1 || j < 1) throw std::invalid_argument("join_product_check: i, j must be >= 1");
  const int n = i + j;
  const Ring ring = Ring::plocal(p);
  const auto gi = enumerate_group(GroupKind::GL, i, p), gj = enumerate_group(GroupKind::GL, j, p);
  const auto borel_order = static_cast<long>(enumerate_group(GroupKind::Borel, n, p).order());
  const auto product = steinberg_product_element(i, j, p, ring) *
                       block_product(sigma_bar(i, p, ring) * b_bar(i, p, ring), sigma_bar(j, p, ring) * b_bar(j, p, ring));
  const Subspace left_top = Subspace::span_cols(block_diag(GFMatrix::identity(p, i), GFMatrix::zero(p, j, 0)));
  const Subspace right_top = Subspace::span_cols(block_diag(GFMatrix::zero(p, i, 0), GFMatrix::identity(p, j)));

  // Z[GL]B_bar -> flags: g B_bar -> flag(g); each flag collects |B| terms.
  auto as_chain = [&](const AlgebraElement& y) {
    std::map<std::vector<Subspace>, Rational> sums;
    for (const auto& [g, c] : y.terms()) sums[flag_of(g).begin()->first] += c.value();
    FlagChain exact;
    for (const auto& [chain, q] : sums) {
      const Rational v = q / borel_order;
      if (denominator(v) != 1) throw std::logic_error("join_product_check: non-integral flag coefficient");
      accumulate(exact, chain, numerator(v).convert_to<long>());
    }
    return exact;
  };

  Witness w;
  bool agree = true;
  std::size_t pairs = 0;
  nlohmann::json bad = nullptr;
  for (const auto& a : gi.elements())
    for (const auto& b : gj.elements()) {
      ++pairs;
      const auto left = column_cycle(block_diag(a, GFMatrix::zero(p, j, 0)));
      const auto right = column_cycle(block_diag(GFMatrix::zero(p, i, 0), b));
      const auto topological = join(left, left_top, right, right_top);
      const auto algebraic = as_chain(AlgebraElement::delta(block_embed(a, b), ring) * product);
      FlagChain signed_alg;
      for (const auto& [chain, v] : algebraic) accumulate(signed_alg, chain, kJoinSign * v);
      if (topological != signed_alg && agree) {
        agree = false;
        bad = {{"left", to_json(a)}, {"right", to_json(b)}};
      }
    }
  w.data["pairs"] = pairs;
  w.data["sign"] = kJoinSign;
  w.require("shuffle product of cycles equals the Steinberg product", agree);
  if (!agree) w.data["witness"] = bad;
  return w;
}

Witness prop10_check(int n, int i, Prime p) {
  if (i <= 0 || i >= n) throw std::invalid_argument("prop10_check: need 0 < i < n");
  const int j = n - i;
  const Ring ring = Ring::plocal(p);
  const Subspace w = Subspace::span_cols(block_diag(GFMatrix::identity(p, i), GFMatrix::zero(p, j, 0)));
  std::size_t complements = 0;
  for (const auto& x : enumerate_subspaces(n, p, j))
    if (intersect(w, x).is_zero()) ++complements;
  const auto ci = binomial(i, 2), cj = binomial(j, 2), cn = binomial(n, 2);

  const auto gl = enumerate_group(GroupKind::GL, n, p);
  const auto parabolic = enumerate_group(GroupKind::Parabolic, n, p, i);
  const auto young = block_product(sigma_bar(i, p, ring), sigma_bar(j, p, ring)) * block_product(b_bar(i, p, ring), b_bar(j, p, ring));
  const auto sb = sigma_bar(n, p, ring) * b_bar(n, p, ring);
  auto column = [&](const AlgebraElement& x) {
    Vec<Rational> v = Vec<Rational>::Zero(static_cast<Eigen::Index>(gl.order()));
    for (const auto& [key, q] : x.raw()) v(static_cast<Eigen::Index>(gl.index_of(GFMatrix::from_key(p, n, n, key)))) = q;
    return v;
  };
  const auto rows = static_cast<Eigen::Index>(gl.order());
  const auto cols = static_cast<Eigen::Index>(parabolic.order());
  Mat<Rational> domain(rows, cols), image(rows, cols), graph(2 * rows, cols), target(rows, rows);
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto& g = parabolic.element(static_cast<std::size_t>(c));
    domain.col(c) = column(young.left_translate(g));
    image.col(c) = column(sb.left_translate(g));
    graph.col(c) << domain.col(c), image.col(c);
  }
  for (Eigen::Index c = 0; c < rows; ++c) target.col(c) = column(sb.left_translate(gl.element(static_cast<std::size_t>(c))));

  const auto expected = static_cast<std::size_t>(ipow(p, static_cast<int>(cn)));
  Witness out;
  out.data["complements"] = complements;
  out.require("|S_W| = p^(i(n-i))", static_cast<long long>(complements) == ipow(p, i * j));
  out.require("C(i,2) + i(n-i) + C(n-i,2) = C(n,2)", ci + i * j + cj == cn);
  out.require("p-power dimension identity", ipow(p, static_cast<int>(ci + i * j + cj)) == ipow(p, static_cast<int>(cn)));
  for (const Ring r : {Ring::plocal(p), Ring::prime_field(p)}) {
    const auto tag = r.name();
    const auto rd = rank_in(r, domain), ri = rank_in(r, image), rg = rank_in(r, graph), rt = rank_in(r, target);
    out.data["ranks"][tag] = {{"domain", rd}, {"image", ri}, {"target", rt}};
    out.require("domain rank over " + tag, rd == expected);
    out.require("map well defined over " + tag, rg == rd);
    out.require("surjective over " + tag, ri == rt && rt == expected);
  }
  bool bruhat = true;
  for (const auto& g : gl.elements()) {
    const auto f = bruhat_factor(g);
    bruhat = bruhat && f.a * f.sigma * f.b == g;
  }
  out.require("Bruhat factorization of every element", bruhat);
  return out;
}

Witness bruhat_check(int n, Prime p) {
  const auto gl = enumerate_group(GroupKind::GL, n, p);
  const auto perms = enumerate_group(GroupKind::PermMatrices, n, p);
  Witness w;
  bool ok = true;
  nlohmann::json bad = nullptr;
  for (const auto& g : gl.elements()) {
    const auto f = bruhat_factor(g);
    const bool good = f.a * f.sigma * f.b == g && f.a.is_upper_triangular() && f.b.is_upper_triangular() &&
                      is_invertible(f.a) && is_invertible(f.b) && perms.contains(f.sigma);
    if (!good && ok) bad = to_json(g);
    ok = ok && good;
  }
  w.data["elements"] = gl.order();
  w.require("a sigma b reconstructs every element", ok);
  if (!ok) w.data["witness"] = bad;
  return w;
}

Witness unipotent_fixed_check(const MatrixGroup& u) {
  const int n = u.degree();
  const Prime p = u.prime();
  auto order = static_cast<long long>(u.order());
  while (order % p == 0) order /= p;
  if (u.order() <= 1 || order != 1) throw std::invalid_argument("unipotent_fixed_check: need a nontrivial p-subgroup");

  GFMatrix stacked(p, static_cast<Eigen::Index>(u.order()) * n, n);
  for (std::size_t k = 0; k < u.order(); ++k) {
    const GFMatrix d = u.element(k) - GFMatrix::identity(p, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.set(static_cast<Eigen::Index>(k) * n + r, c, d(r, c));
  }
  const Subspace fixed = Subspace::span_cols(nullspace(stacked));

  const auto x = fixed_complex(n, p, u.elements());
  const auto hx = homology(chain_complex(x));

  bool retracts = true;
  for (const auto& wsp : x.vertices) {
    const Subspace meet = intersect(fixed, wsp);
    bool invariant = true;
    for (const auto& g : u.elements()) invariant = invariant && meet.is_invariant(g);
    retracts = retracts && meet.is_proper_nonzero() && invariant;
  }
  if (x.simplices.size() > 1)
    for (const auto& edge : x.simplices[1]) {
      const auto& lo = x.vertices[static_cast<std::size_t>(edge[0])];
      const auto& hi = x.vertices[static_cast<std::size_t>(edge[1])];
      retracts = retracts && intersect(fixed, hi).contains(intersect(fixed, lo));
    }

  const auto gl = enumerate_group(GroupKind::GL, n, p);
  const auto norm = normalizer(gl, u);
  std::size_t subgroups = 0, acyclic = 0;
  nlohmann::json bad = nullptr;
  for (const auto& gamma : all_subgroups(norm)) {
    ++subgroups;
    auto gens = u.elements();
    gens.insert(gens.end(), gamma.elements().begin(), gamma.elements().end());
    if (homology(chain_complex(fixed_complex(n, p, gens))).acyclic())
      ++acyclic;
    else if (bad.is_null())
      bad = {{"subgroup_order", gamma.order()}};
  }

  Witness w;
  w.data["order"] = u.order();
  w.data["fixed_dim"] = fixed.dim();
  w.data["fixed_poset_vertices"] = x.vertices.size();
  w.data["normalizer_order"] = norm.order();
  w.data["normalizer_subgroups"] = subgroups;
  w.require("0 != V' != V", fixed.is_proper_nonzero());
  w.require("fixed poset acyclic", hx.acyclic());
  w.require("W -> V' meet W is a poset map", retracts);
  w.require("fixed posets of normalizer subgroups acyclic", acyclic == subgroups);
  if (!bad.is_null()) w.data["witness"] = bad;
  return w;
}

std::vector<MatrixGroup> p_subgroup_representatives(int n, Prime p) {
  const auto gl = enumerate_group(GroupKind::GL, n, p);
  const auto sylow = enumerate_group(GroupKind::UpperUnitriangular, n, p);
  std::vector<MatrixGroup> nontrivial;
  for (auto& h : all_subgroups(sylow))
    if (h.order() > 1) nontrivial.push_back(std::move(h));
  return conjugacy_representatives(gl, nontrivial);
}

}  // namespace stein
