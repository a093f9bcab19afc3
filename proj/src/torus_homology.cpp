#include "stein/torus_homology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace stein {

std::string to_string(TorusConvention c) {
  return c == TorusConvention::Homology ? "homology" : "plain-substitution";
}

std::string to_string(FunctorFamily f) { return f == FunctorFamily::Trivial ? "trivial" : "torus"; }

DimensionSeries convolve(const DimensionSeries& a, const DimensionSeries& b, int max_degree) {
  DimensionSeries out;
  out.coefficients.assign(static_cast<std::size_t>(max_degree + 1), 0);
  for (int k = 0; k <= max_degree; ++k)
    for (int i = 0; i <= k; ++i) out.coefficients[static_cast<std::size_t>(k)] += a.at(i) * b.at(k - i);
  return out;
}

DimensionSeries scale(const DimensionSeries& a, long long s) {
  DimensionSeries out = a;
  for (auto& c : out.coefficients) c *= s;
  return out;
}

namespace {

// a_S b^alpha (odd p) or x^alpha (p = 2); ext is a bitmask over the n generators.
struct Monomial {
  unsigned ext = 0;
  std::vector<int> exps;
  friend bool operator<(const Monomial& x, const Monomial& y) {
    return std::tie(x.ext, x.exps) < std::tie(y.ext, y.exps);
  }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.ext == y.ext && x.exps == y.exps; }
};

// Exponent vectors of total `total` in n variables, x_1^total first.
void exponent_vectors(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == n) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (i == n - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(n, total - e, cur, out);
    cur.pop_back();
  }
}

std::vector<int> bits(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

std::vector<Monomial> monomial_basis(int n, int p, int k) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  std::vector<unsigned> masks;
  if (p == 2) {
    masks.push_back(0);
  } else {
    for (unsigned m = 0; m < (1U << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      const auto ba = bits(a), bb = bits(b);
      return ba.size() != bb.size() ? ba.size() < bb.size() : ba < bb;
    });
  }
  for (unsigned m : masks) {
    const int s = static_cast<int>(bits(m).size());
    const int rest = k - s;
    int total = rest;
    if (p != 2) {
      if (rest < 0 || rest % 2) continue;
      total = rest / 2;
    }
    if (total < 0) continue;
    std::vector<std::vector<int>> exps;
    std::vector<int> cur;
    exponent_vectors(n, total, cur, exps);
    for (auto& e : exps) out.push_back({m, std::move(e)});
  }
  return out;
}

long long det_mod(std::vector<std::vector<long long>> a, int p) {
  const std::size_t s = a.size();
  long long det = 1;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t r = c;
    while (r < s && mod(a[r][c], p) == 0) ++r;
    if (r == s) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = -det;
    }
    const long long piv = mod(a[c][c], p);
    det = mod(det * piv, p);
    const int inv = inv_mod(static_cast<int>(piv), p);
    for (std::size_t i = c + 1; i < s; ++i) {
      const long long f = mod(a[i][c] * inv, p);
      for (std::size_t j = c; j < s; ++j) a[i][j] = mod(a[i][j] - f * a[c][j], p);
    }
  }
  return mod(det, p);
}

// Subst(g): x_i -> sum_j g_ij x_j, extended multiplicatively. Column c is the
// image of basis element c.
IntMat substitution_matrix(const GFMatrix& g, int p, const std::vector<Monomial>& basis) {
  const int n = static_cast<int>(g.rows());
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  IntMat out = IntMat::Zero(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Monomial& m = basis[c];
    // exterior part: a_S -> sum_J det g[S, J] a_J
    std::map<unsigned, long long> ext{{0U, 1}};
    if (m.ext) {
      ext.clear();
      const auto rows = bits(m.ext);
      for (unsigned j = 0; j < (1U << n); ++j) {
        const auto cols = bits(j);
        if (cols.size() != rows.size()) continue;
        std::vector<std::vector<long long>> sub(rows.size(), std::vector<long long>(rows.size()));
        for (std::size_t a = 0; a < rows.size(); ++a)
          for (std::size_t b = 0; b < cols.size(); ++b) sub[a][b] = g(rows[a], cols[b]);
        const long long d = det_mod(sub, p);
        if (d) ext[j] = d;
      }
    }
    std::map<std::vector<int>, long long> poly{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m.exps[static_cast<std::size_t>(i)]; ++e) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [mono, coeff] : poly)
          for (int j = 0; j < n; ++j) {
            if (g(i, j) == 0) continue;
            auto t = mono;
            ++t[static_cast<std::size_t>(j)];
            auto& slot = next[t];
            slot = mod(slot + coeff * g(i, j), p);
          }
        poly = std::move(next);
      }
    for (const auto& [mask, ec] : ext)
      for (const auto& [mono, pc] : poly) {
        const long long v = mod(ec * pc, p);
        if (!v) continue;
        out(index.at(Monomial{mask, mono}), static_cast<Eigen::Index>(c)) = v;
      }
  }
  return out;
}

IntMat identity_mod(Eigen::Index d) { return IntMat::Identity(d, d); }

GFMatrix sub_block(const GFMatrix& g, int at, int size) {
  GFMatrix out(g.prime(), size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.set(i, j, g(at + i, at + j));
  return out;
}

}  // namespace

GradedGLModule torus_homology(int n, Prime p, int max_degree, TorusConvention c) {
  if (max_degree < 0) throw std::invalid_argument("torus_homology: negative truncation");
  GradedGLModule out{"H_*((Z/" + std::to_string(p.value()) + ")^" + std::to_string(n) + ")", n, p, max_degree, {}};
  for (int k = 0; k <= max_degree; ++k) {
    auto basis = std::make_shared<std::vector<Monomial>>(monomial_basis(n, p, k));
    ModuleData m;
    m.name = out.name + "_" + std::to_string(k);
    m.n = n;
    m.p = p;
    m.dim = static_cast<int>(basis->size());
    m.characteristic = p;
    const int pv = p;
    if (c == TorusConvention::Homology)
      m.rho = [basis, pv](const GFMatrix& g) -> IntMat { return substitution_matrix(g, pv, *basis).transpose(); };
    else
      m.rho = [basis, pv](const GFMatrix& g) { return substitution_matrix(inverse(g), pv, *basis); };
    out.degrees.push_back(std::move(m));
  }
  return out;
}

GradedGLModule trivial_graded(int n, Prime p, int max_degree) {
  GradedGLModule out{"S^0", n, p, max_degree, {}};
  for (int k = 0; k <= max_degree; ++k) {
    ModuleData m;
    m.name = "S^0_" + std::to_string(k);
    m.n = n;
    m.p = p;
    m.dim = k == 0 ? 1 : 0;
    m.characteristic = p;
    const auto d = static_cast<Eigen::Index>(m.dim);
    m.rho = [d](const GFMatrix&) { return identity_mod(d); };
    out.degrees.push_back(std::move(m));
  }
  return out;
}

DimensionSeries dimension_series(const GradedGLModule& m) {
  DimensionSeries out;
  for (const auto& d : m.degrees) out.coefficients.push_back(d.dim);
  return out;
}

GradedGLModule tensor(const ModuleData& m, const GradedGLModule& g) {
  if (m.n != g.n || !(m.p == g.p)) throw std::invalid_argument("tensor: modules for different groups");
  GradedGLModule out{m.name + " (x) " + g.name, g.n, g.p, g.max_degree, {}};
  for (const auto& d : g.degrees) {
    ModuleData t = tensor(m, d);
    t.characteristic = g.p;
    out.degrees.push_back(std::move(t));
  }
  return out;
}

GradedGLModule kunneth(const GradedGLModule& a, const GradedGLModule& b) {
  if (!(a.p == b.p)) throw std::invalid_argument("kunneth: mismatched primes");
  if (a.max_degree != b.max_degree) throw std::invalid_argument("kunneth: mismatched truncation");
  const int na = a.n, nb = b.n, pv = a.p;
  GradedGLModule out{a.name + " # " + b.name, na + nb, a.p, a.max_degree, {}};
  auto ma = std::make_shared<GradedGLModule>(a);
  auto mb = std::make_shared<GradedGLModule>(b);
  for (int k = 0; k <= a.max_degree; ++k) {
    ModuleData m;
    m.name = out.name + "_" + std::to_string(k);
    m.n = na + nb;
    m.p = a.p;
    m.characteristic = pv;
    for (int i = 0; i <= k; ++i) m.dim += a.degrees[static_cast<std::size_t>(i)].dim * b.degrees[static_cast<std::size_t>(k - i)].dim;
    const auto dim = static_cast<Eigen::Index>(m.dim);
    m.rho = [ma, mb, na, nb, k, pv, dim](const GFMatrix& g) {
      for (int i = 0; i < na + nb; ++i)
        for (int j = 0; j < na + nb; ++j)
          if ((i < na) != (j < na) && g(i, j) != 0)
            throw std::invalid_argument("kunneth: element is not block diagonal");
      const GFMatrix ga = sub_block(g, 0, na), gb = sub_block(g, na, nb);
      IntMat out = IntMat::Zero(dim, dim);
      Eigen::Index at = 0;
      for (int i = 0; i <= k; ++i) {
        const IntMat x = ma->degrees[static_cast<std::size_t>(i)].matrix(ga);
        const IntMat y = mb->degrees[static_cast<std::size_t>(k - i)].matrix(gb);
        for (Eigen::Index r = 0; r < x.rows(); ++r)
          for (Eigen::Index c = 0; c < x.cols(); ++c)
            out.block(at + r * y.rows(), at + c * y.cols(), y.rows(), y.cols()) =
                (x(r, c) * y).unaryExpr([pv](long v) { return static_cast<long>(mod(v, pv)); });
        at += x.rows() * y.rows();
      }
      return out;
    };
    out.degrees.push_back(std::move(m));
  }
  return out;
}

DimensionSeries steinberg_dim_series(const GradedGLModule& m, Idempotent e) {
  DimensionSeries out;
  if (m.n == 0) return dimension_series(m);
  const Ring fp = Ring::prime_field(m.p);
  const AlgebraElement idem =
      e == Idempotent::Steinberg ? steinberg_idempotent(m.n, m.p, fp) : conjugate_idempotent(m.n, m.p, fp);
  for (const auto& d : m.degrees)
    out.coefficients.push_back(d.dim == 0 ? 0 : static_cast<long long>(rank_in(fp, act(idem, d))));
  return out;
}

namespace {

long long monomial_count(int n, int p, int k) {
  // independent of the enumeration: sum over exterior sizes of binomial counts
  auto multichoose = [](int vars, int total) -> long long {
    if (total < 0) return 0;
    if (vars == 0) return total == 0 ? 1 : 0;
    return static_cast<long long>(binomial(vars + total - 1, total));
  };
  if (p == 2) return multichoose(n, k);
  long long c = 0;
  for (int s = 0; s <= std::min(n, k); ++s)
    if ((k - s) % 2 == 0) c += static_cast<long long>(binomial(n, s)) * multichoose(n, (k - s) / 2);
  return c;
}

IntMat reduce(const IntMat& a, int p) {
  return a.unaryExpr([p](long v) { return static_cast<long>(mod(v, p)); });
}

IntMat to_int(const GFMatrix& g) { return g.entries().cast<long>(); }

}  // namespace

Witness torus_action_check(int n, Prime p, int max_degree, TorusConvention c) {
  Witness w;
  const auto t = torus_homology(n, p, max_degree, c);
  w.data["convention"] = to_string(c);
  w.data["dims"] = dimension_series(t).to_json();
  bool dims_ok = true, homs_ok = true;
  const auto gens = gl_generators(n, p);
  for (int k = 0; k <= max_degree; ++k) {
    const auto& m = t.degrees[static_cast<std::size_t>(k)];
    if (m.dim != monomial_count(n, p, k)) dims_ok = false;
    if (n == 0) continue;
    if (const auto defect = homomorphism_defect(m, gens)) {
      homs_ok = false;
      w.data["homomorphism_defect"] = {{"degree", k}, {"g", to_json(defect->first)}, {"h", to_json(defect->second)}};
    }
  }
  w.require("dimensions_match_monomial_count", dims_ok);
  w.require("homomorphism_on_generators", homs_ok);
  if (n > 0 && max_degree >= 1) {
    bool natural = true, dual = true;
    for (const auto& g : gens) {
      const IntMat r = reduce(t.degrees[1].matrix(g), p);
      natural = natural && r == to_int(g);
      dual = dual && r == to_int(transpose(inverse(g)));
    }
    w.data["degree1_is_natural"] = natural;
    w.data["degree1_is_dual"] = dual;
    w.require("degree1_matches_convention", c == TorusConvention::Homology ? natural : dual);
  }
  return w;
}

Witness kunneth_check(int a, int b, Prime p, int max_degree, TorusConvention c) {
  Witness w;
  const auto ta = torus_homology(a, p, max_degree, c), tb = torus_homology(b, p, max_degree, c);
  const auto whole = torus_homology(a + b, p, max_degree, c);
  const auto prod = kunneth(ta, tb);
  w.data["dims"] = dimension_series(prod).to_json();
  w.require("dims_are_convolution", dimension_series(prod) == convolve(dimension_series(ta), dimension_series(tb), max_degree));
  w.require("dims_match_total", dimension_series(prod) == dimension_series(whole));

  std::vector<GFMatrix> gens;
  for (const auto& g : gl_generators(a, p)) gens.push_back(block_embed(g, GFMatrix::identity(p, b)));
  for (const auto& g : gl_generators(b, p)) gens.push_back(block_embed(GFMatrix::identity(p, a), g));

  bool intertwines = true;
  for (int k = 0; k <= max_degree && intertwines; ++k) {
    // kunneth basis (i ascending, B index fastest) -> concatenated monomial of the total torus
    const auto target = monomial_basis(a + b, p, k);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], static_cast<int>(i));
    const auto dim = static_cast<Eigen::Index>(target.size());
    IntMat perm = IntMat::Zero(dim, dim);
    Eigen::Index col = 0;
    for (int i = 0; i <= k; ++i)
      for (const auto& x : monomial_basis(a, p, i))
        for (const auto& y : monomial_basis(b, p, k - i)) {
          Monomial m{x.ext | (y.ext << a), x.exps};
          m.exps.insert(m.exps.end(), y.exps.begin(), y.exps.end());
          perm(index.at(m), col++) = 1;
        }
    const auto& tk = whole.degrees[static_cast<std::size_t>(k)];
    const auto& pk = prod.degrees[static_cast<std::size_t>(k)];
    for (const auto& g : gens)
      if (reduce(tk.matrix(g) * perm, p) != reduce(perm * pk.matrix(g), p)) {
        intertwines = false;
        w.data["first_failure"] = {{"degree", k}, {"g", to_json(g)}};
        break;
      }
  }
  w.require("monomial_isomorphism_intertwines", intertwines);
  return w;
}

Witness lemma17_rank_check(int n, int d, Prime p, FunctorFamily f, int max_degree, TorusConvention c) {
  if (d < 0 || d > n) throw std::invalid_argument("lemma17_rank_check: need 0 <= d <= n");
  Witness w;
  auto functor = [&](int m) {
    return f == FunctorFamily::Trivial ? trivial_graded(m, p, max_degree) : torus_homology(m, p, max_degree, c);
  };
  w.data["family"] = to_string(f);
  w.data["convention"] = to_string(c);

  DimensionSeries point;
  point.coefficients.assign(static_cast<std::size_t>(max_degree + 1), 0);
  point.coefficients[0] = 1;
  w.require("unit_axiom", dimension_series(functor(0)) == point);
  if (f == FunctorFamily::Torus)
    w.require("kunneth_axiom", kunneth_check(d, n - d, p, max_degree, c).pass);

  const long long st = static_cast<long long>(ipow(p, d * (d - 1) / 2));
  const auto lhs = scale(convolve(dimension_series(functor(d)), steinberg_dim_series(functor(n - d)), max_degree), st);
  const auto rhs = steinberg_dim_series(tensor(permutation_module(stiefel_set(n, d, p)), functor(n)));
  w.data["lhs"] = lhs.to_json();
  w.data["rhs"] = rhs.to_json();
  for (int k = 0; k <= max_degree; ++k)
    if (lhs.at(k) != rhs.at(k)) {
      w.data["first_differing_degree"] = k;
      break;
    }
  w.require("graded_ranks_equal", lhs == rhs);
  return w;
}

}  // namespace stein
