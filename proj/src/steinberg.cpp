#include "stein/steinberg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace stein {

namespace {

Rational c(int n, int p) { return Rational(steinberg_constant(n, p)); }

void require_local(const Ring& ring) {
  if (ring.kind == Ring::Kind::Integers) throw std::domain_error("Steinberg idempotent: c_n is not invertible in Z");
}

std::string ring_label(const Ring& ring) { return ring.name(); }

nlohmann::json mismatch_column(const Mat<Rational>& a, const Mat<Rational>& b, const Ring& ring) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Rational x = canonicalize(ring, a(i, j)), y = canonicalize(ring, b(i, j));
      if (x != y) return {{"column", j}, {"row", i}, {"left", to_json(x)}, {"right", to_json(y)}};
    }
  return nullptr;
}

Mat<Rational> scaled(const Ring& ring, const Rational& s, const Mat<Rational>& a) {
  Mat<Rational> out = a;
  for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] *= s;
  return canonical_in(ring, std::move(out));
}

Mat<Rational> product_in(const Ring& ring, const Mat<Rational>& a, const Mat<Rational>& b) {
  return canonical_in(ring, a * b);
}

}  // namespace

AlgebraElement steinberg_idempotent(int n, Prime p, Ring ring) {
  require_local(ring);
  return Scalar(ring, 1 / c(n, p)) * (sigma_bar(n, p, ring) * b_bar(n, p, ring));
}

AlgebraElement conjugate_idempotent(int n, Prime p, Ring ring) {
  require_local(ring);
  return Scalar(ring, 1 / c(n, p)) * (b_bar(n, p, ring) * sigma_bar(n, p, ring));
}

AlgebraElement block_idempotent(const std::vector<int>& blocks, Prime p, Ring ring) {
  if (blocks.empty()) throw std::invalid_argument("block_idempotent: no blocks");
  AlgebraElement out = steinberg_idempotent(blocks.front(), p, ring);
  for (std::size_t b = 1; b < blocks.size(); ++b) out = block_product(out, steinberg_idempotent(blocks[b], p, ring));
  return out;
}

AlgebraElement steinberg_product_element(int i, int j, Prime p, Ring ring) {
  return shuffle_bar(i, j, p, ring) * u_bar(i, j, p, ring);
}

GFMatrix rotation_shuffle(int i, int j, Prime p) {
  std::vector<int> sigma(static_cast<std::size_t>(i + j));
  for (int a = 0; a < i + j; ++a) sigma[static_cast<std::size_t>(a)] = (a + j) % (i + j);
  return GFMatrix::permutation(p, sigma);
}

Witness idempotent_check(int n, Prime p) {
  Witness w;
  w.data["c_n"] = to_json(steinberg_constant(n, p));
  for (const Ring ring : {Ring::plocal(p), Ring::prime_field(p)}) {
    const auto e = steinberg_idempotent(n, p, ring);
    const auto eh = conjugate_idempotent(n, p, ring);
    const auto e2 = e * e, eh2 = eh * eh;
    const std::string tag = ring_label(ring);
    w.data["support"][tag] = e.support_size();
    w.require("e^2=e over " + tag, e2 == e);
    w.require("conjugate^2=conjugate over " + tag, eh2 == eh);
    if (!(e2 == e)) w.data["witness"]["e over " + tag] = difference_json(e2, e);
    if (!(eh2 == eh)) w.data["witness"]["conjugate over " + tag] = difference_json(eh2, eh);
  }
  const auto reduced = steinberg_idempotent(n, p, Ring::plocal(p)).change_ring(Ring::prime_field(p));
  w.require("reduction commutes with construction", reduced == steinberg_idempotent(n, p, Ring::prime_field(p)));
  return w;
}

Witness steinberg_lemma_check(int n, Prime p) {
  const Ring ring = Ring::plocal(p);
  const auto sb = sigma_bar(n, p, ring) * b_bar(n, p, ring);
  const auto lhs = sb * sb;
  const auto rhs = Scalar(ring, c(n, p)) * sb;
  Witness w;
  w.data["c_n"] = to_json(steinberg_constant(n, p));
  w.data["support_lhs"] = lhs.support_size();
  w.data["support_rhs"] = rhs.support_size();
  w.require("SBSB=c_n SB", lhs == rhs);
  if (!w.pass) w.data["witness"] = difference_json(lhs, rhs);
  return w;
}

Witness shuffle_identities_check(int i, int j, Prime p) {
  const Ring ring = Ring::plocal(p);
  const int n = i + j;
  const auto u = u_bar(i, j, p, ring), sh = shuffle_bar(i, j, p, ring);
  const auto young_b = block_product(b_bar(i, p, ring), b_bar(j, p, ring));
  const auto young_s = block_product(sigma_bar(i, p, ring), sigma_bar(j, p, ring));
  const auto b = b_bar(n, p, ring), s = sigma_bar(n, p, ring);
  Witness w;
  w.require("U (BxB) = B", u * young_b == b);
  w.require("(BxB) U = B", young_b * u == b);
  w.require("shuf (SxS) = S", sh * young_s == s);
  w.require("U (SxS) = (SxS) U", u * young_s == young_s * u);
  // The shuffles are left coset representatives only; the mirrored product
  // is recorded, not required.
  const auto mirrored = young_s * sh;
  w.data["(SxS) shuf = S"] = mirrored == s;
  if (!(mirrored == s)) w.data["mirrored_difference"] = difference_json(mirrored, s);
  return w;
}

Witness product_identity_check(int i, int j, Prime p) {
  const Ring ring = Ring::plocal(p);
  const auto lhs = steinberg_product_element(i, j, p, ring) * block_idempotent({i, j}, p, ring);
  const Rational scalar = c(i + j, p) / (c(i, p) * c(j, p));
  const auto rhs = Scalar(ring, scalar) * steinberg_idempotent(i + j, p, ring);
  Witness w;
  w.data["scalar"] = to_json(scalar);
  w.require("product identity", lhs == rhs);
  if (!w.pass) w.data["witness"] = difference_json(lhs, rhs);
  return w;
}

SummandBasis summand(Idempotent e, const ModuleData& m, Ring ring) {
  const auto x = e == Idempotent::Steinberg ? steinberg_idempotent(m.n, m.p, ring) : conjugate_idempotent(m.n, m.p, ring);
  SummandBasis out;
  out.module = m.name;
  out.idempotent = e;
  out.ring = ring;
  out.basis = column_basis_in(ring, act(x, m));
  out.rank = static_cast<std::size_t>(out.basis.cols());
  return out;
}

ModuleData steinberg_module(int n, Prime p) {
  const Ring ring = Ring::plocal(p);
  auto group = std::make_shared<MatrixGroup>(enumerate_group(GroupKind::GL, n, p));
  const auto sb = sigma_bar(n, p, ring) * b_bar(n, p, ring);
  std::vector<int> reversal(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) reversal[static_cast<std::size_t>(a)] = n - 1 - a;
  const GFMatrix w0 = GFMatrix::permutation(p, reversal);
  const auto unipotent = enumerate_group(GroupKind::UpperUnitriangular, n, p);

  auto column = [group](const AlgebraElement& x) {
    Vec<Rational> v = Vec<Rational>::Zero(static_cast<Eigen::Index>(group->order()));
    for (const auto& [k, q] : x.raw())
      v(static_cast<Eigen::Index>(group->index_of(GFMatrix::from_key(x.prime(), x.degree(), x.degree(), k)))) = q;
    return v;
  };
  const auto dim = static_cast<Eigen::Index>(unipotent.order());
  auto basis = std::make_shared<Mat<Rational>>(static_cast<Eigen::Index>(group->order()), dim);
  auto translates = std::make_shared<std::vector<std::size_t>>();
  for (Eigen::Index u = 0; u < dim; ++u) {
    const GFMatrix g = unipotent.element(static_cast<std::size_t>(u)) * w0;
    basis->col(u) = column(sb.left_translate(g));
    translates->push_back(group->index_of(g));
  }
  if (rank_rational(*basis) != static_cast<std::size_t>(dim)) throw std::logic_error("steinberg_module: basis is dependent");

  // Coordinates of h * Sigma_bar B_bar, computed on demand.
  struct Cache {
    std::mutex lock;
    std::map<std::size_t, Vec<Rational>> coords;
  };
  auto cache = std::make_shared<Cache>();
  auto coordinates = [group, basis, cache, sb, column](std::size_t h) {
    std::lock_guard<std::mutex> guard(cache->lock);
    auto it = cache->coords.find(h);
    if (it != cache->coords.end()) return it->second;
    const auto x = solve_rational(*basis, column(sb.left_translate(group->element(h))));
    if (!x) throw std::logic_error("steinberg_module: translate outside the span");
    return cache->coords.emplace(h, *x).first->second;
  };

  ModuleData m;
  m.name = "St_" + std::to_string(n);
  m.n = n;
  m.p = p;
  m.dim = static_cast<int>(dim);
  m.rho = [group, translates, coordinates, dim](const GFMatrix& g) {
    const auto gi = group->index_of(g);
    IntMat out(dim, dim);
    for (Eigen::Index u = 0; u < dim; ++u) {
      const auto x = coordinates(group->mul(gi, (*translates)[static_cast<std::size_t>(u)]));
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (denominator(x(r)) != 1) throw std::logic_error("steinberg_module: non-integral action");
        out(r, u) = numerator(x(r)).convert_to<long>();
      }
    }
    return out;
  };
  return m;
}

Witness conjugate_iso_check(int n, Prime p, const ModuleData& m, Ring ring) {
  const auto e = summand(Idempotent::Steinberg, m, ring);
  const auto eh = summand(Idempotent::Conjugate, m, ring);
  const Mat<Rational> sigma = act(sigma_bar(n, p, ring), m), borel = act(b_bar(n, p, ring), m);
  const Mat<Rational> eh_act = act(conjugate_idempotent(n, p, ring), m), e_act = act(steinberg_idempotent(n, p, ring), m);
  const Rational cn = c(n, p);

  const Mat<Rational> forward = product_in(ring, borel, e.basis);   // e_n M -> e^_n M
  const Mat<Rational> backward = product_in(ring, sigma, eh.basis);  // e^_n M -> e_n M
  Witness w;
  w.data["rank_e"] = e.rank;
  w.data["rank_conjugate"] = eh.rank;
  w.require("ranks equal", e.rank == eh.rank);
  w.require("forward lands in conjugate summand", equal_in(ring, product_in(ring, eh_act, forward), forward));
  w.require("backward lands in summand", equal_in(ring, product_in(ring, e_act, backward), backward));
  w.require("composite on e_n M is c_n", equal_in(ring, product_in(ring, sigma, forward), scaled(ring, cn, e.basis)));
  w.require("composite on conjugate summand is c_n", equal_in(ring, product_in(ring, borel, backward), scaled(ring, cn, eh.basis)));
  return w;
}

Witness coinvariants_iso_check(int n, Prime p, const ModuleData& m, Ring ring) {
  if (m.n != n || !(m.p == p)) throw std::invalid_argument("coinvariants_iso_check: module for another group");
  const auto st = steinberg_module(n, p);
  const auto coinv = coinvariant_rank(tensor(st, m), ring);
  const auto e = rank_in(ring, act(steinberg_idempotent(n, p, ring), m));
  Witness w;
  w.data["rank_summand"] = e;
  w.data["rank_coinvariants"] = coinv;
  w.require("ranks equal", e == coinv);
  return w;
}

Witness retraction_check(int i, int j, Prime p, const ModuleData& m, Ring ring) {
  const int n = i + j;
  if (m.n != n) throw std::invalid_argument("retraction_check: module degree must be i + j");
  const auto basis = summand(Idempotent::Steinberg, m, ring).basis;
  const Rational scale = c(i, p) * c(j, p) / c(n, p);
  const Mat<Rational> f = scaled(ring, scale, product_in(ring, act(block_idempotent({i, j}, p, ring), m), basis));
  const Mat<Rational> back = product_in(ring, act(steinberg_product_element(i, j, p, ring), m), f);
  Witness w;
  w.data["rank"] = basis.cols();
  w.require("product after f is the identity", equal_in(ring, back, basis));
  if (!w.pass) w.data["witness"] = mismatch_column(back, basis, ring);
  return w;
}

Witness associativity_check(int i, int j, int k, Prime p, const ModuleData& m, Ring ring) {
  const int n = i + j + k;
  if (m.n != n) throw std::invalid_argument("associativity_check: module degree must be i + j + k");
  const auto basis = column_basis_in(ring, act(block_idempotent({i, j, k}, p, ring), m));
  const auto id_i = AlgebraElement::identity(i, p, ring), id_k = AlgebraElement::identity(k, p, ring);

  const auto first_ij = block_product(steinberg_product_element(i, j, p, ring), id_k);
  const auto first_jk = block_product(id_i, steinberg_product_element(j, k, p, ring));
  const Mat<Rational> mid_ij = product_in(ring, act(first_ij, m), basis);
  const Mat<Rational> mid_jk = product_in(ring, act(first_jk, m), basis);
  const Mat<Rational> top = product_in(ring, act(steinberg_product_element(i + j, k, p, ring), m), mid_ij);
  const Mat<Rational> left = product_in(ring, act(steinberg_product_element(i, j + k, p, ring), m), mid_jk);

  Witness w;
  w.data["rank"] = basis.cols();
  w.require("first step lands in (e_{i+j} [x] e_k)M",
            equal_in(ring, product_in(ring, act(block_idempotent({i + j, k}, p, ring), m), mid_ij), mid_ij));
  w.require("first step lands in (e_i [x] e_{j+k})M",
            equal_in(ring, product_in(ring, act(block_idempotent({i, j + k}, p, ring), m), mid_jk), mid_jk));
  w.require("square commutes", equal_in(ring, top, left));
  if (!equal_in(ring, top, left)) w.data["witness"] = mismatch_column(top, left, ring);
  return w;
}

Witness commutativity_check(int i, int j, Prime p, const ModuleData& m, Ring ring) {
  const int n = i + j;
  if (m.n != n) throw std::invalid_argument("commutativity_check: module degree must be i + j");
  const GFMatrix sigma = rotation_shuffle(i, j, p);
  const auto eij = block_idempotent({i, j}, p, ring), eji = block_idempotent({j, i}, p, ring);
  const auto s = AlgebraElement::delta(sigma, ring), s_inv = AlgebraElement::delta(inverse(sigma), ring);
  const Mat<Rational> act_s = act(s, m);
  const Mat<Rational> prod_ij = act(steinberg_product_element(i, j, p, ring), m);
  const Mat<Rational> prod_ji = act(steinberg_product_element(j, i, p, ring), m);
  const int sign = (i * j) % 2 == 0 ? 1 : -1;

  Witness w;
  w.data["sign"] = sign;
  w.require("e_i[x]e_j = s^-1 (e_j[x]e_i) s", s_inv * eji * s == eij);

  const auto blocks = column_basis_in(ring, act(eij, m));
  const Mat<Rational> moved = product_in(ring, act_s, blocks);
  w.require("s maps (e_i[x]e_j)M into (e_j[x]e_i)M", equal_in(ring, product_in(ring, act(eji, m), moved), moved));

  // Unrestricted triangle, reported for information.
  const Mat<Rational> direct = product_in(ring, prod_ij, blocks);
  const Mat<Rational> via = product_in(ring, prod_ji, moved);
  w.data["unrestricted_triangle"] = equal_in(ring, direct, via);
  w.data["unrestricted_triangle_signed"] = equal_in(ring, scaled(ring, sign, direct), via);

  // On the image of f the triangle commutes up to sign(s) = (-1)^{ij}.
  const auto basis = summand(Idempotent::Steinberg, m, ring).basis;
  const Rational scale = c(i, p) * c(j, p) / c(n, p);
  const Mat<Rational> f = scaled(ring, scale, product_in(ring, act(eij, m), basis));
  const Mat<Rational> via_f = product_in(ring, prod_ji, product_in(ring, act_s, f));
  w.data["rank"] = basis.cols();
  w.require("product(s f v) = sign * v on e_{i+j}M", equal_in(ring, via_f, scaled(ring, sign, basis)));
  w.require("product(f v) = v on e_{i+j}M", equal_in(ring, product_in(ring, prod_ij, f), basis));
  return w;
}

}  // namespace stein
