#include "stein/group_algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace stein {

namespace {

// Packed n x n matrices (n <= 4) decoded into small arrays for fast products.
class KeyCodec {
 public:
  KeyCodec(int n, int p) : n_(n), p_(p) {
    if (n > 4) throw std::invalid_argument("AlgebraElement: degree above 4 is not supported");
  }
  using Digits = std::array<int, 16>;

  Digits decode(std::uint64_t key) const {
    Digits d{};
    for (int k = n_ * n_ - 1; k >= 0; --k) {
      d[static_cast<std::size_t>(k)] = static_cast<int>(key % static_cast<std::uint64_t>(p_));
      key /= static_cast<std::uint64_t>(p_);
    }
    return d;
  }

  std::uint64_t product(const Digits& a, const Digits& b) const {
    std::uint64_t key = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int s = 0;
        for (int k = 0; k < n_; ++k) s += a[static_cast<std::size_t>(i * n_ + k)] * b[static_cast<std::size_t>(k * n_ + j)];
        key = key * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(s % p_);
      }
    return key;
  }

 private:
  int n_, p_;
};

}  // namespace

AlgebraElement AlgebraElement::delta(const GFMatrix& g, Ring ring) {
  if (g.rows() != g.cols()) throw std::invalid_argument("AlgebraElement::delta: not square");
  AlgebraElement x(static_cast<int>(g.rows()), g.prime(), ring);
  x.add_term(g, 1);
  return x;
}

AlgebraElement AlgebraElement::group_sum(const MatrixGroup& g, Ring ring, bool signed_by_permutation) {
  AlgebraElement x(g.degree(), g.prime(), ring);
  for (const auto& m : g.elements()) {
    int sign = 1;
    if (signed_by_permutation) {
      std::vector<int> sigma(static_cast<std::size_t>(m.cols()));
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
          if (m(r, c) != 0) sigma[static_cast<std::size_t>(c)] = static_cast<int>(r);
      sign = permutation_sign(sigma);
    }
    x.add_term(m, sign);
  }
  return x;
}

Scalar AlgebraElement::coefficient(const GFMatrix& g) const {
  const auto it = coeffs_.find(g.key());
  return {ring_, it == coeffs_.end() ? Rational(0) : it->second};
}

void AlgebraElement::add_term(const GFMatrix& g, const Rational& c) {
  if (g.rows() != n_ || g.cols() != n_ || !(g.prime() == p_)) throw std::invalid_argument("AlgebraElement: element of another group");
  const auto k = g.key();
  Rational v = coeffs_.count(k) ? coeffs_[k] + c : c;
  v = canonicalize(ring_, v);
  if (v.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = v;
}

std::vector<std::pair<std::uint64_t, Rational>> AlgebraElement::sorted_raw_terms() const {
  std::vector<std::pair<std::uint64_t, Rational>> out(coeffs_.begin(), coeffs_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<GFMatrix, Scalar>> AlgebraElement::terms() const {
  std::vector<std::pair<GFMatrix, Scalar>> out;
  for (const auto& [k, v] : sorted_raw_terms()) out.emplace_back(GFMatrix::from_key(p_, n_, n_, k), Scalar(ring_, v));
  return out;
}

AlgebraElement AlgebraElement::change_ring(Ring target) const {
  AlgebraElement out(n_, p_, target);
  for (const auto& [k, v] : coeffs_) {
    Rational c = canonicalize(target, v);
    if (!c.is_zero()) out.coeffs_.emplace(k, std::move(c));
  }
  return out;
}

AlgebraElement AlgebraElement::left_translate(const GFMatrix& g) const {
  AlgebraElement out(n_, p_, ring_);
  const KeyCodec codec(n_, p_.value());
  const auto gd = codec.decode(g.key());
  for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(codec.product(gd, codec.decode(k)), v);
  return out;
}

AlgebraElement AlgebraElement::right_translate(const GFMatrix& g) const {
  AlgebraElement out(n_, p_, ring_);
  const KeyCodec codec(n_, p_.value());
  const auto gd = codec.decode(g.key());
  for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(codec.product(codec.decode(k), gd), v);
  return out;
}

void AlgebraElement::require_compatible(const AlgebraElement& y) const {
  if (n_ != y.n_ || !(p_ == y.p_)) throw std::invalid_argument("AlgebraElement: mismatched groups");
  if (!(ring_ == y.ring_)) throw std::invalid_argument("AlgebraElement: mismatched rings");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  require_compatible(y);
  for (const auto& [k, v] : y.coeffs_) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, v);
      continue;
    }
    it->second = canonicalize(ring_, it->second + v);
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& y) {
  return *this += Scalar(y.ring_, -1) * y;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_compatible(y);
  const KeyCodec codec(x.n_, x.p_.value());
  std::vector<std::pair<KeyCodec::Digits, const Rational*>> right;
  right.reserve(y.coeffs_.size());
  for (const auto& [k, v] : y.coeffs_) right.emplace_back(codec.decode(k), &v);
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(x.coeffs_.size() * y.coeffs_.size() / 2 + 1);
  for (const auto& [kx, vx] : x.coeffs_) {
    const auto dx = codec.decode(kx);
    for (const auto& [dy, vy] : right) acc[codec.product(dx, dy)] += vx * *vy;
  }
  AlgebraElement out(x.n_, x.p_, x.ring_);
  for (auto& [k, v] : acc) {
    Rational c = canonicalize(x.ring_, v);
    if (!c.is_zero()) out.coeffs_.emplace(k, std::move(c));
  }
  return out;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
  if (!(s.ring() == x.ring_)) throw std::invalid_argument("AlgebraElement: scalar from another ring");
  AlgebraElement out(x.n_, x.p_, x.ring_);
  if (s.is_zero()) return out;
  for (const auto& [k, v] : x.coeffs_) {
    Rational c = canonicalize(x.ring_, s.value() * v);
    if (!c.is_zero()) out.coeffs_.emplace(k, std::move(c));
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.n_ == y.n_ && x.p_ == y.p_ && x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
}

std::optional<AlgebraElement::Difference> AlgebraElement::first_difference(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_compatible(y);
  std::vector<std::uint64_t> keys;
  for (const auto& [k, v] : x.coeffs_) keys.push_back(k);
  for (const auto& [k, v] : y.coeffs_) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (auto k : keys) {
    const auto a = x.coeffs_.find(k), b = y.coeffs_.find(k);
    const Rational va = a == x.coeffs_.end() ? Rational(0) : a->second;
    const Rational vb = b == y.coeffs_.end() ? Rational(0) : b->second;
    if (va != vb) return Difference{GFMatrix::from_key(x.p_, x.n_, x.n_, k), Scalar(x.ring_, va), Scalar(x.ring_, vb)};
  }
  return std::nullopt;
}

AlgebraElement block_product(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.prime() == y.prime()) || !(x.ring() == y.ring())) throw std::invalid_argument("block_product: mismatched prime or ring");
  AlgebraElement out(x.degree() + y.degree(), x.prime(), x.ring());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add_term(block_embed(a, b), ca.value() * cb.value());
  return out;
}

Integer steinberg_constant(int n, int p) {
  Integer c = 1;
  for (int i = 1; i <= n; ++i) c *= Integer(ipow(p, i) - 1);
  return c;
}

AlgebraElement sigma_bar(int n, Prime p, Ring ring) {
  return AlgebraElement::group_sum(enumerate_group(GroupKind::PermMatrices, n, p), ring, true);
}

AlgebraElement b_bar(int n, Prime p, Ring ring) { return AlgebraElement::group_sum(enumerate_group(GroupKind::Borel, n, p), ring); }

AlgebraElement u_bar(int i, int j, Prime p, Ring ring) {
  return AlgebraElement::group_sum(enumerate_group(GroupKind::Unipotent, i + j, p, i, j), ring);
}

std::vector<std::vector<int>> shuffles(int i, int j) {
  std::vector<std::vector<int>> out;
  for (const auto& s : all_permutations(i + j)) {
    bool ok = true;
    for (int a = 0; a + 1 < i && ok; ++a) ok = s[static_cast<std::size_t>(a)] < s[static_cast<std::size_t>(a + 1)];
    for (int a = i; a + 1 < i + j && ok; ++a) ok = s[static_cast<std::size_t>(a)] < s[static_cast<std::size_t>(a + 1)];
    if (ok) out.push_back(s);
  }
  return out;
}

AlgebraElement shuffle_bar(int i, int j, Prime p, Ring ring) {
  if (i < 1 || j < 1) throw std::invalid_argument("shuffle_bar: i, j must be >= 1");
  AlgebraElement x(i + j, p, ring);
  for (const auto& s : shuffles(i, j)) x.add_term(GFMatrix::permutation(p, s), permutation_sign(s));
  return x;
}

}  // namespace stein
