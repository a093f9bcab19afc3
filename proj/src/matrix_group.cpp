#include "stein/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "stein/subspace.hpp"

namespace stein {

MatrixGroup::MatrixGroup(int n, Prime p, std::vector<GFMatrix> elements, std::string name)
    : n_(n), p_(p), name_(std::move(name)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const GFMatrix& x, const GFMatrix& y) { return x.key() < y.key(); });
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].rows() != n || elements_[i].cols() != n) throw std::invalid_argument("MatrixGroup: wrong matrix size");
    index_.emplace(elements_[i].key(), i);
  }
  const auto id = index_.find(GFMatrix::identity(p, n).key());
  if (id == index_.end()) throw std::invalid_argument("MatrixGroup: identity missing");
  identity_ = id->second;
}

MatrixGroup MatrixGroup::generated_by(int n, Prime p, const std::vector<GFMatrix>& generators, std::string name) {
  std::unordered_map<std::uint64_t, GFMatrix> seen;
  std::deque<GFMatrix> queue;
  const GFMatrix id = GFMatrix::identity(p, n);
  seen.emplace(id.key(), id);
  queue.push_back(id);
  while (!queue.empty()) {
    const GFMatrix x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      GFMatrix y = x * g;
      if (seen.emplace(y.key(), y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<GFMatrix> elems;
  elems.reserve(seen.size());
  for (auto& [k, m] : seen) elems.push_back(m);
  return {n, p, std::move(elems), std::move(name)};
}

std::size_t MatrixGroup::index_of(const GFMatrix& g) const {
  const auto it = index_.find(g.key());
  if (it == index_.end()) throw std::out_of_range("MatrixGroup: not an element");
  return it->second;
}

std::size_t MatrixGroup::mul(std::size_t a, std::size_t b) const { return index_of(elements_[a] * elements_[b]); }

std::size_t MatrixGroup::inverse(std::size_t a) const { return index_of(stein::inverse(elements_[a])); }

bool MatrixGroup::verify_axioms() const {
  for (const auto& x : elements_) {
    if (!contains(stein::inverse(x))) return false;
    for (const auto& y : elements_)
      if (!contains(x * y)) return false;
  }
  return contains(GFMatrix::identity(p_, n_));
}

long long gl_order(int n, int p) {
  long long r = 1;
  for (int k = 0; k < n; ++k) r *= ipow(p, n) - ipow(p, k);
  return r;
}

namespace {

std::vector<GFMatrix> all_vectors(int n, Prime p) {
  std::vector<GFMatrix> out;
  const long long total = ipow(p, n);
  for (long long code = 0; code < total; ++code) {
    GFMatrix v(p, n, 1);
    long long c = code;
    for (int i = n - 1; i >= 0; --i) {
      v.set(i, 0, c % p);
      c /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

GFMatrix hcat(const GFMatrix& a, const GFMatrix& b) {
  GFMatrix::Storage s(a.rows(), a.cols() + b.cols());
  s << a.entries(), b.entries();
  return {a.prime(), s};
}

std::vector<GFMatrix> all_invertible(int n, Prime p) {
  if (n == 0) return {GFMatrix(p, 0, 0)};
  return stiefel(n, n, p);
}

std::vector<GFMatrix> upper_triangular(int n, Prime p, bool unipotent) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(unipotent && i == j)) slots.emplace_back(i, j);
  std::vector<GFMatrix> out;
  std::vector<int> digits(slots.size(), 0);
  const int lo_diag = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == slots.size()) {
      GFMatrix m = GFMatrix::identity(p, n);
      for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, digits[s]);
      out.push_back(std::move(m));
      return;
    }
    const bool diag = slots[k].first == slots[k].second;
    for (int v = diag ? lo_diag : 0; v < p.value(); ++v) {
      digits[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<GFMatrix> stiefel(int n, int d, Prime p) {
  if (d < 0 || n < 0) throw std::invalid_argument("stiefel: negative dimension");
  if (d > n) return {};
  const auto vectors = all_vectors(n, p);
  std::vector<GFMatrix> out;
  std::function<void(const GFMatrix&)> rec = [&](const GFMatrix& partial) {
    if (partial.cols() == d) {
      out.push_back(partial);
      return;
    }
    const auto span = Subspace::span_cols(partial);
    for (const auto& v : vectors)
      if (!span.contains(v)) rec(hcat(partial, v));
  };
  rec(GFMatrix(p, n, 0));
  return out;
}

MatrixGroup enumerate_group(GroupKind kind, int n, Prime p, int i, int j) {
  if (n < 1) throw std::invalid_argument("enumerate_group: n must be >= 1");
  switch (kind) {
    case GroupKind::GL:
      return {n, p, all_invertible(n, p), "GL"};
    case GroupKind::Borel:
      return {n, p, upper_triangular(n, p, false), "Borel"};
    case GroupKind::UpperUnitriangular:
      return {n, p, upper_triangular(n, p, true), "UpperUnitriangular"};
    case GroupKind::PermMatrices: {
      std::vector<GFMatrix> out;
      for (const auto& s : all_permutations(n)) out.push_back(GFMatrix::permutation(p, s));
      return {n, p, std::move(out), "PermMatrices"};
    }
    case GroupKind::Unipotent: {
      if (i < 1 || j < 1 || i + j != n) throw std::invalid_argument("enumerate_group: U(i,j) needs i, j >= 1 and i + j = n");
      std::vector<GFMatrix> out;
      const long long total = ipow(p, i * j);
      for (long long code = 0; code < total; ++code) {
        GFMatrix m = GFMatrix::identity(p, n);
        long long c = code;
        for (int r = 0; r < i; ++r)
          for (int s = i; s < n; ++s) {
            m.set(r, s, c % p);
            c /= p;
          }
        out.push_back(std::move(m));
      }
      return {n, p, std::move(out), "U"};
    }
    case GroupKind::BlockGL:
    case GroupKind::Parabolic: {
      if (kind == GroupKind::BlockGL && j == 0) j = n - i;
      if (i < 1 || (kind == GroupKind::BlockGL && (j < 1 || i + j != n)) || (kind == GroupKind::Parabolic && i >= n))
        throw std::invalid_argument("enumerate_group: inconsistent block parameters");
      const int k = n - i;
      std::vector<GFMatrix> out;
      const auto top = all_invertible(i, p), bottom = all_invertible(k, p);
      const long long corner = kind == GroupKind::Parabolic ? ipow(p, i * k) : 1;
      for (const auto& a : top)
        for (const auto& b : bottom)
          for (long long code = 0; code < corner; ++code) {
            GFMatrix m = block_embed(a, b);
            long long c = code;
            if (kind == GroupKind::Parabolic)
              for (int r = 0; r < i; ++r)
                for (int s = i; s < n; ++s) {
                  m.set(r, s, c % p);
                  c /= p;
                }
            out.push_back(std::move(m));
          }
      return {n, p, std::move(out), kind == GroupKind::Parabolic ? "Parabolic" : "BlockGL"};
    }
  }
  throw std::invalid_argument("enumerate_group: unknown kind");
}

std::vector<GFMatrix> gl_generators(int n, Prime p) {
  std::vector<GFMatrix> gens;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) {
        GFMatrix t = GFMatrix::identity(p, n);
        t.set(a, b, 1);
        gens.push_back(std::move(t));
      }
  const int w = primitive_root(p.value());
  if (n > 0 && w != 1) {
    GFMatrix d = GFMatrix::identity(p, n);
    d.set(0, 0, w);
    gens.push_back(std::move(d));
  }
  return gens;
}

GLSet::GLSet(int n, Prime p, std::vector<GFMatrix> elements, Action action, std::string name)
    : n_(n), p_(p), name_(std::move(name)), elements_(std::move(elements)), action_(std::move(action)) {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index_.emplace(elements_[i].entry_list(), i).second) throw std::invalid_argument("GLSet: duplicate element");
}

GLSet GLSet::left_multiplication(int n, Prime p, std::vector<GFMatrix> elements, std::string name) {
  return {n, p, std::move(elements), [](const GFMatrix& g, const GFMatrix& x) { return g * x; }, std::move(name)};
}

std::size_t GLSet::index_of(const GFMatrix& x) const {
  const auto it = index_.find(x.entry_list());
  if (it == index_.end()) throw std::out_of_range("GLSet: element not in set");
  return it->second;
}

std::size_t GLSet::act(const GFMatrix& g, std::size_t i) const { return index_of(action_(g, elements_[i])); }

GLSet stiefel_set(int n, int d, Prime p) {
  return GLSet::left_multiplication(n, p, stiefel(n, d, p), "V_" + std::to_string(d) + "(F_" + std::to_string(p.value()) + "^" + std::to_string(n) + ")");
}

BruhatFactors bruhat_factor(const GFMatrix& m) {
  if (!is_invertible(m)) throw std::domain_error("bruhat_factor: matrix is singular");
  const Prime p = m.prime();
  const int q = p.value();
  const auto n = m.rows();
  GFMatrix::Storage w = m.entries();
  GFMatrix::Storage left = GFMatrix::Storage::Identity(n, n);   // row operations, upper triangular
  GFMatrix::Storage right = GFMatrix::Storage::Identity(n, n);  // column operations, upper triangular
  std::vector<int> pivot_row(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto reduce = [q](GFMatrix::Storage& s) { s = s.unaryExpr([q](int v) { return mod(v, q); }); };
  for (Eigen::Index j = 0; j < n; ++j) {
    // Clear the entries of column j lying in earlier pivot rows using earlier columns.
    for (Eigen::Index k = 0; k < j; ++k) {
      const int r = pivot_row[static_cast<std::size_t>(k)];
      const int f = w(r, j);
      if (f == 0) continue;
      w.col(j) -= f * w.col(k);
      right.col(j) -= f * right.col(k);
      reduce(w);
      reduce(right);
    }
    Eigen::Index r = -1;
    for (Eigen::Index i = n - 1; i >= 0; --i)
      if (!used[static_cast<std::size_t>(i)] && w(i, j) != 0) {
        r = i;
        break;
      }
    if (r < 0) throw std::logic_error("bruhat_factor: no pivot");
    const int inv = inv_mod(w(r, j), q);
    w.row(r) *= inv;
    left.row(r) *= inv;
    reduce(w);
    reduce(left);
    for (Eigen::Index i = 0; i < r; ++i) {
      const int f = w(i, j);
      if (f == 0 || used[static_cast<std::size_t>(i)]) continue;
      w.row(i) -= f * w.row(r);
      left.row(i) -= f * left.row(r);
      reduce(w);
      reduce(left);
    }
    used[static_cast<std::size_t>(r)] = true;
    pivot_row[static_cast<std::size_t>(j)] = static_cast<int>(r);
  }
  BruhatFactors out{inverse(GFMatrix(p, left)), GFMatrix(p, w), inverse(GFMatrix(p, right)), pivot_row};
  if (!(out.a * out.sigma * out.b == m)) throw std::logic_error("bruhat_factor: reconstruction failed");
  return out;
}

}  // namespace stein

namespace stein {

namespace {

std::vector<std::uint64_t> key_set(const MatrixGroup& g) {
  std::vector<std::uint64_t> keys;
  keys.reserve(g.order());
  for (const auto& x : g.elements()) keys.push_back(x.key());
  return keys;  // elements are already sorted by key
}

}  // namespace

std::vector<MatrixGroup> all_subgroups(const MatrixGroup& g) {
  struct Found {
    std::vector<GFMatrix> generators;
    MatrixGroup group;
  };
  std::map<std::vector<std::uint64_t>, Found> found;
  std::vector<GFMatrix> cyclic_generators;
  auto add = [&](std::vector<GFMatrix> gens) {
    auto h = MatrixGroup::generated_by(g.degree(), g.prime(), gens);
    auto keys = key_set(h);
    if (found.count(keys)) return false;
    found.emplace(std::move(keys), Found{std::move(gens), std::move(h)});
    return true;
  };
  add({});
  for (const auto& x : g.elements())
    if (add({x})) cyclic_generators.push_back(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<GFMatrix>> pending;
    for (const auto& [keys, f] : found)
      for (const auto& c : cyclic_generators)
        if (!f.group.contains(c)) {
          auto gens = f.generators;
          gens.push_back(c);
          pending.push_back(std::move(gens));
        }
    for (auto& gens : pending) grew = add(std::move(gens)) || grew;
  }
  std::vector<MatrixGroup> out;
  for (auto& [keys, f] : found) out.push_back(std::move(f.group));
  std::stable_sort(out.begin(), out.end(), [](const MatrixGroup& a, const MatrixGroup& b) { return a.order() < b.order(); });
  return out;
}

MatrixGroup conjugate(const MatrixGroup& h, const GFMatrix& x) {
  const GFMatrix xi = inverse(x);
  std::vector<GFMatrix> elems;
  elems.reserve(h.order());
  for (const auto& y : h.elements()) elems.push_back(x * y * xi);
  return {h.degree(), h.prime(), std::move(elems), h.name()};
}

MatrixGroup normalizer(const MatrixGroup& ambient, const MatrixGroup& h) {
  const auto keys = key_set(h);
  std::vector<GFMatrix> elems;
  for (const auto& x : ambient.elements())
    if (key_set(conjugate(h, x)) == keys) elems.push_back(x);
  return {ambient.degree(), ambient.prime(), std::move(elems), "N(" + h.name() + ")"};
}

std::vector<MatrixGroup> conjugacy_representatives(const MatrixGroup& ambient, const std::vector<MatrixGroup>& subgroups) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<MatrixGroup> out;
  for (const auto& h : subgroups) {
    if (seen.count(key_set(h))) continue;
    out.push_back(h);
    for (const auto& x : ambient.elements()) seen.insert(key_set(conjugate(h, x)));
  }
  return out;
}

}  // namespace stein
