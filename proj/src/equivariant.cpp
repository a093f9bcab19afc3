#include "stein/equivariant.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

#include "stein/chain_complex.hpp"
#include "stein/flag_complex.hpp"

namespace stein {

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<int> generators,
                         nlohmann::json labels)
    : name_(std::move(name)), table_(std::move(table)), generators_(std::move(generators)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("FiniteGroup: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == identity_) {
        if (mul(y, x) != identity_) throw std::invalid_argument("FiniteGroup: one-sided inverse");
        inverse_[static_cast<std::size_t>(x)] = y;
      }
  if (std::count(inverse_.begin(), inverse_.end(), -1)) throw std::invalid_argument("FiniteGroup: missing inverse");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw std::invalid_argument("FiniteGroup: not associative");
  for (int g : generators_)
    if (g < 0 || g >= n) throw std::invalid_argument("FiniteGroup: generator out of range");
  std::set<int> seen{identity_};
  std::deque<int> queue{identity_};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : generators_)
      if (seen.insert(mul(x, g)).second) queue.push_back(mul(x, g));
  }
  if (static_cast<int>(seen.size()) != n) throw std::invalid_argument("FiniteGroup: generators do not generate");
}

int FiniteGroup::power(int a, long long e) const {
  int out = identity_;
  for (long long i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::prime() const {
  int n = order();
  if (n == 1) return std::nullopt;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order(); ++x)
    for (int y = 0; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

namespace {

using Table = std::vector<std::vector<int>>;

Table make_table(int n, const std::function<int(int, int)>& f) {
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = f(a, b);
  return t;
}

bool is_prime_power(int n) {
  if (n == 1) return true;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

FiniteGroup elementary_abelian(int p, int k) {
  const int n = static_cast<int>(ipow(p, k));
  auto add = [p, k](int a, int b) {
    int out = 0, place = 1;
    for (int i = 0; i < k; ++i, a /= p, b /= p, place *= p) out += (a % p + b % p) % p * place;
    return out;
  };
  std::vector<int> gens;
  for (int i = 0, place = 1; i < k; ++i, place *= p) gens.push_back(place);
  return {"(Z/" + std::to_string(p) + ")^" + std::to_string(k), make_table(n, add), gens};
}

FiniteGroup cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<int> gens;
  if (order > 1) gens.push_back(1);
  return {"Z/" + std::to_string(order), make_table(order, [order](int a, int b) { return (a + b) % order; }), gens};
}

FiniteGroup dihedral8() {
  // r^a s^b -> a + 4b
  auto f = [](int x, int y) {
    const int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    return ((a + (b ? 4 - c : c)) % 4) + 4 * ((b + d) % 2);
  };
  return {"D8", make_table(8, f), {1, 4}};
}

FiniteGroup quaternion8() {
  // units 1, i, j, k -> 0..3, sign in bit 2
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto f = [](int x, int y) {
    const int u = x % 4, v = y % 4;
    const int s = (x / 4 + y / 4 + sign[u][v]) % 2;
    return unit[u][v] + 4 * s;
  };
  return {"Q8", make_table(8, f), {1, 2}};
}

FiniteGroup heisenberg(int p) {
  Prime{p};
  const int n = p * p * p;
  // (a, b, c) = [[1, a, c], [0, 1, b], [0, 0, 1]] -> a + p b + p^2 c
  auto f = [p](int x, int y) {
    const int a = x % p, b = x / p % p, c = x / (p * p);
    const int a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  };
  return {"Heis(" + std::to_string(p) + ")", make_table(n, f), {1, p}};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int nb = b.order();
  auto f = [&](int x, int y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); };
  std::vector<int> gens;
  for (int g : a.generators()) gens.push_back(g * nb + b.identity());
  for (int g : b.generators()) gens.push_back(a.identity() * nb + g);
  return {a.name() + "x" + b.name(), make_table(a.order() * nb, f), gens};
}

FiniteGroup as_finite_group(const MatrixGroup& g) {
  const int n = static_cast<int>(g.order());
  nlohmann::json labels = nlohmann::json::array();
  for (int i = 0; i < n; ++i) labels.push_back(to_json(g.element(static_cast<std::size_t>(i))));
  std::vector<int> gens(static_cast<std::size_t>(n));
  std::iota(gens.begin(), gens.end(), 0);
  return {g.name(), make_table(n, [&](int x, int y) { return static_cast<int>(g.mul(static_cast<std::size_t>(x), static_cast<std::size_t>(y))); }),
          gens, labels};
}

FiniteGroup pgroup_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  auto table = j.at("table").get<Table>();
  auto gens = j.at("generators").get<std::vector<int>>();
  if (static_cast<int>(table.size()) != order) throw std::invalid_argument("pgroup_from_json: table size differs from order");
  if (!is_prime_power(order)) throw std::invalid_argument("pgroup_from_json: order is not a prime power");
  return {j.value("name", std::string("table")), std::move(table), std::move(gens)};
}

FiniteGroup make_pgroup(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("make_pgroup: cannot open " + spec.substr(5));
    return pgroup_from_json(nlohmann::json::parse(in));
  }
  if (spec == "trivial" || spec == "1") return cyclic(1);
  if (spec == "D8") return dihedral8();
  if (spec == "Q8") return quaternion8();
  std::smatch m;
  if (std::regex_match(spec, m, std::regex(R"(Heis\(?(\d+)\)?)"))) return heisenberg(std::stoi(m[1]));
  std::optional<FiniteGroup> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find('x', start), spec.size());
    const std::string factor = spec.substr(start, end - start);
    if (!std::regex_match(factor, m, std::regex(R"([ZC]/?(\d+)(?:\^(\d+))?)")))
      throw std::invalid_argument("make_pgroup: unknown group '" + spec + "'");
    const int order = std::stoi(m[1]);
    const int power = m[2].matched ? std::stoi(m[2]) : 1;
    if (!is_prime_power(order)) throw std::invalid_argument("make_pgroup: order " + std::to_string(order) + " is not a prime power");
    for (int i = 0; i < power; ++i) out = out ? direct_product(*out, cyclic(order)) : cyclic(order);
    start = end + 1;
  }
  if (!out || !is_prime_power(out->order())) throw std::invalid_argument("make_pgroup: '" + spec + "' is not a p-group");
  return FiniteGroup(spec, out->table(), out->generators());
}

// ------------------------------------------------------------- subgroups

namespace {

Subgroup generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> seen{g.identity()};
  std::deque<int> queue{g.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : gens)
      if (seen.insert(g.mul(x, s)).second) queue.push_back(g.mul(x, s));
  }
  return {seen.begin(), seen.end()};
}

bool member(const Subgroup& h, int x) { return std::binary_search(h.begin(), h.end(), x); }

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found;
  for (int x = 0; x < g.order(); ++x) found.insert(generated(g, {x}));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Subgroup> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<int> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generated(g, gens)).second) grew = true;
      }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int y : h)
      if (!member(h, g.mul(g.mul(x, y), g.inverse(x)))) return false;
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name) {
  std::map<int, int> index;
  for (std::size_t i = 0; i < h.size(); ++i) index[h[i]] = static_cast<int>(i);
  auto t = make_table(static_cast<int>(h.size()), [&](int a, int b) {
    return index.at(g.mul(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]));
  });
  std::vector<int> gens(h.size());
  std::iota(gens.begin(), gens.end(), 0);
  // keep a small generating set: greedily drop redundant elements
  std::vector<int> small;
  Subgroup span{index.at(g.identity())};
  for (int x : gens)
    if (!member(span, x)) {
      small.push_back(x);
      FiniteGroup tmp("tmp", t, gens);
      span = generated(tmp, small);
    }
  return {name, std::move(t), small};
}

// ----------------------------------------------------------------- homs

bool GroupHom::is_trivial() const {
  return std::all_of(images.begin(), images.end(), [&](int v) { return v == target->identity(); });
}

Subgroup GroupHom::kernel() const {
  Subgroup out;
  for (int x = 0; x < source->order(); ++x)
    if ((*this)(x) == target->identity()) out.push_back(x);
  return out;
}

Subgroup GroupHom::image() const {
  std::set<int> s(images.begin(), images.end());
  return {s.begin(), s.end()};
}

std::vector<GroupHom> enumerate_homs(std::shared_ptr<const FiniteGroup> source, std::shared_ptr<const FiniteGroup> target) {
  const auto& gens = source->generators();
  const int n = source->order();
  std::vector<GroupHom> out;
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    images[static_cast<std::size_t>(source->identity())] = target->identity();
    std::deque<int> queue{source->identity()};
    bool ok = true;
    while (!queue.empty() && ok) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size() && ok; ++s) {
        const int y = source->mul(x, gens[s]);
        const int v = target->mul(images[static_cast<std::size_t>(x)], choice[s]);
        int& slot = images[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = v;
          queue.push_back(y);
        } else if (slot != v) {
          ok = false;
        }
      }
    }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = images[static_cast<std::size_t>(source->mul(x, y))] ==
             target->mul(images[static_cast<std::size_t>(x)], images[static_cast<std::size_t>(y)]);
    if (ok) out.push_back({source, target, std::move(images)});
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == target->order()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return out;
}

std::vector<std::pair<int, int>> graph_subgroup(const GroupHom& f) {
  std::vector<std::pair<int, int>> out;
  std::set<std::pair<int, int>> set;
  for (int x = 0; x < f.source->order(); ++x) {
    out.emplace_back(x, f(x));
    set.emplace(x, f(x));
  }
  for (const auto& [a, b] : out)
    for (const auto& [c, d] : out)
      if (!set.count({f.source->mul(a, c), f.target->mul(b, d)}))
        throw std::logic_error("graph_subgroup: graph is not closed; f is not a homomorphism");
  return out;
}

Subgroup centralizer_of_image(const GroupHom& f) {
  const auto im = f.image();
  Subgroup out;
  for (int l = 0; l < f.target->order(); ++l)
    if (std::all_of(im.begin(), im.end(), [&](int y) { return f.target->mul(l, y) == f.target->mul(y, l); })) out.push_back(l);
  return out;
}

GroupHom conjugate(const GroupHom& f, int lambda) {
  GroupHom out = f;
  const int inv = f.target->inverse(lambda);
  for (auto& v : out.images) v = f.target->mul(f.target->mul(lambda, v), inv);
  return out;
}

FixedPointIndex fixed_point_index(std::shared_ptr<const FiniteGroup> h, std::shared_ptr<const FiniteGroup> lambda) {
  FixedPointIndex out;
  const auto homs = enumerate_homs(h, lambda);
  out.hom_count = homs.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i].images, i);

  Subgroup center;
  for (int z = 0; z < lambda->order(); ++z) {
    bool central = true;
    for (int y = 0; y < lambda->order() && central; ++y) central = lambda->mul(z, y) == lambda->mul(y, z);
    if (central) center.push_back(z);
  }

  std::vector<bool> seen(homs.size(), false);
  std::size_t total = 0;
  bool orbit_stabilizer = true, centralizers_conjugate = true, contains_center = true, graphs = true;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (seen[i]) continue;
    const auto& f = homs[i];
    FixedPointClass cls{f, centralizer_of_image(f), 0};
    std::set<std::size_t> orbit;
    for (int l = 0; l < lambda->order(); ++l) {
      const GroupHom g = conjugate(f, l);
      const std::size_t j = index.at(g.images);
      orbit.insert(j);
      seen[j] = true;
      std::set<int> expected;
      for (int c : cls.centralizer) expected.insert(lambda->mul(lambda->mul(l, c), lambda->inverse(l)));
      const auto cg = centralizer_of_image(g);
      centralizers_conjugate = centralizers_conjugate && Subgroup(expected.begin(), expected.end()) == cg;
    }
    cls.orbit_size = orbit.size();
    total += cls.orbit_size;
    orbit_stabilizer = orbit_stabilizer && cls.orbit_size * cls.centralizer.size() == static_cast<std::size_t>(lambda->order());
    contains_center = contains_center && std::includes(cls.centralizer.begin(), cls.centralizer.end(), center.begin(), center.end());
    graphs = graphs && graph_subgroup(f).size() == static_cast<std::size_t>(h->order());
    out.classes.push_back(std::move(cls));
  }
  auto& w = out.witness;
  w.data["hom_count"] = out.hom_count;
  w.data["class_count"] = out.classes.size();
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& c : out.classes) orbits.push_back({{"orbit_size", c.orbit_size}, {"centralizer_order", c.centralizer.size()}});
  w.data["classes"] = orbits;
  w.require("orbit_sizes_sum_to_hom_count", total == out.hom_count);
  w.require("orbit_times_centralizer_is_target_order", orbit_stabilizer);
  w.require("centralizer_contains_center", contains_center);
  w.require("conjugate_homs_have_conjugate_centralizers", centralizers_conjugate);
  w.require("graph_has_source_order", graphs);
  return out;
}

Witness contractible_summand_report(std::shared_ptr<const FiniteGroup> h, int n, Prime p) {
  Witness w;
  const auto gl = enumerate_group(GroupKind::GL, n, p);
  auto lambda = std::make_shared<const FiniteGroup>(as_finite_group(gl));
  const auto index = fixed_point_index(h, lambda);
  w.require("index_consistent", index.witness.pass);
  nlohmann::json summands = nlohmann::json::array();
  std::size_t surviving_nontrivial = 0;
  for (const auto& cls : index.classes) {
    const auto im = cls.representative.image();
    std::vector<GFMatrix> mats;
    for (int y : im) mats.push_back(gl.element(static_cast<std::size_t>(y)));
    const auto hx = homology(chain_complex(fixed_complex(n, p, mats)));
    const bool trivial = cls.representative.is_trivial();
    const bool p_power = is_prime_power(static_cast<int>(im.size())) &&
                         (im.size() == 1 || static_cast<int>(im.size()) % static_cast<int>(p) == 0);
    if (!trivial && !hx.acyclic()) ++surviving_nontrivial;
    summands.push_back({{"trivial", trivial},
                        {"image_order", im.size()},
                        {"image_is_p_group", p_power},
                        {"orbit_size", cls.orbit_size},
                        {"centralizer_order", cls.centralizer.size()},
                        {"fixed_homology", hx.summary()},
                        {"contractible", hx.acyclic()}});
  }
  w.data["summands"] = summands;
  w.data["surviving_nontrivial"] = surviving_nontrivial;
  w.require("nontrivial_summands_contractible", surviving_nontrivial == 0);
  return w;
}

// ------------------------------------------------------ frattini family

namespace {

bool quotient_is_elementary_abelian(const FiniteGroup& g, const Subgroup& h, int p) {
  for (int x = 0; x < g.order(); ++x) {
    if (!member(h, g.power(x, p))) return false;
    for (int y = 0; y < g.order(); ++y) {
      const int comm = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
      if (!member(h, comm)) return false;
    }
  }
  return true;
}

int log_p(long long n, int p) {
  int k = 0;
  while (n > 1) {
    if (n % p) throw std::logic_error("log_p: not a power");
    n /= p;
    ++k;
  }
  return k;
}

// Greedy basis of G/H from `pool` (defaults to all of G), with coordinates of every element.
struct QuotientCoords {
  std::vector<int> basis;
  std::vector<std::vector<int>> coords;  // coords[x], length d
};

QuotientCoords quotient_coords(const FiniteGroup& g, const Subgroup& h, int p, const std::vector<int>& pool) {
  QuotientCoords out;
  std::vector<int> gens = h;
  Subgroup span = generated(g, gens);
  for (int x : pool)
    if (!member(span, x)) {
      out.basis.push_back(x);
      gens.push_back(x);
      span = generated(g, gens);
    }
  if (static_cast<int>(span.size()) != g.order()) throw std::invalid_argument("quotient basis: pool does not span G/H");
  const int d = static_cast<int>(out.basis.size());
  out.coords.assign(static_cast<std::size_t>(g.order()), {});
  std::vector<int> a(static_cast<std::size_t>(d), 0);
  for (;;) {
    int rep = g.identity();
    for (int i = 0; i < d; ++i) rep = g.mul(rep, g.power(out.basis[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]));
    for (int y : h) out.coords[static_cast<std::size_t>(g.mul(rep, y))] = a;
    int k = 0;
    while (k < d && ++a[static_cast<std::size_t>(k)] == p) a[static_cast<std::size_t>(k++)] = 0;
    if (k == d) break;
  }
  return out;
}

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> v(static_cast<std::size_t>(g.order()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Vector of an element of (Z/p)^n under the base-p encoding.
GFMatrix digits(int id, int n, Prime p) {
  GFMatrix v(p, n, 1);
  for (int i = 0; i < n; ++i, id /= p) v.set(i, 0, id % p);
  return v;
}

int encode(const GFMatrix& v, Prime p) {
  int id = 0;
  for (int i = static_cast<int>(v.rows()) - 1; i >= 0; --i) id = id * p + v(i, 0);
  return id;
}

// f on an ordered list of elements, as columns.
GFMatrix columns_of(const GroupHom& f, const std::vector<int>& elements, int n, Prime p) {
  GFMatrix m(p, n, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t c = 0; c < elements.size(); ++c) {
    const GFMatrix v = digits(f(elements[c]), n, p);
    for (int r = 0; r < n; ++r) m.set(r, static_cast<Eigen::Index>(c), v(r, 0));
  }
  return m;
}

std::set<std::vector<int>> keys(const std::vector<GFMatrix>& ms) {
  std::set<std::vector<int>> out;
  for (const auto& m : ms) out.insert(m.entry_list());
  return out;
}

GFMatrix coordinate_columns(const QuotientCoords& q, const Subgroup& h, int r, Prime p) {
  GFMatrix m(p, r, static_cast<Eigen::Index>(h.size()));
  for (std::size_t c = 0; c < h.size(); ++c)
    for (int i = 0; i < r; ++i) m.set(i, static_cast<Eigen::Index>(c), q.coords[static_cast<std::size_t>(h[c])][static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace

std::vector<int> quotient_basis(const FiniteGroup& g, const Subgroup& h, Prime p) {
  return quotient_coords(g, h, p, all_elements(g)).basis;
}

FrattiniFamily frattini_family(const FiniteGroup& g, Prime p) {
  FrattiniFamily out;
  auto& w = out.witness;
  if (g.prime() && *g.prime() != p) throw std::invalid_argument("frattini_family: G is not a p-group for this p");
  for (const auto& h : all_subgroups(g))
    if (is_normal(g, h) && quotient_is_elementary_abelian(g, h, p)) out.members.push_back(h);
  std::stable_sort(out.members.begin(), out.members.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  for (const auto& h : out.members) out.d.push_back(log_p(g.order() / static_cast<long long>(h.size()), p));

  std::set<Subgroup> set(out.members.begin(), out.members.end());
  bool closed = true;
  for (const auto& a : out.members)
    for (const auto& b : out.members) closed = closed && set.count(intersection(a, b));
  w.require("closed_under_intersection", closed);

  out.minimal = out.members.front();
  for (const auto& h : out.members) out.minimal = intersection(out.minimal, h);
  w.require("minimal_is_member", set.count(out.minimal) > 0);
  const int r = log_p(g.order() / static_cast<long long>(out.minimal.size()), p);
  w.data["rank"] = r;
  w.data["minimal_order"] = out.minimal.size();
  w.data["member_count"] = out.members.size();
  w.data["d"] = out.d;

  // H -> H/F inside G/F = F_p^r, and H -> its annihilator in Hom(G/F, F_p).
  const auto q = quotient_coords(g, out.minimal, p, all_elements(g));
  out.quotient_basis = q.basis;
  w.data["quotient_basis"] = q.basis;
  std::vector<Subspace> image, annihilator;
  for (const auto& h : out.members) {
    const GFMatrix cols = coordinate_columns(q, h, r, p);
    image.push_back(Subspace::span_cols(cols));
    annihilator.push_back(Subspace::span_cols(nullspace(transpose(cols))));
  }
  const auto subspaces = r == 0 ? std::vector<Subspace>{Subspace::zero(p, 0)} : enumerate_subspaces(r, p);
  const std::set<Subspace> all(subspaces.begin(), subspaces.end());
  auto bijective = [&](const std::vector<Subspace>& v) {
    const std::set<Subspace> s(v.begin(), v.end());
    return s.size() == v.size() && s == all;
  };
  bool preserving = true, reversing = true, dims = true;
  for (std::size_t a = 0; a < out.members.size(); ++a) {
    dims = dims && image[a].dim() == r - out.d[a] && annihilator[a].dim() == out.d[a];
    for (std::size_t b = 0; b < out.members.size(); ++b) {
      const bool sub = std::includes(out.members[b].begin(), out.members[b].end(), out.members[a].begin(), out.members[a].end());
      preserving = preserving && sub == image[b].contains(image[a]);
      reversing = reversing && sub == annihilator[a].contains(annihilator[b]);
    }
  }
  w.require("dimensions", dims);
  w.require("isomorphic_to_subspaces_of_quotient", bijective(image) && preserving);
  w.require("anti_isomorphic_via_annihilators", bijective(annihilator) && reversing);
  return out;
}

// ------------------------------------------------------ hom partition

GLSet hom_set(const FiniteGroup& g, int n, Prime p, const std::optional<Subgroup>& kernel) {
  auto src = std::make_shared<const FiniteGroup>(g);
  auto tgt = std::make_shared<const FiniteGroup>(elementary_abelian(p, n));
  std::vector<GFMatrix> elements;
  for (const auto& f : enumerate_homs(src, tgt))
    if (!kernel || f.kernel() == *kernel) elements.push_back(columns_of(f, g.generators(), n, p));
  std::string name = "Hom(" + g.name() + ",(Z/" + std::to_string(p.value()) + ")^" + std::to_string(n) + ")";
  if (kernel) name += "[" + std::to_string(kernel->size()) + "]";
  return GLSet::left_multiplication(n, p, std::move(elements), name);
}

namespace {

long long stiefel_count(int n, int d, int p) {
  if (d > n) return 0;
  long long c = 1;
  for (int i = 0; i < d; ++i) c *= ipow(p, n) - ipow(p, i);
  return c;
}

nlohmann::json subgroup_json(const Subgroup& h) { return h; }

}  // namespace

Witness hom_partition_check(const FiniteGroup& g, int n, Prime p) {
  Witness w;
  const auto fam = frattini_family(g, p);
  w.require("family_valid", fam.witness.pass);
  auto src = std::make_shared<const FiniteGroup>(g);
  auto tgt = std::make_shared<const FiniteGroup>(elementary_abelian(p, n));
  const auto homs = enumerate_homs(src, tgt);
  const int r = log_p(g.order() / static_cast<long long>(fam.minimal.size()), p);
  w.data["hom_count"] = homs.size();
  w.require("count_matches_frattini_rank", static_cast<long long>(homs.size()) == ipow(p, n * r));

  std::map<Subgroup, std::vector<const GroupHom*>> by_kernel;
  for (const auto& f : homs) by_kernel[f.kernel()].push_back(&f);
  const std::set<Subgroup> members(fam.members.begin(), fam.members.end());
  bool kernels_in_family = true;
  for (const auto& [k, _] : by_kernel) kernels_in_family = kernels_in_family && members.count(k);
  w.require("kernels_in_family", kernels_in_family);

  const auto gens = gl_generators(n, p);
  long long stiefel_total = 0;
  bool bijections = true, equivariant = true;
  nlohmann::json parts = nlohmann::json::array();
  for (std::size_t m = 0; m < fam.members.size(); ++m) {
    const auto& h = fam.members[m];
    const int d = fam.d[m];
    const auto it = by_kernel.find(h);
    const std::size_t count = it == by_kernel.end() ? 0 : it->second.size();
    const long long expected = stiefel_count(n, d, p);
    stiefel_total += expected;
    nlohmann::json part = {{"subgroup", subgroup_json(h)}, {"d", d}, {"homs", count}, {"stiefel", expected}};
    if (d <= n) {
      const auto basis = quotient_basis(g, h, p);
      part["basis"] = basis;
      std::vector<GFMatrix> images;
      if (it != by_kernel.end())
        for (const GroupHom* f : it->second) images.push_back(columns_of(*f, basis, n, p));
      const bool ok = keys(images) == keys(stiefel(n, d, p)) && images.size() == static_cast<std::size_t>(expected);
      bijections = bijections && ok;
      part["bijection"] = ok;
      // post-composition with g corresponds to g times the Stiefel matrix
      if (it != by_kernel.end())
        for (const GroupHom* f : it->second)
          for (const auto& x : gens) {
            GroupHom gf = *f;
            for (auto& v : gf.images) v = encode(x * digits(v, n, p), p);
            equivariant = equivariant && gf.kernel() == h && columns_of(gf, basis, n, p) == x * columns_of(*f, basis, n, p);
          }
    } else {
      bijections = bijections && count == 0;
      part["bijection"] = count == 0;
    }
    parts.push_back(part);
  }
  w.data["parts"] = parts;
  w.data["stiefel_total"] = stiefel_total;
  w.require("cardinality", static_cast<long long>(homs.size()) == stiefel_total);
  w.require("stiefel_bijections", bijections);
  w.require("gl_equivariant", equivariant);
  return w;
}

Witness theorem15_graded_check(const FiniteGroup& g, int n, Prime p, int max_degree) {
  Witness w;
  w.data["scope"] = "graded F_p-homology dimensions";
  const auto fam = frattini_family(g, p);
  w.require("family_valid", fam.witness.pass);
  nlohmann::json conventions = nlohmann::json::object();
  for (const auto c : {TorusConvention::Homology, TorusConvention::PlainSubstitution}) {
    const auto torus_n = torus_homology(n, p, max_degree, c);
    DimensionSeries sum;
    sum.coefficients.assign(static_cast<std::size_t>(max_degree + 1), 0);
    bool per_h = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t m = 0; m < fam.members.size(); ++m) {
      const int d = fam.d[m];
      nlohmann::json row = {{"subgroup", subgroup_json(fam.members[m])}, {"d", d}};
      if (d > n) {
        row["empty"] = true;
        rows.push_back(row);
        continue;
      }
      const auto formula = scale(convolve(dimension_series(torus_homology(d, p, max_degree, c)),
                                          steinberg_dim_series(torus_homology(n - d, p, max_degree, c)), max_degree),
                                 static_cast<long long>(ipow(p, d * (d - 1) / 2)));
      const auto actual = steinberg_dim_series(tensor(permutation_module(hom_set(g, n, p, fam.members[m])), torus_n));
      const auto via_stiefel = steinberg_dim_series(tensor(permutation_module(stiefel_set(n, d, p)), torus_n));
      row["formula"] = formula.to_json();
      row["homs"] = actual.to_json();
      row["stiefel"] = via_stiefel.to_json();
      for (int k = 0; k <= max_degree; ++k)
        if (formula.at(k) != actual.at(k) || formula.at(k) != via_stiefel.at(k)) {
          row["first_failure_degree"] = k;
          break;
        }
      per_h = per_h && formula == actual && formula == via_stiefel;
      for (int k = 0; k <= max_degree; ++k) sum.coefficients[static_cast<std::size_t>(k)] += formula.at(k);
      rows.push_back(row);
    }
    const auto total = steinberg_dim_series(tensor(permutation_module(hom_set(g, n, p)), torus_n));
    conventions[to_string(c)] = {{"per_subgroup", rows},
                                 {"aggregate", total.to_json()},
                                 {"sum_of_formulas", sum.to_json()},
                                 {"per_subgroup_pass", per_h},
                                 {"aggregate_pass", total == sum}};
    if (c == TorusConvention::Homology) {
      w.require("per_subgroup", per_h);
      w.require("aggregate", total == sum);
    }
  }
  w.data["conventions"] = conventions;
  return w;
}

Witness product_compatibility_check(const FiniteGroup& g, int m, int n, const Subgroup& h, const Subgroup& k, Prime p) {
  Witness w;
  const auto fam = frattini_family(g, p);
  const std::set<Subgroup> members(fam.members.begin(), fam.members.end());
  const Subgroup hk = intersection(h, k);
  if (!members.count(h) || !members.count(k)) throw std::invalid_argument("product_compatibility_check: H and K must lie in the family");
  auto rank = [&](const Subgroup& s) { return log_p(g.order() / static_cast<long long>(s.size()), p); };
  const int dh = rank(h), dk = rank(k);
  w.data["d"] = {dh, dk, rank(hk)};
  if (rank(hk) != dh + dk) throw std::invalid_argument("product_compatibility_check: H and K are not transverse");

  // bases of G/H taken from K and of G/K taken from H; together a basis of G/(H cap K)
  const auto bh = quotient_coords(g, h, p, k).basis;
  const auto bk = quotient_coords(g, k, p, h).basis;
  std::vector<int> bhk = bh;
  bhk.insert(bhk.end(), bk.begin(), bk.end());
  w.data["bases"] = {{"H", bh}, {"K", bk}, {"HK", bhk}};

  auto src = std::make_shared<const FiniteGroup>(g);
  auto em = std::make_shared<const FiniteGroup>(elementary_abelian(p, m));
  auto en = std::make_shared<const FiniteGroup>(elementary_abelian(p, n));
  std::vector<GroupHom> fh, fk;
  for (const auto& f : enumerate_homs(src, em))
    if (f.kernel() == h) fh.push_back(f);
  for (const auto& f : enumerate_homs(src, en))
    if (f.kernel() == k) fk.push_back(f);

  std::size_t products = 0;
  bool kernels = true, matches = true, onto = true;
  std::set<std::vector<int>> seen;
  for (const auto& f1 : fh)
    for (const auto& f2 : fk) {
      GroupHom prod{src, std::make_shared<const FiniteGroup>(elementary_abelian(p, m + n)), {}};
      for (int x = 0; x < g.order(); ++x)
        prod.images.push_back(f1(x) + static_cast<int>(ipow(p, m)) * f2(x));
      ++products;
      kernels = kernels && prod.kernel() == hk;
      const GFMatrix lhs = columns_of(prod, bhk, m + n, p);
      const GFMatrix rhs = block_diag(columns_of(f1, bh, m, p), columns_of(f2, bk, n, p));
      matches = matches && lhs == rhs;
      seen.insert(lhs.entry_list());
    }
  onto = static_cast<long long>(fh.size()) == stiefel_count(m, dh, p) && static_cast<long long>(fk.size()) == stiefel_count(n, dk, p);
  w.data["products"] = products;
  w.require("factor_counts_match_stiefel", onto);
  w.require("product_kernel_is_intersection", kernels);
  w.require("block_inclusion_matches", matches);
  w.require("products_distinct", seen.size() == products);
  return w;
}

}  // namespace stein
