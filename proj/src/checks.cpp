#include "stein/checks.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stein/equivariant.hpp"
#include "stein/flag_complex.hpp"
#include "stein/steinberg.hpp"
#include "stein/torus_homology.hpp"

namespace stein {

nlohmann::json CheckReport::to_json() const {
  return {{"check", check},
          {"params", params},
          {"status", status},
          {"witness", witness},
          {"elapsed_ms", elapsed_ms ? nlohmann::json(*elapsed_ms) : nlohmann::json(nullptr)},
          {"convention_notes", convention_notes}};
}

namespace {

// Regular modules are only materialized up to this group order.
constexpr long long kMaxRegularOrder = 200;

const nlohmann::json& all_notes() {
  static const nlohmann::json notes = {
      {"permutation_matrices", "P_sigma e_k = e_sigma(k)"},
      {"idempotent", "e_n = (1/c_n) Sigma_bar B_bar acting on left modules; conjugate e^_n = (1/c_n) B_bar Sigma_bar"},
      {"commutativity", "product_{j,i}(sigma x) = (-1)^{ij} product_{i,j}(x) on the image of the retraction f"},
      {"transverse_basis", "line W_i meet F_{n-i+1}"},
      {"join_sign", 1},
      {"suspension", "B^diamond: chains of subspaces not containing both 0 and V"},
      {"torus_action", "homology: rho(g) = Subst(g)^T, natural module in degree 1; plain-substitution rho(g) = Subst(g^-1) reported alongside"},
      {"stiefel_basis", "first basis of G/H in element order; product checks use bases of G/H drawn from K"},
      {"theorem15_scope", "graded F_p-homology dimensions, not spectra"}};
  return notes;
}

nlohmann::json notes(const std::vector<const char*>& keys) {
  nlohmann::json out = nlohmann::json::object();
  for (const char* k : keys) out[k] = all_notes().at(k);
  return out;
}

struct Resolved {
  int p, n, d, i, j, max_degree;
  std::string group;
};

Prime prime_of(int p) { return Prime(p); }

void require_range(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid parameters: " + what);
}

using Runner = std::function<Witness(const Resolved&, nlohmann::json& params)>;

struct CheckDef {
  std::string name;
  std::vector<const char*> used;  // parameter names echoed in the report
  std::vector<const char*> note_keys;
  Runner run;
};

Witness merge(std::initializer_list<std::pair<const char*, Witness>> parts) {
  Witness w;
  for (const auto& [key, part] : parts) {
    w.data[key] = part.data;
    w.require(key, part.pass);
  }
  return w;
}

std::shared_ptr<const FiniteGroup> group_of(const Resolved& r) { return std::make_shared<const FiniteGroup>(make_pgroup(r.group)); }

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    v.push_back({"idempotent", {"n", "p"}, {"idempotent"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 4, "1 <= n <= 4");
                   Witness w = merge({{"idempotent", idempotent_check(r.n, prime_of(r.p))}});
                   if (gl_order(r.n, r.p) <= kMaxRegularOrder) {
                     const auto reg = regular_module(r.n, prime_of(r.p));
                     const Ring fp = Ring::prime_field(r.p), zp = Ring::plocal(r.p);
                     const auto rank_p = summand(Idempotent::Steinberg, reg, fp).rank;
                     const auto rank_q = summand(Idempotent::Steinberg, reg, zp).rank;
                     const auto expected = static_cast<std::size_t>(ipow(r.p, r.n * (r.n - 1) / 2));
                     w.data["regular_rank"] = {{"F_p", rank_p}, {"Z_(p)", rank_q}, {"expected", expected}};
                     w.require("regular rank p^C(n,2)", rank_p == expected && rank_q == expected);
                     const auto iso = conjugate_iso_check(r.n, prime_of(r.p), reg, zp);
                     const auto coinv = coinvariants_iso_check(r.n, prime_of(r.p), reg, fp);
                     w.data["conjugate_iso"] = iso.data;
                     w.data["coinvariants"] = coinv.data;
                     w.require("conjugate_iso", iso.pass);
                     w.require("coinvariants", coinv.pass);
                   } else {
                     w.data["regular_rank"] = "skipped: group order above " + std::to_string(kMaxRegularOrder);
                   }
                   return w;
                 }});
    v.push_back({"steinberg-lemma", {"n", "p"}, {"idempotent"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 4, "1 <= n <= 4");
                   return steinberg_lemma_check(r.n, prime_of(r.p));
                 }});
    v.push_back({"product-identity", {"i", "j", "p"}, {"permutation_matrices"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.i >= 1 && r.j >= 1 && r.i + r.j <= 4, "i, j >= 1 and i + j <= 4");
                   return merge({{"product_identity", product_identity_check(r.i, r.j, prime_of(r.p))},
                                 {"shuffle_identities", shuffle_identities_check(r.i, r.j, prime_of(r.p))}});
                 }});
    v.push_back({"retraction", {"i", "j", "p"}, {"idempotent"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.i >= 1 && r.j >= 1 && gl_order(r.i + r.j, r.p) <= kMaxRegularOrder,
                                 "i, j >= 1 with |GL_{i+j}| <= " + std::to_string(kMaxRegularOrder));
                   return retraction_check(r.i, r.j, prime_of(r.p), regular_module(r.i + r.j, prime_of(r.p)), Ring::plocal(r.p));
                 }});
    v.push_back({"assoc-comm", {"i", "j", "p"}, {"idempotent", "commutativity"}, [](const Resolved& r, nlohmann::json& params) {
                   require_range(r.i >= 1 && r.j >= 1 && gl_order(r.i + r.j, r.p) <= kMaxRegularOrder,
                                 "i, j >= 1 with |GL_{i+j}| <= " + std::to_string(kMaxRegularOrder));
                   const Ring ring = Ring::plocal(r.p);
                   Witness w = merge({{"commutativity", commutativity_check(r.i, r.j, prime_of(r.p),
                                                                            regular_module(r.i + r.j, prime_of(r.p)), ring)}});
                   // associativity with third block d when requested and small enough
                   if (params.contains("d")) {
                     require_range(r.d >= 1 && gl_order(r.i + r.j + r.d, r.p) <= kMaxRegularOrder,
                                   "d >= 1 with |GL_{i+j+d}| <= " + std::to_string(kMaxRegularOrder));
                     const auto a = associativity_check(r.i, r.j, r.d, prime_of(r.p), regular_module(r.i + r.j + r.d, prime_of(r.p)), ring);
                     w.data["associativity"] = a.data;
                     w.require("associativity", a.pass);
                   }
                   return w;
                 }});
    v.push_back({"flag-homology", {"n", "p"}, {"suspension"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 4, "1 <= n <= 4");
                   Witness w = merge({{"B", homology_check(ComplexMode::B, r.n, prime_of(r.p))}});
                   if (r.n <= 3) {
                     const auto d = homology_check(ComplexMode::BDiamond, r.n, prime_of(r.p));
                     w.data["B_diamond"] = d.data;
                     w.require("B_diamond", d.pass);
                   }
                   return w;
                 }});
    v.push_back({"cycles", {"n", "p"}, {"transverse_basis"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 2 && r.n <= 3, "2 <= n <= 3");
                   return merge({{"cycles", cycles_check(r.n, prime_of(r.p))},
                                 {"top_homology_iso", top_homology_iso_check(r.n, prime_of(r.p))}});
                 }});
    v.push_back({"join-product", {"i", "j", "p"}, {"join_sign"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.i >= 1 && r.j >= 1 && r.i + r.j <= 3, "i, j >= 1 and i + j <= 3");
                   return join_product_check(r.i, r.j, prime_of(r.p));
                 }});
    v.push_back({"prop10", {"n", "i", "p"}, {"idempotent"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.i >= 1 && r.i < r.n && r.n <= 3, "1 <= i < n <= 3");
                   return prop10_check(r.n, r.i, prime_of(r.p));
                 }});
    v.push_back({"bruhat", {"n", "p"}, {"permutation_matrices"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 3, "1 <= n <= 3");
                   return bruhat_check(r.n, prime_of(r.p));
                 }});
    v.push_back({"unipotent-fixed", {"n", "p"}, {}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 2 && r.n <= 3, "2 <= n <= 3");
                   Witness w;
                   nlohmann::json classes = nlohmann::json::array();
                   bool all = true;
                   for (const auto& u : p_subgroup_representatives(r.n, prime_of(r.p))) {
                     const auto c = unipotent_fixed_check(u);
                     all = all && c.pass;
                     classes.push_back({{"order", u.order()}, {"result", c.data}});
                   }
                   w.data["classes"] = classes;
                   w.require("every p-subgroup class", all && !classes.empty());
                   return w;
                 }});
    v.push_back({"hom-partition", {"group", "n", "p"}, {"stiefel_basis"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 0 && r.n <= 4, "0 <= n <= 4");
                   const auto g = make_pgroup(r.group);
                   const auto fam = frattini_family(g, prime_of(r.p));
                   return merge({{"family", fam.witness}, {"partition", hom_partition_check(g, r.n, prime_of(r.p))}});
                 }});
    v.push_back({"lemma17", {"n", "d", "p", "max_degree"}, {"torus_action"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.d >= 0 && r.d <= r.n && r.n <= 3 && r.max_degree >= 0, "0 <= d <= n <= 3, D >= 0");
                   Witness w;
                   for (const auto c : {TorusConvention::Homology, TorusConvention::PlainSubstitution})
                     for (const auto f : {FunctorFamily::Trivial, FunctorFamily::Torus}) {
                       const auto part = lemma17_rank_check(r.n, r.d, prime_of(r.p), f, r.max_degree, c);
                       const std::string key = to_string(f) + "/" + to_string(c);
                       w.data[key] = part.data;
                       if (c == TorusConvention::Homology) w.require(key, part.pass);
                     }
                   return w;
                 }});
    v.push_back({"theorem15", {"group", "n", "p", "max_degree"}, {"torus_action", "stiefel_basis", "theorem15_scope"},
                 [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 3 && r.max_degree >= 0, "1 <= n <= 3, D >= 0");
                   return theorem15_graded_check(make_pgroup(r.group), r.n, prime_of(r.p), r.max_degree);
                 }});
    v.push_back({"fixed-point-index", {"group", "n", "p"}, {}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.n >= 1 && r.n <= 3, "1 <= n <= 3");
                   const auto h = group_of(r);
                   auto abelian = std::make_shared<const FiniteGroup>(elementary_abelian(r.p, r.n));
                   const auto ab = fixed_point_index(h, abelian);
                   Witness w = merge({{"gl_target", contractible_summand_report(h, r.n, prime_of(r.p))},
                                      {"abelian_target", ab.witness}});
                   bool singletons = true;
                   for (const auto& c : ab.classes) singletons = singletons && c.orbit_size == 1;
                   w.require("abelian target orbits are singletons", singletons);
                   return w;
                 }});
    v.push_back({"product-compat", {"group", "i", "j", "p"}, {"stiefel_basis"}, [](const Resolved& r, nlohmann::json&) {
                   require_range(r.i >= 0 && r.j >= 0 && r.i + r.j <= 4, "i, j >= 0 and i + j <= 4");
                   const auto g = make_pgroup(r.group);
                   const auto fam = frattini_family(g, prime_of(r.p));
                   Witness w;
                   nlohmann::json pairs = nlohmann::json::array();
                   bool all = true;
                   for (std::size_t a = 0; a < fam.members.size(); ++a)
                     for (std::size_t b = 0; b < fam.members.size(); ++b) {
                       const auto hk = intersection(fam.members[a], fam.members[b]);
                       std::size_t m = 0;
                       while (fam.members[m] != hk) ++m;
                       if (fam.d[m] != fam.d[a] + fam.d[b] || fam.d[a] > r.i || fam.d[b] > r.j) continue;
                       const auto c = product_compatibility_check(g, r.i, r.j, fam.members[a], fam.members[b], prime_of(r.p));
                       all = all && c.pass;
                       pairs.push_back({{"H", fam.members[a]}, {"K", fam.members[b]}, {"result", c.data}});
                     }
                   w.data["pairs"] = pairs;
                   w.require("every transverse pair", all && !pairs.empty());
                   return w;
                 }});
    return v;
  }();
  return defs;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
  }();
  return names;
}

CheckReport run_check(const std::string& name, const CheckParams& params, bool timings) {
  const CheckDef* def = nullptr;
  for (const auto& d : registry())
    if (d.name == name) def = &d;
  if (!def) throw std::invalid_argument("unknown check '" + name + "'");

  Resolved r{params.p.value_or(2), params.n.value_or(2), params.d.value_or(1), params.i.value_or(1),
             params.j.value_or(1), params.max_degree.value_or(4), params.group.value_or("Z2^2")};
  Prime{r.p};  // validates
  nlohmann::json resolved = nlohmann::json::object();
  for (const char* key : def->used) {
    const std::string k = key;
    if (k == "p") resolved["p"] = r.p;
    if (k == "n") resolved["n"] = r.n;
    if (k == "d") resolved["d"] = r.d;
    if (k == "i") resolved["i"] = r.i;
    if (k == "j") resolved["j"] = r.j;
    if (k == "max_degree") resolved["max_degree"] = r.max_degree;
    if (k == "group") resolved["group"] = r.group;
  }
  if (name == "assoc-comm" && params.d) resolved["d"] = r.d;
  if (resolved.contains("group")) {
    const auto g = make_pgroup(r.group);
    if (g.prime() && *g.prime() != r.p)
      throw std::invalid_argument("invalid parameters: group " + r.group + " is not a " + std::to_string(r.p) + "-group");
  }

  CheckReport report;
  report.check = name;
  report.params = resolved;
  report.convention_notes = notes(def->note_keys);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Witness w = def->run(r, resolved);
    report.status = w.pass ? "pass" : "fail";
    report.witness = w.data;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    report.status = "fail";
    report.witness = {{"error", e.what()}};
  }
  if (timings)
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

CheckParams params(std::optional<int> n, std::optional<int> p, std::optional<int> i = {}, std::optional<int> j = {},
                   std::optional<int> d = {}, std::optional<int> max_degree = {}, std::optional<std::string> group = {}) {
  return {p, n, d, i, j, max_degree, std::move(group)};
}

}  // namespace

std::vector<PlannedCheck> suite_plan(SuiteLevel level) {
  std::vector<PlannedCheck> plan;
  auto add = [&](const char* check, CheckParams p) { plan.push_back({check, std::move(p)}); };
  const bool full = level == SuiteLevel::Full;

  std::vector<std::pair<int, int>> np = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
  if (full) np.insert(np.end(), {{1, 5}, {3, 2}});
  for (auto [n, p] : np) add("idempotent", params(n, p));
  for (auto [n, p] : np) add("steinberg-lemma", params(n, p));

  std::vector<std::tuple<int, int, int>> ijp = {{1, 1, 2}, {1, 1, 3}};
  if (full) ijp.insert(ijp.end(), {{1, 2, 2}, {2, 1, 2}});
  for (auto [i, j, p] : ijp) add("product-identity", params({}, p, i, j));
  for (auto [i, j, p] : ijp) add("retraction", params({}, p, i, j));
  for (auto [i, j, p] : ijp) add("join-product", params({}, p, i, j));
  add("assoc-comm", params({}, 2, 1, 1));
  add("assoc-comm", params({}, 3, 1, 1));
  if (full) add("assoc-comm", params({}, 2, 1, 1, 1));

  std::vector<std::pair<int, int>> hp = {{2, 2}, {2, 3}};
  if (full) hp.insert(hp.end(), {{2, 5}, {3, 2}, {3, 3}, {4, 2}});
  for (auto [n, p] : hp) add("flag-homology", params(n, p));

  std::vector<std::pair<int, int>> small = {{2, 2}, {2, 3}};
  if (full) small.push_back({3, 2});
  for (auto [n, p] : small) add("cycles", params(n, p));
  for (auto [n, p] : small) add("bruhat", params(n, p));
  for (auto [n, p] : small) add("unipotent-fixed", params(n, p));

  std::vector<std::tuple<int, int, int>> nip = {{2, 1, 2}, {2, 1, 3}};
  if (full) nip.insert(nip.end(), {{3, 1, 2}, {3, 2, 2}});
  for (auto [n, i, p] : nip) add("prop10", params(n, p, i));

  std::vector<std::tuple<const char*, int, int>> parts = {{"Z4", 1, 2}, {"Z4", 2, 2}, {"Z2^2", 2, 2}, {"Z9", 1, 3}, {"Z3^2", 2, 3}};
  if (full) {
    parts.clear();
    for (const char* g : {"Z4", "Z2^2", "Z2xZ4", "Q8", "D8"})
      for (int n = 1; n <= 3; ++n) parts.emplace_back(g, n, 2);
    for (const char* g : {"Z9", "Z3^2", "Heis3"})
      for (int n = 1; n <= 2; ++n) parts.emplace_back(g, n, 3);
  }
  for (auto [g, n, p] : parts) add("hom-partition", params(n, p, {}, {}, {}, {}, std::string(g)));

  for (auto [n, d, p] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {2, 1, 2}, {2, 2, 2}, {2, 1, 3}})
    add("lemma17", params(n, p, {}, {}, d, 4));
  if (full) add("lemma17", params(3, 2, {}, {}, 1, 4));

  for (const char* g : {"Z2", "Z4", "Z2^2"}) add("theorem15", params(2, 2, {}, {}, {}, 4, std::string(g)));
  add("theorem15", params(1, 3, {}, {}, {}, 4, std::string("Z3")));
  if (full) add("theorem15", params(2, 3, {}, {}, {}, 3, std::string("Z3")));

  std::vector<std::tuple<const char*, int, int>> fpi = {{"Z2", 2, 2}, {"Z4", 2, 2}, {"Z3", 2, 3}, {"trivial", 2, 2}};
  if (full) fpi.insert(fpi.end(), {{"Z2", 3, 2}, {"Z2^2", 3, 2}, {"Q8", 3, 2}});
  for (auto [g, n, p] : fpi) add("fixed-point-index", params(n, p, {}, {}, {}, {}, std::string(g)));

  add("product-compat", params({}, 2, 1, 1, {}, {}, std::string("Z2^2")));
  add("product-compat", params({}, 3, 1, 1, {}, {}, std::string("Z3^2")));
  if (full) add("product-compat", params({}, 2, 2, 1, {}, {}, std::string("Z2xZ4")));
  return plan;
}

std::vector<CheckReport> run_plan(const std::vector<PlannedCheck>& plan, int threads, bool timings) {
  std::vector<CheckReport> out(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < plan.size(); k = next++) {
      try {
        out[k] = run_check(plan[k].check, plan[k].params, timings);
      } catch (const std::exception& e) {
        out[k].check = plan[k].check;
        out[k].status = "fail";
        out[k].witness = {{"error", e.what()}};
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(plan.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<CheckReport> run_suite(SuiteLevel level, int threads, bool timings) {
  return run_plan(suite_plan(level), threads, timings);
}

std::string to_markdown(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "| check | params | status | elapsed_ms |\n|---|---|---|---|\n";
  for (const auto& r : reports) {
    os << "| " << r.check << " | ";
    bool first = true;
    for (const auto& [k, v] : r.params.items()) {
      os << (first ? "" : ", ") << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    os << " | " << r.status << " | ";
    if (r.elapsed_ms) {
      std::ostringstream t;
      t.precision(1);
      t << std::fixed << *r.elapsed_ms;
      os << t.str();
    } else {
      os << "-";
    }
    os << " |\n";
  }
  for (const auto& r : reports)
    if (!r.passed()) os << "\n**" << r.check << " failed:** `" << r.witness.dump() << "`\n";
  return os.str();
}

}  // namespace stein
