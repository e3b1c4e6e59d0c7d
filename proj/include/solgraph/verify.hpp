#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "solgraph/catalog.hpp"
#include "solgraph/graph.hpp"
#include "solgraph/radical.hpp"
#include "solgraph/solubilizer.hpp"

namespace solgraph {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

using EvidenceValue = std::variant<std::int64_t, bool>;
using Evidence = std::map<std::string, EvidenceValue>;

struct CheckResult {
  std::string check_id;
  std::string group_name;
  std::optional<std::string> element;  // witness, when one exists
  CheckStatus status = CheckStatus::pass;
  Evidence evidence;
  std::string paper_anchor;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CatalogSnapshotEntry {
  std::string name;
  std::uint32_t degree = 0;
  std::uint64_t order = 0;
  friend bool operator==(const CatalogSnapshotEntry&, const CatalogSnapshotEntry&) = default;
};

struct VerificationReport {
  std::string tool_version;
  std::vector<CatalogSnapshotEntry> catalog;
  std::vector<CheckResult> checks;

  bool any_failed() const {
    for (const CheckResult& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::uint64_t cap = 10000;
  bool inject_fault = false;  // self-test aid: negates declared expectations
};

/// Lazily computed per-group artifacts shared by all checks on that group.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(const CatalogEntry& entry, VerifyOptions opt = {})
      : entry_(entry), opt_(opt) {}

  const CatalogEntry& entry() const { return entry_; }
  const PermGroup& group() const { return entry_.group; }
  const VerifyOptions& options() const { return opt_; }
  PairCache& cache() { return cache_; }

  const detail::GroupContext& ctx() {
    if (!ctx_) ctx_ = detail::make_context(entry_.group, opt_.cap);
    return *ctx_;
  }

  const ElementSet& elements() { return ctx().elements; }
  bool soluble() { return ctx().soluble; }

  const ConjugacyClasses& classes() {
    if (!classes_) classes_ = conjugacy_classes(entry_.group, ctx().elements);
    return *classes_;
  }

  const SolubilityGraph& graph() {
    if (!graph_) graph_ = detail::build_graph_in_context(ctx(), cache_);
    return *graph_;
  }

  const RadicalResult& radical() {
    if (!radical_) radical_ = detail::soluble_radical_in_context(ctx(), cache_, opt_.cap);
    return *radical_;
  }

  std::uint64_t sol_size(std::size_t i) { return graph().degree_of(i) + 1; }

  ElementSet sol_members(std::size_t i) {
    const SolubilityGraph& g = graph();
    std::vector<Perm> out;
    out.push_back(elements()[i]);
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) out.push_back(elements()[j]);
    return ElementSet::from_unsorted(elements().degree(), std::move(out));
  }

 private:
  CatalogEntry entry_;
  VerifyOptions opt_;
  PairCache cache_;
  std::optional<detail::GroupContext> ctx_;
  std::optional<ConjugacyClasses> classes_;
  std::optional<SolubilityGraph> graph_;
  std::optional<RadicalResult> radical_;
};

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_square(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (p * p == n) return is_prime_u64(p);
  return false;
}

inline bool is_prime_cube(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p * p <= n; ++p)
    if (p * p * p == n) return is_prime_u64(p);
  return false;
}

inline std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// ---- individual checks -----------------------------------------------

inline CheckResult check_thompson_complete(GroupAnalysis& a) {
  CheckResult r;
  bool complete = a.graph().complete();
  bool soluble = a.soluble();
  r.evidence["graph_complete"] = complete;
  r.evidence["soluble"] = soluble;
  r.status = (complete == soluble) ? CheckStatus::pass : CheckStatus::fail;
  if (a.entry().is_soluble_expected) {
    bool declared = *a.entry().is_soluble_expected;
    if (a.options().inject_fault) declared = !declared;
    r.evidence["declared_soluble"] = declared;
    if (declared != soluble) r.status = CheckStatus::fail;
  }
  return r;
}

inline CheckResult check_radical_eq_universal(GroupAnalysis& a) {
  CheckResult r;
  const RadicalResult& rad = a.radical();
  ElementSet universal = universal_vertices(a.graph());
  bool equal = universal == rad.radical;
  r.evidence["radical_size"] = i64(rad.radical.size());
  r.evidence["universal_size"] = i64(universal.size());
  r.evidence["sets_equal"] = equal;
  r.evidence["radical_normal"] = rad.verified_normal;
  r.evidence["radical_soluble"] = rad.verified_soluble;
  r.evidence["quotient_radical_trivial"] = rad.quotient_radical_trivial;
  bool ok = equal && rad.verified_normal && rad.verified_soluble && rad.quotient_radical_trivial;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_chain_containment(GroupAnalysis& a) {
  CheckResult r;
  const ConjugacyClasses& cc = a.classes();
  std::int64_t violations = 0;
  for (std::uint32_t rep : cc.reps) {
    const Perm& x = a.elements()[rep];
    ElementSet cyc = cyclic_powers(x);
    ElementSet cent = centralizer(a.elements(), x);
    ElementSet norm = cyclic_normalizer(a.elements(), x);
    ElementSet sol = a.sol_members(rep);
    bool ok = cyc.subset_of(cent) && cent.subset_of(norm) && norm.subset_of(sol) &&
              a.radical().radical.subset_of(sol);
    if (!ok) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(x);
    }
  }
  r.evidence["classes_checked"] = i64(cc.reps.size());
  r.evidence["elements_covered"] = i64(a.elements().size());
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_divisibility_o_x(GroupAnalysis& a) {
  CheckResult r;
  std::int64_t violations = 0;
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    std::uint64_t o = element_order(a.elements()[i]);
    std::uint64_t s = a.sol_size(i);
    if (s % o != 0) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(a.elements()[i]);
    }
  }
  r.evidence["elements_checked"] = i64(a.elements().size());
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_divisibility_centralizer(GroupAnalysis& a) {
  CheckResult r;
  const ConjugacyClasses& cc = a.classes();
  std::int64_t violations = 0;
  for (std::uint32_t rep : cc.reps) {
    const Perm& x = a.elements()[rep];
    std::uint64_t c = centralizer(a.elements(), x).size();
    std::uint64_t s = a.sol_size(rep);
    if (s % c != 0) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(x);
    }
  }
  r.evidence["classes_checked"] = i64(cc.reps.size());
  r.evidence["elements_covered"] = i64(a.elements().size());
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_quotient_law(GroupAnalysis& a) {
  CheckResult r;
  const RadicalResult& rad = a.radical();
  if (rad.radical.size() == 1) {
    r.status = CheckStatus::skipped;
    r.evidence["radical_trivial"] = true;
    return r;
  }
  QuotientGroup q = quotient_group(a.group(), rad.radical, a.options().cap);
  GroupContext qctx = make_context(q.group, a.options().cap);
  PairCache qcache;
  SolubilityGraph qgraph = build_graph_in_context(qctx, qcache);
  std::int64_t violations = 0;
  const std::uint64_t nsize = rad.radical.size();
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    Perm qx = q.image_of(a.elements()[i]);
    std::size_t qi = *qctx.elements.index_of(qx);
    std::uint64_t qsol = qgraph.degree_of(qi) + 1;
    if (a.sol_size(i) != nsize * qsol) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(a.elements()[i]);
    }
  }
  r.evidence["radical_size"] = i64(nsize);
  r.evidence["quotient_order"] = i64(q.group.order());
  r.evidence["elements_checked"] = i64(a.elements().size());
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_thm_A_iff(GroupAnalysis& a) {
  CheckResult r;
  const ConjugacyClasses& cc = a.classes();
  bool condition = false;
  for (std::uint32_t rep : cc.reps) {
    if (commutator_condition_on(a.sol_members(rep), a.group().degree(), 3,
                                CommutatorMode::structural)) {
      condition = true;
      r.element = to_cycle_string(a.elements()[rep]);
      break;
    }
  }
  std::optional<int> cls = nilpotency_class(a.group());
  bool class_le_2 = cls.has_value() && *cls <= 2;
  r.evidence["condition_holds"] = condition;
  r.evidence["class_le_2"] = class_le_2;
  r.evidence["nilpotency_class"] = i64(cls ? *cls : -1);
  r.status = condition == class_le_2 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_lemma_nilpk(GroupAnalysis& a) {
  CheckResult r;
  const ConjugacyClasses& cc = a.classes();
  std::int64_t instances = 0, violations = 0, budget_skips = 0, mode_disagreements = 0;
  for (int k : {2, 3, 4}) {
    for (std::uint32_t rep : cc.reps) {
      ElementSet sol = a.sol_members(rep);
      bool structural =
          commutator_condition_on(sol, a.group().degree(), k, CommutatorMode::structural);
      double work = std::pow(static_cast<double>(sol.size()), static_cast<double>(k));
      if (work > 1e8) {
        ++budget_skips;
        if (structural) ++instances;  // conclusion is the structural fact itself
        continue;
      }
      bool brute = commutator_condition_on(sol, a.group().degree(), k, CommutatorMode::brute);
      if (brute != structural) {
        ++mode_disagreements;
        ++violations;
        if (!r.element) r.element = to_cycle_string(a.elements()[rep]);
        continue;
      }
      if (!brute) continue;
      ++instances;
      GeneratedSubgroup sub = group_from_elements(a.group().degree(), sol);
      std::optional<int> cls =
          sub.is_subgroup ? nilpotency_class(sub.group) : std::nullopt;
      if (!(sub.is_subgroup && cls.has_value() && *cls <= k - 1)) {
        ++violations;
        if (!r.element) r.element = to_cycle_string(a.elements()[rep]);
      }
    }
  }
  r.evidence["classes_checked"] = i64(cc.reps.size());
  r.evidence["instances"] = instances;
  r.evidence["violations"] = violations;
  r.evidence["budget_skips"] = budget_skips;
  r.evidence["mode_disagreements"] = mode_disagreements;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

// shared scaffold for the forbidden-cardinality results, which all quantify
// over every element of an insoluble group
template <typename Pred>
inline CheckResult forbidden_size_check(GroupAnalysis& a, Pred&& forbidden) {
  CheckResult r;
  if (a.soluble()) {
    r.status = CheckStatus::skipped;
    r.evidence["group_soluble"] = true;
    return r;
  }
  std::int64_t violations = 0;
  std::uint64_t min_sol = UINT64_MAX;
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    std::uint64_t s = a.sol_size(i);
    min_sol = std::min(min_sol, s);
    if (forbidden(s)) {
      ++violations;
      if (!r.element) {
        r.element = to_cycle_string(a.elements()[i]);
        r.evidence["witness_sol_size"] = i64(s);
      }
    }
  }
  r.evidence["elements_checked"] = i64(a.elements().size());
  r.evidence["min_sol_size"] = i64(min_sol);
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_thm_B_not_p_squared(GroupAnalysis& a) {
  return forbidden_size_check(a, [](std::uint64_t s) { return is_prime_square(s); });
}

inline CheckResult check_cor_cubo(GroupAnalysis& a) {
  if (!a.soluble() && a.radical().radical.size() == 1) {
    CheckResult r;
    r.status = CheckStatus::skipped;
    r.evidence["radical_trivial"] = true;
    return r;
  }
  return forbidden_size_check(a, [](std::uint64_t s) { return is_prime_cube(s); });
}

inline CheckResult check_prop_not_8(GroupAnalysis& a) {
  return forbidden_size_check(a, [](std::uint64_t s) { return s == 8; });
}

inline CheckResult check_prop_not_6(GroupAnalysis& a) {
  return forbidden_size_check(a, [](std::uint64_t s) { return s == 6; });
}

inline CheckResult check_cor_geq_10(GroupAnalysis& a) {
  return forbidden_size_check(a, [](std::uint64_t s) { return s < 10; });
}

inline CheckResult check_lem_six_values(GroupAnalysis& a) {
  CheckResult r;
  if (a.soluble()) {
    r.status = CheckStatus::skipped;
    r.evidence["group_soluble"] = true;
    return r;
  }
  if (a.radical().radical.size() != 1) {
    r.status = CheckStatus::skipped;
    r.evidence["radical_trivial"] = false;
    return r;
  }
  const ConjugacyClasses& cc = a.classes();
  std::int64_t instances = 0, violations = 0;
  std::optional<std::uint64_t> first_size;
  for (std::uint32_t rep : cc.reps) {
    const Perm& x = a.elements()[rep];
    if (element_order(x) != 3) continue;
    if (centralizer(a.elements(), x).size() != 3) continue;  // self-centralizing
    std::uint64_t class_size = 0;
    for (std::uint32_t c : cc.class_of)
      if (c == cc.class_of[rep]) ++class_size;
    instances += static_cast<std::int64_t>(class_size);
    std::uint64_t s = a.sol_size(rep);
    if (!first_size) first_size = s;
    if (s != 24 && s != 78) {
      violations += static_cast<std::int64_t>(class_size);
      if (!r.element) r.element = to_cycle_string(x);
    }
  }
  r.evidence["instances"] = instances;
  r.evidence["violations"] = violations;
  if (first_size) r.evidence["sol_size"] = i64(*first_size);
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_prop_3p(GroupAnalysis& a) {
  CheckResult r;
  if (a.soluble()) {
    r.status = CheckStatus::skipped;
    r.evidence["group_soluble"] = true;
    return r;
  }
  const ConjugacyClasses& cc = a.classes();
  std::int64_t instances = 0, violations = 0;
  for (std::uint32_t rep : cc.reps) {
    std::uint64_t s = a.sol_size(rep);
    if (s % 3 != 0) continue;
    std::uint64_t p = s / 3;
    if (p <= 3 || !is_prime_u64(p)) continue;
    ++instances;
    const Perm& x = a.elements()[rep];
    bool ok = element_order(x) == p && p % 3 == 1 &&
              a.sol_members(rep) == cyclic_normalizer(a.elements(), x);
    if (!ok) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(x);
    }
  }
  r.evidence["instances"] = instances;
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_lemma_bob(GroupAnalysis& a) {
  CheckResult r;
  const ConjugacyClasses& cc = a.classes();
  std::int64_t instances = 0, violations = 0;
  for (std::uint32_t rep : cc.reps) {
    const Perm& x = a.elements()[rep];
    std::uint64_t p = element_order(x);
    if (!is_prime_u64(p)) continue;
    std::uint64_t s = a.sol_size(rep);
    if (s > p * p) continue;
    ++instances;
    if (a.sol_members(rep) != cyclic_normalizer(a.elements(), x)) {
      ++violations;
      if (!r.element) r.element = to_cycle_string(x);
    }
  }
  r.evidence["instances"] = instances;
  r.evidence["violations"] = violations;
  r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_diameter_bounds(GroupAnalysis& a) {
  CheckResult r;
  if (a.soluble()) {
    r.status = CheckStatus::skipped;
    r.evidence["group_soluble"] = true;
    return r;
  }
  SolubilityGraph reduced = reduced_graph(a.graph(), a.radical().radical);
  bool connected = is_connected(reduced);
  r.evidence["reduced_vertices"] = i64(reduced.vertex_count());
  r.evidence["connected"] = connected;
  if (!connected) {
    r.status = CheckStatus::fail;
    return r;
  }
  int diam = diameter(reduced);
  int bound = 5;
  if (a.entry().is_almost_simple.has_value() && !*a.entry().is_almost_simple) bound = 3;
  r.evidence["diameter"] = i64(diam);
  r.evidence["bound"] = i64(bound);
  r.status = diam <= bound ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

inline CheckResult check_remark_k4_search(GroupAnalysis& a) {
  CheckResult r;
  if (a.soluble()) {
    r.status = CheckStatus::skipped;
    r.evidence["group_soluble"] = true;
    return r;
  }
  const ConjugacyClasses& cc = a.classes();
  std::uint64_t two_part = 1;
  while (a.group().order() % (two_part * 2) == 0) two_part *= 2;
  std::int64_t hits = 0;
  for (std::uint32_t rep : cc.reps) {
    ElementSet sol = a.sol_members(rep);
    if (!commutator_condition_on(sol, a.group().degree(), 4, CommutatorMode::structural))
      continue;
    std::uint64_t class_size = 0;
    for (std::uint32_t c : cc.class_of)
      if (c == cc.class_of[rep]) ++class_size;
    hits += static_cast<std::int64_t>(class_size);
    if (!r.element) {
      r.element = to_cycle_string(a.elements()[rep]);
      r.evidence["hit_sol_size"] = i64(sol.size());
      r.evidence["hit_sol_is_two_power"] = (sol.size() & (sol.size() - 1)) == 0;
      r.evidence["hit_sol_is_sylow_two_order"] = sol.size() == two_part;
    }
  }
  r.evidence["classes_checked"] = i64(cc.reps.size());
  r.evidence["hits"] = hits;
  // exploratory: a nonzero hit count is a finding, never a failure
  r.status = CheckStatus::pass;
  return r;
}

struct RegisteredCheck {
  const char* id;
  const char* anchor;
  CheckResult (*run)(GroupAnalysis&);
};

inline const std::vector<RegisteredCheck>& check_registry() {
  static const std::vector<RegisteredCheck> registry = {
      {"thompson_complete",
       "soluble iff the solubility graph is complete (Thompson criterion)",
       &check_thompson_complete},
      {"radical_eq_universal",
       "universal vertices are exactly the soluble radical (Guralnick-Kunyavskii-Plotkin-Shalev)",
       &check_radical_eq_universal},
      {"chain_containment", "<x> <= C(x) <= N(<x>) <= N(<x>) u R(G) <= Sol(x)",
       &check_chain_containment},
      {"divisibility_o_x", "o(x) divides |Sol(x)|", &check_divisibility_o_x},
      {"divisibility_centralizer", "|C(x)| divides |Sol(x)|", &check_divisibility_centralizer},
      {"quotient_law",
       "for normal soluble N, Sol(x) is a union of N-cosets and |Sol(xN)| = |Sol(x)|/|N|",
       &check_quotient_law},
      {"thm_A_iff",
       "nilpotent of class <= 2 iff some x has every weight-3 commutator over Sol(x) trivial",
       &check_thm_A_iff},
      {"lemma_nilpk",
       "trivial weight-k commutators over Sol(x) make it a nilpotent subgroup of class <= k-1",
       &check_lemma_nilpk},
      {"thm_B_not_p_squared", "insoluble G: |Sol(x)| is never p^2", &check_thm_B_not_p_squared},
      {"cor_cubo", "insoluble G with R(G) != 1: |Sol(x)| is never p^3", &check_cor_cubo},
      {"prop_not_8", "insoluble G: |Sol(x)| != 8", &check_prop_not_8},
      {"lem_six_values",
       "trivial radical, self-centralizing x of order 3: |Sol(x)| is 24 or 78",
       &check_lem_six_values},
      {"prop_not_6", "insoluble G: |Sol(x)| != 6", &check_prop_not_6},
      {"cor_geq_10", "insoluble G: |Sol(x)| >= 10", &check_cor_geq_10},
      {"prop_3p", "insoluble G, |Sol(x)| = 3p, p prime > 3: o(x)=p, p = 1 mod 3, Sol(x)=N(<x>)",
       &check_prop_3p},
      {"lemma_bob", "o(x) = p prime and |Sol(x)| <= p^2 imply Sol(x) = N(<x>)",
       &check_lemma_bob},
      {"diameter_bounds",
       "reduced graph connected with diameter <= 5, <= 3 when not almost simple",
       &check_diameter_bounds},
      {"remark_k4_search",
       "weight-4 condition in an insoluble group would force Sol(x) to be a Sylow 2-subgroup",
       &check_remark_k4_search},
  };
  return registry;
}

}  // namespace detail

inline std::vector<std::string> registered_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : detail::check_registry()) ids.emplace_back(c.id);
  return ids;
}

/// Runs the selected checks (all when `suite` is empty) against one group.
inline VerificationReport verify_group(const CatalogEntry& entry,
                                       const std::set<std::string>& suite = {},
                                       VerifyOptions opt = {}) {
  for (const std::string& id : suite) {
    bool known = false;
    for (const auto& c : detail::check_registry())
      if (id == c.id) known = true;
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  VerificationReport report;
  report.tool_version = kToolVersion;
  report.catalog.push_back(
      {entry.name, entry.group.degree(), entry.group.order()});
  GroupAnalysis analysis(entry, opt);
  for (const auto& reg : detail::check_registry()) {
    if (!suite.empty() && !suite.count(reg.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = reg.run(analysis);
    } catch (const CapExceededError& e) {
      r.status = CheckStatus::skipped;
      r.evidence["cap_exceeded"] = true;
      r.evidence["group_order"] = detail::i64(e.order());
      r.evidence["cap"] = detail::i64(e.cap());
    }
    auto t1 = std::chrono::steady_clock::now();
    r.check_id = reg.id;
    r.group_name = entry.name;
    r.paper_anchor = reg.anchor;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

inline VerificationReport verify_groups(const std::vector<CatalogEntry>& entries,
                                        const std::set<std::string>& suite = {},
                                        VerifyOptions opt = {}) {
  VerificationReport report;
  report.tool_version = kToolVersion;
  for (const CatalogEntry& e : entries) {
    VerificationReport part = verify_group(e, suite, opt);
    report.catalog.insert(report.catalog.end(), part.catalog.begin(), part.catalog.end());
    report.checks.insert(report.checks.end(),
                         std::make_move_iterator(part.checks.begin()),
                         std::make_move_iterator(part.checks.end()));
  }
  return report;
}

// ---- JSON serialization ------------------------------------------------

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["tool_version"] = report.tool_version;
  j["catalog"] = nlohmann::json::array();
  for (const auto& e : report.catalog)
    j["catalog"].push_back({{"name", e.name}, {"degree", e.degree}, {"order", e.order}});
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json jc;
    jc["check_id"] = c.check_id;
    jc["group_name"] = c.group_name;
    jc["element"] = c.element ? nlohmann::json(*c.element) : nlohmann::json(nullptr);
    jc["status"] = to_string(c.status);
    nlohmann::json ev = nlohmann::json::object();
    for (const auto& [k, v] : c.evidence) {
      if (std::holds_alternative<bool>(v))
        ev[k] = std::get<bool>(v);
      else
        ev[k] = std::get<std::int64_t>(v);
    }
    jc["evidence"] = std::move(ev);
    jc["paper_anchor"] = c.paper_anchor;
    jc["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(jc));
  }
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& je : j.at("catalog")) {
    report.catalog.push_back({je.at("name").get<std::string>(),
                              je.at("degree").get<std::uint32_t>(),
                              je.at("order").get<std::uint64_t>()});
  }
  for (const auto& jc : j.at("checks")) {
    CheckResult c;
    c.check_id = jc.at("check_id").get<std::string>();
    c.group_name = jc.at("group_name").get<std::string>();
    if (!jc.at("element").is_null()) c.element = jc.at("element").get<std::string>();
    std::string status = jc.at("status").get<std::string>();
    c.status = status == "pass"   ? CheckStatus::pass
               : status == "fail" ? CheckStatus::fail
                                  : CheckStatus::skipped;
    for (const auto& [k, v] : jc.at("evidence").items()) {
      if (v.is_boolean())
        c.evidence[k] = v.get<bool>();
      else
        c.evidence[k] = v.get<std::int64_t>();
    }
    c.paper_anchor = jc.at("paper_anchor").get<std::string>();
    c.elapsed_ms = jc.at("elapsed_ms").get<std::int64_t>();
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace solgraph
