#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "solgraph/pair_cache.hpp"
#include "solgraph/structure.hpp"

namespace solgraph {

namespace detail {

/// Per-ambient-group state shared by solubilizer scans: the enumerated
/// elements in canonical order, an element index, and the group's own
/// solubility and fingerprint (the whole-group closure is by far the most
/// common case and needs no re-enumeration).
struct GroupContext {
  const PermGroup* group = nullptr;
  ElementSet elements;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  bool soluble = false;
  Fingerprint fp;

  std::uint32_t index_of(const Perm& p) const { return index.at(p); }
};

inline GroupContext make_context(const PermGroup& G, std::uint64_t cap = 10000) {
  GroupContext ctx;
  ctx.group = &G;
  ctx.elements = enumerate_elements(G, cap);
  ctx.index.reserve(ctx.elements.size() * 2);
  for (std::size_t i = 0; i < ctx.elements.size(); ++i)
    ctx.index.emplace(ctx.elements[i], static_cast<std::uint32_t>(i));
  ctx.soluble = is_soluble(G);
  ctx.fp = fingerprint_of(ctx.elements);
  return ctx;
}

struct PairProbe {
  bool soluble = false;
  bool whole_group = false;
  std::uint64_t order = 0;
  std::vector<Perm> members;  // sorted; empty when whole_group
};

/// Decides solubility of <x,y> inside the context's group. Proper subgroups
/// are materialized to fingerprint them for the cache; when the closure is
/// the whole group the precomputed answer is reused.
inline PairProbe probe_pair(const GroupContext& ctx, const Perm& x, const Perm& y,
                            PairCache& cache) {
  PermGroup H(ctx.group->degree(), {x, y});
  PairProbe probe;
  probe.order = H.order();
  if (H.order() == ctx.group->order()) {
    probe.whole_group = true;
    if (auto cached = cache.lookup(ctx.fp)) {
      probe.soluble = *cached;
    } else {
      probe.soluble = ctx.soluble;
      cache.insert(ctx.fp, probe.soluble);
    }
    return probe;
  }
  std::vector<Perm> members = H.chain().elements();
  std::sort(members.begin(), members.end());
  ElementSet set = ElementSet::from_unsorted(H.degree(), members);
  Fingerprint fp = fingerprint_of(set);
  if (auto cached = cache.lookup(fp)) {
    probe.soluble = *cached;
  } else {
    probe.soluble = is_soluble(H);
    cache.insert(fp, probe.soluble);
  }
  probe.members = std::move(members);
  return probe;
}

/// Scan of all y in canonical order. Every element of a soluble <x,y>
/// already found is itself adjacent to x, so such y are skipped. `known`
/// (0 unknown / 1 in / 2 out) lets callers feed previously decided pairs.
/// With `abort_on_insoluble` the scan returns an empty set as soon as some
/// y fails, which is all a universality test needs.
inline std::optional<std::vector<bool>> solubilizer_scan(
    const GroupContext& ctx, const Perm& x, PairCache& cache,
    const std::vector<std::uint8_t>* known = nullptr, bool abort_on_insoluble = false) {
  const std::size_t n = ctx.elements.size();
  std::vector<bool> in_sol(n, false);
  std::vector<bool> covered(n, false);
  for (std::size_t yi = 0; yi < n; ++yi) {
    if (covered[yi]) {
      in_sol[yi] = true;
      continue;
    }
    if (known && (*known)[yi]) {
      if ((*known)[yi] == 1) {
        in_sol[yi] = true;
      } else if (abort_on_insoluble) {
        return std::nullopt;
      }
      continue;
    }
    PairProbe probe = probe_pair(ctx, x, ctx.elements[yi], cache);
    if (!probe.soluble) {
      if (abort_on_insoluble) return std::nullopt;
      continue;
    }
    in_sol[yi] = true;
    if (probe.whole_group) {
      std::fill(covered.begin(), covered.end(), true);
    } else {
      for (const Perm& h : probe.members) covered[ctx.index_of(h)] = true;
    }
  }
  return in_sol;
}

inline ElementSet set_from_mask(const GroupContext& ctx, const std::vector<bool>& mask) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(ctx.elements[i]);
  return ElementSet::from_unsorted(ctx.elements.degree(), std::move(out));
}

}  // namespace detail

/// Whether <x,y> is soluble. x and y must belong to G.
inline bool pair_is_soluble(const PermGroup& G, const Perm& x, const Perm& y,
                            PairCache& cache, std::uint64_t cap = 10000) {
  if (!G.contains(x) || !G.contains(y)) throw std::invalid_argument("element not in group");
  detail::GroupContext ctx = detail::make_context(G, cap);
  return detail::probe_pair(ctx, x, y, cache).soluble;
}

/// The solubilizer of x: all y in G generating a soluble subgroup with x,
/// plus subgroup structure of the resulting set.
struct SolubilizerResult {
  Perm x;
  ElementSet members;
  std::uint64_t cardinality = 0;
  bool is_subgroup = false;
  std::optional<int> nilpotency_class_if_subgroup;
};

namespace detail {

inline SolubilizerResult solubilizer_in_context(const GroupContext& ctx, const Perm& x,
                                                PairCache& cache) {
  auto mask = solubilizer_scan(ctx, x, cache);
  SolubilizerResult res;
  res.x = x;
  res.members = set_from_mask(ctx, *mask);
  res.cardinality = res.members.size();
  GeneratedSubgroup sub = group_from_elements(ctx.elements.degree(), res.members);
  res.is_subgroup = sub.is_subgroup;
  if (res.is_subgroup) res.nilpotency_class_if_subgroup = nilpotency_class(sub.group);
  return res;
}

}  // namespace detail

inline SolubilizerResult solubilizer(const PermGroup& G, const Perm& x, PairCache& cache,
                                     std::uint64_t cap = 10000) {
  if (!G.contains(x)) throw std::invalid_argument("element not in group");
  detail::GroupContext ctx = detail::make_context(G, cap);
  return detail::solubilizer_in_context(ctx, x, cache);
}

/// Reference computation: the union of the element sets of all soluble
/// <x,y>. No covering shortcut and no shared hash cache; repeated subgroups
/// are memoized within the call by their exact element list.
inline ElementSet solubilizer_oracle(const PermGroup& G, const Perm& x,
                                     std::uint64_t cap = 10000) {
  if (!G.contains(x)) throw std::invalid_argument("element not in group");
  ElementSet elements = enumerate_elements(G, cap);
  std::vector<bool> in_union(elements.size(), false);
  std::map<std::vector<Perm>, bool> memo;
  for (const Perm& y : elements) {
    PermGroup H(G.degree(), {x, y});
    std::vector<Perm> members = H.chain().elements();
    std::sort(members.begin(), members.end());
    auto it = memo.find(members);
    bool soluble = it != memo.end() ? it->second : is_soluble(H);
    if (it == memo.end()) memo.emplace(members, soluble);
    if (!soluble) continue;
    for (const Perm& h : members) in_union[*elements.index_of(h)] = true;
  }
  std::vector<Perm> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (in_union[i]) out.push_back(elements[i]);
  return ElementSet::from_unsorted(G.degree(), std::move(out));
}

enum class CommutatorMode { brute, structural };

namespace detail {

inline bool all_weight_k_trivial(const ElementSet& sol, int k) {
  // depth-first over nested commutators; an identity prefix makes every
  // extension trivial, so that whole subtree is skipped
  auto rec = [&](auto&& self, const Perm& prefix, int weight) -> bool {
    if (weight == k) return prefix.is_identity();
    if (prefix.is_identity()) return true;
    for (const Perm& u : sol)
      if (!self(self, commutator(prefix, u), weight + 1)) return false;
    return true;
  };
  for (const Perm& u : sol)
    if (!rec(rec, u, 1)) return false;
  return true;
}

inline bool commutator_condition_on(const ElementSet& sol, Point degree, int k,
                                    CommutatorMode mode) {
  if (k < 2) throw std::invalid_argument("weight must be at least 2");
  if (mode == CommutatorMode::brute) {
    double work = std::pow(static_cast<double>(sol.size()), static_cast<double>(k));
    if (work > 1e8)
      throw WorkBudgetError("brute commutator scan over " + std::to_string(sol.size()) +
                            "^" + std::to_string(k) + " tuples exceeds the 1e8 budget");
    return all_weight_k_trivial(sol, k);
  }
  GeneratedSubgroup sub = group_from_elements(degree, sol);
  if (!sub.is_subgroup) return false;
  std::optional<int> cls = nilpotency_class(sub.group);
  return cls.has_value() && *cls <= k - 1;
}

}  // namespace detail

/// Whether every weight-k long commutator over Sol_G(x) is trivial. Brute
/// mode checks all tuples (budgeted); structural mode tests the equivalent
/// condition that Sol_G(x) is a subgroup of nilpotency class at most k-1.
inline bool commutator_condition(const PermGroup& G, const Perm& x, int k,
                                 CommutatorMode mode, PairCache& cache,
                                 std::uint64_t cap = 10000) {
  SolubilizerResult sol = solubilizer(G, x, cache, cap);
  return detail::commutator_condition_on(sol.members, G.degree(), k, mode);
}

/// One element satisfying the weight-k condition inside an insoluble group.
struct RemarkHit {
  std::size_t group_index = 0;
  std::string element;
  std::uint64_t sol_size = 0;
  bool sol_is_two_power = false;
  bool sol_is_sylow_two_order = false;  // equals the full 2-part of |G|
};

struct RemarkSearchReport {
  int weight = 0;
  std::uint64_t groups_scanned = 0;
  std::uint64_t insoluble_groups = 0;
  std::uint64_t elements_scanned = 0;
  std::vector<RemarkHit> hits;
};

/// Exploratory scan for insoluble groups with an element whose solubilizer
/// satisfies the weight-k condition. Reports hits; asserts nothing.
inline RemarkSearchReport search_remark_counterexample(std::span<const PermGroup> groups,
                                                       int k, std::uint64_t cap = 10000) {
  if (k < 3) throw std::invalid_argument("remark search needs weight >= 3");
  RemarkSearchReport report;
  report.weight = k;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const PermGroup& G = groups[gi];
    ++report.groups_scanned;
    PairCache cache;
    detail::GroupContext ctx = detail::make_context(G, cap);
    if (ctx.soluble) continue;
    ++report.insoluble_groups;
    std::uint64_t two_part = 1;
    while (G.order() % (two_part * 2) == 0) two_part *= 2;
    ConjugacyClasses cc = conjugacy_classes(G, ctx.elements);
    for (std::uint32_t rep : cc.reps) {
      SolubilizerResult sol =
          detail::solubilizer_in_context(ctx, ctx.elements[rep], cache);
      bool satisfies =
          detail::commutator_condition_on(sol.members, G.degree(), k, CommutatorMode::structural);
      for (std::size_t e = 0; e < ctx.elements.size(); ++e) {
        if (cc.class_of[e] != cc.class_of[rep]) continue;
        ++report.elements_scanned;
        if (!satisfies) continue;
        RemarkHit hit;
        hit.group_index = gi;
        hit.element = to_cycle_string(ctx.elements[e]);
        hit.sol_size = sol.cardinality;
        hit.sol_is_two_power = (sol.cardinality & (sol.cardinality - 1)) == 0;
        hit.sol_is_sylow_two_order = sol.cardinality == two_part;
        report.hits.push_back(std::move(hit));
      }
    }
  }
  return report;
}

}  // namespace solgraph
