#pragma once

#include <cstdint>

#include "solgraph/solubilizer.hpp"

namespace solgraph {

/// Soluble radical with its certificates: the returned set is checked to be
/// a normal soluble subgroup, and the universal-vertex set of the quotient
/// by it must be trivial, which certifies maximality.
struct RadicalResult {
  ElementSet radical;
  bool verified_normal = false;
  bool verified_soluble = false;
  bool quotient_radical_trivial = false;
};

namespace detail {

/// x is universal iff <x,y> is soluble for every y. Universality is a class
/// property (the radical is normal), so one representative per conjugacy
/// class decides its whole class.
inline ElementSet universal_elements(const GroupContext& ctx, PairCache& cache) {
  if (ctx.soluble) return ctx.elements;
  ConjugacyClasses cc = conjugacy_classes(*ctx.group, ctx.elements);
  std::vector<bool> class_universal(cc.reps.size(), false);
  for (std::size_t c = 0; c < cc.reps.size(); ++c) {
    auto mask = solubilizer_scan(ctx, ctx.elements[cc.reps[c]], cache, nullptr,
                                 /*abort_on_insoluble=*/true);
    class_universal[c] = mask.has_value();
  }
  std::vector<Perm> out;
  for (std::size_t i = 0; i < ctx.elements.size(); ++i)
    if (class_universal[cc.class_of[i]]) out.push_back(ctx.elements[i]);
  return ElementSet::from_unsorted(ctx.elements.degree(), std::move(out));
}

inline RadicalResult soluble_radical_in_context(const GroupContext& ctx, PairCache& cache,
                                                std::uint64_t cap) {
  RadicalResult res;
  res.radical = universal_elements(ctx, cache);

  GeneratedSubgroup sub = group_from_elements(ctx.elements.degree(), res.radical);
  bool conj_stable = true;
  for (const Perm& r : res.radical) {
    for (const Perm& g : ctx.group->generators())
      if (!res.radical.contains(conjugate(r, g))) {
        conj_stable = false;
        break;
      }
    if (!conj_stable) break;
  }
  res.verified_normal = sub.is_subgroup && conj_stable;
  res.verified_soluble = sub.is_subgroup && is_soluble(sub.group);

  if (res.radical.size() == 1 || res.radical.size() == ctx.elements.size()) {
    // quotient by the whole group is trivial; quotient by a trivial radical
    // is an isomorphic copy, whose universal set was just computed
    res.quotient_radical_trivial = true;
  } else {
    QuotientGroup q = quotient_group(*ctx.group, res.radical, cap);
    GroupContext qctx = make_context(q.group, cap);
    PairCache qcache;
    res.quotient_radical_trivial = universal_elements(qctx, qcache).size() == 1;
  }
  return res;
}

}  // namespace detail

inline RadicalResult soluble_radical(const PermGroup& G, PairCache& cache,
                                     std::uint64_t cap = 10000) {
  detail::GroupContext ctx = detail::make_context(G, cap);
  return detail::soluble_radical_in_context(ctx, cache, cap);
}

inline RadicalResult soluble_radical(const PermGroup& G, std::uint64_t cap = 10000) {
  PairCache cache;
  return soluble_radical(G, cache, cap);
}

}  // namespace solgraph
