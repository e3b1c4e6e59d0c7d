#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "solgraph/group.hpp"

namespace solgraph {

enum class SeriesKind { derived, lower_central };

/// Descending subgroup series. `stabilized` is true when the last term
/// reproduces itself under one more step.
struct SeriesRecord {
  SeriesKind kind;
  std::vector<PermGroup> terms;
  bool stabilized = true;
};

/// Subgroup of G generated by `seed`; every seed element must lie in G.
inline PermGroup subgroup_closure(const PermGroup& G, std::span<const Perm> seed) {
  std::vector<Perm> gens;
  for (const Perm& p : seed) {
    if (!G.contains(p)) throw std::invalid_argument("seed element not in group");
    gens.push_back(p);
  }
  return PermGroup(G.degree(), std::move(gens));
}

namespace detail {

/// Smallest subgroup of <ambient> containing `seeds` and closed under
/// conjugation by the ambient generators.
inline PermGroup normal_closure(const PermGroup& ambient, std::vector<Perm> seeds) {
  std::vector<Perm> gens;
  PermGroup K = trivial_group(ambient.degree());
  std::deque<Perm> todo;
  for (Perm& s : seeds) {
    if (!K.contains(s)) {
      gens.push_back(s);
      K = PermGroup(ambient.degree(), gens);
      todo.push_back(std::move(s));
    }
  }
  while (!todo.empty()) {
    Perm s = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : ambient.generators()) {
      Perm c = conjugate(s, g);
      if (!K.contains(c)) {
        gens.push_back(c);
        K = PermGroup(ambient.degree(), gens);
        todo.push_back(std::move(c));
      }
    }
  }
  return K;
}

}  // namespace detail

/// [H,H]: the normal closure in H of the commutators of generator pairs.
inline PermGroup derived_subgroup(const PermGroup& H) {
  std::vector<Perm> seeds;
  const auto& gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return detail::normal_closure(H, std::move(seeds));
}

inline SeriesRecord derived_series(const PermGroup& H, int max_len = 64) {
  SeriesRecord rec{SeriesKind::derived, {H}, false};
  for (;;) {
    PermGroup next = derived_subgroup(rec.terms.back());
    if (next.order() == rec.terms.back().order()) {
      rec.stabilized = true;
      return rec;
    }
    if (static_cast<int>(rec.terms.size()) >= max_len)
      throw SeriesLimitError("derived series still descending after " +
                             std::to_string(max_len) + " terms (last order " +
                             std::to_string(rec.terms.back().order()) + ")");
    rec.terms.push_back(std::move(next));
  }
}

inline bool is_soluble(const PermGroup& H) {
  return derived_series(H).terms.back().order() == 1;
}

/// gamma_1 = H, gamma_{i+1} = normal closure of [gens(gamma_i), gens(H)].
inline SeriesRecord lower_central_series(const PermGroup& H, int k_max = 64) {
  SeriesRecord rec{SeriesKind::lower_central, {H}, false};
  for (;;) {
    const PermGroup& cur = rec.terms.back();
    std::vector<Perm> seeds;
    for (const Perm& a : cur.generators())
      for (const Perm& b : H.generators()) {
        Perm c = commutator(a, b);
        if (!c.is_identity()) seeds.push_back(std::move(c));
      }
    PermGroup next = detail::normal_closure(H, std::move(seeds));
    if (next.order() == cur.order()) {
      rec.stabilized = true;
      return rec;
    }
    if (static_cast<int>(rec.terms.size()) >= k_max) return rec;
    rec.terms.push_back(std::move(next));
  }
}

/// Least c with gamma_{c+1}(H) trivial, or nullopt when the lower central
/// series bottoms out above the identity.
inline std::optional<int> nilpotency_class(const PermGroup& H) {
  SeriesRecord rec = lower_central_series(H);
  if (!rec.stabilized)
    throw SeriesLimitError("lower central series did not stabilize");
  if (rec.terms.back().order() != 1) return std::nullopt;
  return static_cast<int>(rec.terms.size()) - 1;
}

inline ElementSet centralizer(const ElementSet& elements, const Perm& x) {
  std::vector<Perm> out;
  for (const Perm& g : elements)
    if (compose(g, x) == compose(x, g)) out.push_back(g);
  return ElementSet::from_unsorted(elements.degree(), std::move(out));
}

inline ElementSet centralizer(const PermGroup& G, const Perm& x, std::uint64_t cap = 10000) {
  if (!G.contains(x)) throw std::invalid_argument("element not in group");
  return centralizer(enumerate_elements(G, cap), x);
}

inline ElementSet cyclic_powers(const Perm& x) {
  std::vector<Perm> pow{Perm(x.degree())};
  Perm cur = x;
  while (!cur.is_identity()) {
    pow.push_back(cur);
    cur = compose(cur, x);
  }
  return ElementSet::from_unsorted(x.degree(), std::move(pow));
}

/// N_G(<x>) = {g in G : x^g is a power of x}. Normalizers written N_G(x) in
/// statements about a single element are read as N_G(<x>) throughout.
inline ElementSet cyclic_normalizer(const ElementSet& elements, const Perm& x) {
  ElementSet powers = cyclic_powers(x);
  std::vector<Perm> out;
  for (const Perm& g : elements)
    if (powers.contains(conjugate(x, g))) out.push_back(g);
  return ElementSet::from_unsorted(elements.degree(), std::move(out));
}

inline ElementSet cyclic_normalizer(const PermGroup& G, const Perm& x, std::uint64_t cap = 10000) {
  if (!G.contains(x)) throw std::invalid_argument("element not in group");
  return cyclic_normalizer(enumerate_elements(G, cap), x);
}

/// G/N as a permutation group via the right-coset action of G's generators.
/// Coset points are numbered by the canonical order of the lexicographically
/// least coset representatives; the action kernel is exactly N.
struct QuotientGroup {
  PermGroup group;
  ElementSet parent_elements;           // canonical order of G
  std::vector<Point> coset_index;       // parallel to parent_elements

  Point coset_of(const Perm& g) const {
    auto i = parent_elements.index_of(g);
    if (!i) throw std::invalid_argument("element not in group");
    return coset_index[*i];
  }

  /// Image of g under the quotient map, as a permutation of the cosets.
  Perm image_of(const Perm& g) const {
    const Point m = group.degree();
    std::vector<Point> img(m);
    for (std::size_t i = 0; i < parent_elements.size(); ++i) {
      // one representative per coset suffices; overwrite harmlessly
      img[coset_index[i]] = coset_of(compose(parent_elements[i], g));
    }
    return Perm(std::move(img));
  }
};

inline QuotientGroup quotient_group(const PermGroup& G, const ElementSet& N,
                                    std::uint64_t cap = 10000) {
  if (N.empty() || N.degree() != G.degree())
    throw std::invalid_argument("bad normal subgroup candidate");
  GeneratedSubgroup sub = group_from_elements(G.degree(), N);
  if (!sub.is_subgroup) throw std::invalid_argument("set is not a subgroup");
  for (const Perm& n : N)
    for (const Perm& g : G.generators())
      if (!N.contains(conjugate(n, g)))
        throw std::invalid_argument("subgroup is not normal");

  ElementSet elements = enumerate_elements(G, cap);
  const std::size_t n = elements.size();

  // lexicographically least representative of the right coset N*g
  auto rep_of = [&](const Perm& g) {
    Perm best = compose(N[0], g);
    for (std::size_t k = 1; k < N.size(); ++k) {
      Perm cand = compose(N[k], g);
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  std::vector<Perm> reps(n, Perm());
  std::vector<Perm> sorted_reps;
  for (std::size_t i = 0; i < n; ++i) reps[i] = rep_of(elements[i]);
  sorted_reps = reps;
  std::sort(sorted_reps.begin(), sorted_reps.end());
  sorted_reps.erase(std::unique(sorted_reps.begin(), sorted_reps.end()), sorted_reps.end());

  auto rep_index = [&](const Perm& r) {
    auto it = std::lower_bound(sorted_reps.begin(), sorted_reps.end(), r);
    return static_cast<Point>(it - sorted_reps.begin());
  };

  QuotientGroup q{trivial_group(1), std::move(elements), {}};
  q.coset_index.resize(n);
  for (std::size_t i = 0; i < n; ++i) q.coset_index[i] = rep_index(reps[i]);

  const Point m = static_cast<Point>(sorted_reps.size());
  std::vector<Perm> qgens;
  for (const Perm& s : G.generators()) {
    std::vector<Point> img(m);
    for (Point c = 0; c < m; ++c) img[c] = rep_index(rep_of(compose(sorted_reps[c], s)));
    qgens.emplace_back(std::move(img));
  }
  q.group = PermGroup(m, std::move(qgens));
  if (q.group.order() * sub.group.order() != G.order())
    throw std::logic_error("coset action order mismatch");
  return q;
}

}  // namespace solgraph
