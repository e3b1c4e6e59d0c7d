// Test-only reference implementations, deliberately independent of the
// library's computation paths.
#pragma once

#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

#include "solgraph/group.hpp"
#include "solgraph/perm.hpp"

namespace oracles {

using solgraph::ElementSet;
using solgraph::Perm;
using solgraph::PermGroup;
using solgraph::Point;

/// Pointwise evaluation of a word of permutations, applied left to right.
inline Point apply_word(const std::vector<Perm>& word, Point p) {
  for (const Perm& w : word) p = w(p);
  return p;
}

inline Perm eval_word(const std::vector<Perm>& word, Point degree) {
  std::vector<Point> img(degree);
  for (Point i = 0; i < degree; ++i) img[i] = apply_word(word, i);
  return Perm(std::move(img));
}

/// Order by repeated multiplication, no cycle analysis.
inline std::uint64_t order_by_powers(const Perm& a) {
  Perm cur = a;
  std::uint64_t n = 1;
  while (!cur.is_identity()) {
    cur = solgraph::compose(cur, a);
    ++n;
  }
  return n;
}

inline Perm random_perm(Point degree, std::mt19937& rng) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point i = degree; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Perm(std::move(img));
}

/// Subgroup generated by commutators of ALL element pairs (not just
/// generator pairs, no normal closure step).
inline PermGroup derived_by_all_pairs(const PermGroup& H, std::uint64_t cap = 10000) {
  ElementSet elems = solgraph::enumerate_elements(H, cap);
  std::unordered_set<Perm, solgraph::PermHash> seen;
  for (const Perm& a : elems)
    for (const Perm& b : elems) {
      Perm c = solgraph::commutator(a, b);
      if (!c.is_identity()) seen.insert(std::move(c));
    }
  std::vector<Perm> gens(seen.begin(), seen.end());
  std::sort(gens.begin(), gens.end());
  return PermGroup(H.degree(), std::move(gens));
}

/// Solubility by iterating the all-pairs derived subgroup.
inline bool soluble_by_all_pairs(const PermGroup& H, std::uint64_t cap = 10000) {
  PermGroup cur = H;
  for (;;) {
    PermGroup next = derived_by_all_pairs(cur, cap);
    if (next.order() == cur.order()) return cur.order() == 1;
    cur = std::move(next);
  }
}

/// Plain queue BFS over an adjacency-list copy of the graph.
inline std::vector<int> bfs_distances(const std::vector<std::vector<std::size_t>>& adj,
                                      std::size_t src) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<std::size_t> queue{src};
  dist[src] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t v = queue[qi];
    for (std::size_t u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

}  // namespace oracles
