#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "solgraph/radical.hpp"
#include "solgraph/solubilizer.hpp"

namespace solgraph {

/// Solubility graph on the elements of a group: vertices in canonical
/// element order, symmetric adjacency over pair solubility, no self-loops.
/// Dense bitset rows.
class SolubilityGraph {
 public:
  SolubilityGraph() = default;

  explicit SolubilityGraph(ElementSet vertices)
      : vertices_(std::move(vertices)),
        n_(vertices_.size()),
        words_((n_ + 63) / 64),
        bits_(n_ * words_, 0) {}

  std::size_t vertex_count() const { return n_; }
  const ElementSet& vertices() const { return vertices_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  void set_edge(std::size_t i, std::size_t j) {
    if (i == j) return;
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::size_t degree_of(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w)
      d += static_cast<std::size_t>(__builtin_popcountll(bits_[i * words_ + w]));
    return d;
  }

  std::uint64_t edge_count() const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += degree_of(i);
    return total / 2;
  }

  bool complete() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (degree_of(i) != n_ - 1) return false;
    return true;
  }

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t row_words() const { return words_; }

 private:
  ElementSet vertices_;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

// Groups up to this order get every adjacency row computed by a direct
// scan; larger ones are filled one conjugacy class at a time, translating
// the representative's row along Sol(x^g) = Sol(x)^g.
inline constexpr std::uint64_t kDirectRowLimit = 1092;

inline SolubilityGraph build_graph_direct(const GroupContext& ctx, PairCache& cache) {
  const std::size_t n = ctx.elements.size();
  SolubilityGraph graph(ctx.elements);
  std::vector<std::uint8_t> known(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      known[j] = (j < i) ? (graph.adjacent(i, j) ? 1 : 2) : 0;
    known[i] = 2;  // no self-loop
    auto mask = solubilizer_scan(ctx, ctx.elements[i], cache, &known);
    for (std::size_t j = i + 1; j < n; ++j)
      if ((*mask)[j]) graph.set_edge(i, j);
  }
  return graph;
}

inline SolubilityGraph build_graph_by_classes(const GroupContext& ctx, PairCache& cache) {
  const std::size_t n = ctx.elements.size();
  SolubilityGraph graph(ctx.elements);
  ConjugacyClasses cc = conjugacy_classes(*ctx.group, ctx.elements);
  for (std::uint32_t rep : cc.reps) {
    auto mask = solubilizer_scan(ctx, ctx.elements[rep], cache);
    std::vector<std::uint32_t> row;
    for (std::size_t j = 0; j < n; ++j)
      if ((*mask)[j] && j != rep) row.push_back(static_cast<std::uint32_t>(j));
    for (std::size_t e = 0; e < n; ++e) {
      if (cc.class_of[e] != cc.class_of[rep]) continue;
      const Perm& t = cc.transporter[e];
      if (e == rep) {
        for (std::uint32_t j : row) graph.set_edge(e, j);
      } else {
        for (std::uint32_t j : row)
          graph.set_edge(e, ctx.index_of(conjugate(ctx.elements[j], t)));
      }
    }
  }
  return graph;
}

inline SolubilityGraph build_graph_in_context(const GroupContext& ctx, PairCache& cache) {
  if (ctx.elements.size() <= kDirectRowLimit) return build_graph_direct(ctx, cache);
  return build_graph_by_classes(ctx, cache);
}

}  // namespace detail

/// Full solubility graph of G. Row x equals Sol_G(x) minus x itself.
inline SolubilityGraph build_graph(const PermGroup& G, PairCache& cache,
                                   std::uint64_t cap = 10000) {
  detail::GroupContext ctx = detail::make_context(G, cap);
  return detail::build_graph_in_context(ctx, cache);
}

/// Vertices adjacent to every other vertex; equals the soluble radical.
inline ElementSet universal_vertices(const SolubilityGraph& graph) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i)
    if (graph.degree_of(i) == graph.vertex_count() - 1) out.push_back(graph.vertices()[i]);
  return ElementSet::from_unsorted(graph.vertices().degree(), std::move(out));
}

/// Induced subgraph on the complement of the radical. For a soluble group
/// the complement is empty; the returned graph then has no vertices and
/// callers must treat it as the flagged degenerate case.
inline SolubilityGraph reduced_graph(const SolubilityGraph& graph, const ElementSet& radical) {
  std::vector<std::size_t> keep;
  std::vector<Perm> verts;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    if (!radical.contains(graph.vertices()[i])) {
      keep.push_back(i);
      verts.push_back(graph.vertices()[i]);
    }
  }
  SolubilityGraph out(ElementSet::from_unsorted(graph.vertices().degree(), std::move(verts)));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (graph.adjacent(keep[a], keep[b])) out.set_edge(a, b);
  return out;
}

namespace detail {

inline std::vector<int> bfs_levels(const SolubilityGraph& g, std::size_t src) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.row_words();
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  std::vector<int> level(n, -1);
  frontier[src / 64] |= std::uint64_t{1} << (src % 64);
  visited = frontier;
  level[src] = 0;
  int depth = 0;
  bool more = true;
  while (more) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const std::uint64_t* row = g.row(v);
        for (std::size_t u = 0; u < words; ++u) next[u] |= row[u];
      }
    }
    more = false;
    ++depth;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      if (next[w]) more = true;
      std::uint64_t bits = next[w];
      while (bits) {
        std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        level[v] = depth;
      }
    }
    frontier = next;
  }
  return level;
}

}  // namespace detail

inline bool is_connected(const SolubilityGraph& graph) {
  if (graph.vertex_count() == 0) throw std::domain_error("empty graph");
  auto level = detail::bfs_levels(graph, 0);
  for (int l : level)
    if (l < 0) return false;
  return true;
}

/// Max BFS eccentricity. Throws on an empty or disconnected graph.
inline int diameter(const SolubilityGraph& graph) {
  if (graph.vertex_count() == 0) throw std::domain_error("empty graph");
  int diam = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    auto level = detail::bfs_levels(graph, v);
    for (int l : level) {
      if (l < 0) throw std::domain_error("graph is disconnected");
      diam = std::max(diam, l);
    }
  }
  return diam;
}

enum class DotLabels { cycles, indices };

/// Deterministic undirected DOT output: nodes in canonical vertex order,
/// one edge line per unordered adjacent pair.
inline void export_dot(const SolubilityGraph& graph, DotLabels labels, std::ostream& os) {
  os << "graph solubility {\n";
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    os << "  v" << i << " [label=\"";
    if (labels == DotLabels::cycles)
      os << to_cycle_string(graph.vertices()[i]);
    else
      os << i;
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < graph.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < graph.vertex_count(); ++j)
      if (graph.adjacent(i, j)) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  if (os.fail()) throw std::runtime_error("failed to write DOT output");
}

}  // namespace solgraph
