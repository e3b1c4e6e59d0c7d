// Library walkthrough: solubilizer sizes by conjugacy class, the radical,
// and reduced-graph statistics for a couple of catalog groups.

#include <cstdio>

#include "solgraph/solgraph.hpp"

using namespace solgraph;

static void tour(const char* name) {
  CatalogEntry entry = *resolve_group(name);
  const PermGroup& g = entry.group;
  std::printf("%s: degree %u, order %llu, %s\n", entry.name.c_str(), g.degree(),
              static_cast<unsigned long long>(g.order()),
              is_soluble(g) ? "soluble" : "insoluble");

  PairCache cache;
  ElementSet elements = enumerate_elements(g);
  ConjugacyClasses classes = conjugacy_classes(g, elements);
  for (std::uint32_t rep : classes.reps) {
    const Perm& x = elements[rep];
    SolubilizerResult sol = solubilizer(g, x, cache);
    std::printf("  class of %-14s o(x)=%-2llu |Sol|=%-4llu %s\n",
                to_cycle_string(x).c_str(),
                static_cast<unsigned long long>(element_order(x)),
                static_cast<unsigned long long>(sol.cardinality),
                sol.is_subgroup ? "(subgroup)" : "");
  }

  RadicalResult rad = soluble_radical(g, cache);
  std::printf("  radical: %zu element(s)\n", rad.radical.size());

  SolubilityGraph graph = build_graph(g, cache);
  SolubilityGraph reduced = reduced_graph(graph, rad.radical);
  if (reduced.vertex_count() == 0) {
    std::printf("  graph complete; nothing left after removing the radical\n");
  } else {
    std::printf("  reduced graph: %zu vertices, connected=%s, diameter=%d\n",
                reduced.vertex_count(), is_connected(reduced) ? "yes" : "no",
                diameter(reduced));
  }
  std::printf("\n");
}

int main() {
  tour("S4");
  tour("A5");
  tour("PSL2-7");
  return 0;
}
