// Command-line front end: catalog listing, solubilizer queries, graph
// export, radical computation, and the claim-verification suites.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "solgraph/solgraph.hpp"

namespace {

using namespace solgraph;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

CatalogEntry require_group(const std::string& id) {
  auto entry = resolve_group(id);
  if (!entry) throw std::invalid_argument("unknown group id: " + id);
  return std::move(*entry);
}

int run_catalog(bool as_json) {
  auto cat = default_catalog();
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : cat) {
      j.push_back({{"name", e.name},
                   {"degree", e.group.degree()},
                   {"order", e.group.order()},
                   {"extended_only", e.extended_only},
                   {"notes", e.notes}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : cat) {
    std::cout << e.name << "\tdegree " << e.group.degree() << "\torder " << e.group.order();
    if (e.extended_only) std::cout << "\t[extended]";
    if (!e.notes.empty()) std::cout << "\t" << e.notes;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_sol(const std::string& group_id, const std::string& element, bool members,
            bool as_json) {
  CatalogEntry entry = require_group(group_id);
  Perm x = parse_cycles(element, entry.group.degree());
  if (!entry.group.contains(x))
    throw std::invalid_argument("element " + element + " is not a member of " + group_id);
  PairCache cache;
  SolubilizerResult res = solubilizer(entry.group, x, cache);
  if (as_json) {
    nlohmann::json j;
    j["group"] = entry.name;
    j["element"] = to_cycle_string(x);
    j["cardinality"] = res.cardinality;
    j["is_subgroup"] = res.is_subgroup;
    if (res.nilpotency_class_if_subgroup)
      j["nilpotency_class"] = *res.nilpotency_class_if_subgroup;
    else
      j["nilpotency_class"] = nullptr;
    if (members) {
      nlohmann::json m = nlohmann::json::array();
      for (const Perm& p : res.members) m.push_back(to_cycle_string(p));
      j["members"] = std::move(m);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group: " << entry.name << " (order " << entry.group.order() << ")\n";
  std::cout << "element: " << to_cycle_string(x) << "\n";
  std::cout << "cardinality: " << res.cardinality << "\n";
  std::cout << "is_subgroup: " << (res.is_subgroup ? "yes" : "no") << "\n";
  if (res.nilpotency_class_if_subgroup)
    std::cout << "nilpotency_class: " << *res.nilpotency_class_if_subgroup << "\n";
  if (members) {
    std::cout << "members:\n";
    for (const Perm& p : res.members) std::cout << "  " << to_cycle_string(p) << "\n";
  }
  return kExitOk;
}

int run_graph(const std::string& group_id, bool stats, const std::string& dot_path,
              const std::string& labels) {
  CatalogEntry entry = require_group(group_id);
  PairCache cache;
  SolubilityGraph graph = build_graph(entry.group, cache);
  ElementSet universal = universal_vertices(graph);
  std::cout << "group: " << entry.name << "\n";
  std::cout << "vertices: " << graph.vertex_count() << "\n";
  std::cout << "edges: " << graph.edge_count() << "\n";
  std::cout << "complete: " << (graph.complete() ? "yes" : "no") << "\n";
  if (stats) {
    std::cout << "universal_vertices: " << universal.size() << "\n";
    SolubilityGraph reduced = reduced_graph(graph, universal);
    if (reduced.vertex_count() == 0) {
      std::cout << "reduced: empty (soluble group)\n";
    } else {
      std::cout << "reduced_vertices: " << reduced.vertex_count() << "\n";
      bool conn = is_connected(reduced);
      std::cout << "reduced_connected: " << (conn ? "yes" : "no") << "\n";
      if (conn) std::cout << "reduced_diameter: " << diameter(reduced) << "\n";
    }
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot open " + dot_path);
    export_dot(graph, labels == "indices" ? DotLabels::indices : DotLabels::cycles, out);
    std::cout << "dot: " << dot_path << "\n";
  }
  return kExitOk;
}

int run_radical(const std::string& group_id, bool as_json) {
  CatalogEntry entry = require_group(group_id);
  PairCache cache;
  RadicalResult res = soluble_radical(entry.group, cache);
  if (as_json) {
    nlohmann::json j;
    j["group"] = entry.name;
    j["radical_size"] = res.radical.size();
    j["verified_normal"] = res.verified_normal;
    j["verified_soluble"] = res.verified_soluble;
    j["quotient_radical_trivial"] = res.quotient_radical_trivial;
    nlohmann::json m = nlohmann::json::array();
    for (const Perm& p : res.radical) m.push_back(to_cycle_string(p));
    j["members"] = std::move(m);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group: " << entry.name << "\n";
  std::cout << "radical_size: " << res.radical.size() << "\n";
  std::cout << "verified_normal: " << (res.verified_normal ? "yes" : "no") << "\n";
  std::cout << "verified_soluble: " << (res.verified_soluble ? "yes" : "no") << "\n";
  std::cout << "quotient_radical_trivial: "
            << (res.quotient_radical_trivial ? "yes" : "no") << "\n";
  if (res.radical.size() <= 64) {
    std::cout << "members:";
    for (const Perm& p : res.radical) std::cout << " " << to_cycle_string(p);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& group_id, const std::string& suite_csv,
               const std::string& json_path, bool extended, bool inject_fault) {
  std::set<std::string> suite;
  if (!suite_csv.empty()) {
    std::stringstream ss(suite_csv);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) suite.insert(id);
    }
  }
  VerifyOptions opt;
  opt.inject_fault = inject_fault;

  std::vector<CatalogEntry> entries;
  if (group_id == "all") {
    for (CatalogEntry& e : default_catalog())
      if (!e.extended_only || extended) entries.push_back(std::move(e));
  } else {
    entries.push_back(require_group(group_id));
  }

  VerificationReport report = verify_groups(entries, suite, opt);
  for (const CheckResult& c : report.checks) {
    std::cout << (c.status == CheckStatus::pass      ? "PASS"
                  : c.status == CheckStatus::fail    ? "FAIL"
                                                     : "SKIP")
              << "  " << c.group_name << "  " << c.check_id;
    if (c.element) std::cout << "  witness " << *c.element;
    if (c.check_id == "remark_k4_search" && c.status == CheckStatus::pass) {
      auto it = c.evidence.find("hits");
      if (it != c.evidence.end() && std::get<std::int64_t>(it->second) > 0)
        std::cout << "  [finding: " << std::get<std::int64_t>(it->second) << " hits]";
    }
    std::cout << "  (" << c.elapsed_ms << " ms)\n";
  }
  std::size_t failed = 0, passed = 0, skipped = 0;
  for (const CheckResult& c : report.checks) {
    if (c.status == CheckStatus::fail) ++failed;
    else if (c.status == CheckStatus::pass) ++passed;
    else ++skipped;
  }
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot open " + json_path);
    out << to_json(report).dump(2) << "\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group solubility graph toolkit"};
  app.require_subcommand(1);

  auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in groups");
  bool catalog_json = false;
  cmd_catalog->add_flag("--json", catalog_json, "emit JSON");

  auto* cmd_sol = app.add_subcommand("sol", "compute the solubilizer of an element");
  std::string sol_group, sol_element;
  bool sol_members = false, sol_json = false;
  cmd_sol->add_option("--group", sol_group, "group id")->required();
  cmd_sol->add_option("--element", sol_element, "element in cycle notation")->required();
  cmd_sol->add_flag("--members", sol_members, "list the members");
  cmd_sol->add_flag("--json", sol_json, "emit JSON");

  auto* cmd_graph = app.add_subcommand("graph", "build the solubility graph");
  std::string graph_group, graph_dot, graph_labels = "cycles";
  bool graph_stats = false;
  cmd_graph->add_option("--group", graph_group, "group id")->required();
  cmd_graph->add_flag("--stats", graph_stats, "print connectivity and diameter");
  cmd_graph->add_option("--dot", graph_dot, "write DOT to this path");
  cmd_graph->add_option("--labels", graph_labels, "node labels: cycles|indices")
      ->check(CLI::IsMember({"cycles", "indices"}));

  auto* cmd_radical = app.add_subcommand("radical", "compute the soluble radical");
  std::string radical_group;
  bool radical_json = false;
  cmd_radical->add_option("--group", radical_group, "group id")->required();
  cmd_radical->add_flag("--json", radical_json, "emit JSON");

  auto* cmd_verify = app.add_subcommand("verify", "run claim checks");
  std::string verify_group_id, verify_suite, verify_json;
  bool verify_extended = false, verify_inject = false;
  cmd_verify->add_option("--group", verify_group_id, "group id or 'all'")->required();
  cmd_verify->add_option("--suite", verify_suite, "comma-separated check ids (default: all)");
  cmd_verify->add_option("--json", verify_json, "write the JSON report to this path");
  cmd_verify->add_flag("--extended", verify_extended, "include extended catalog entries");
  cmd_verify->add_flag("--inject-fault", verify_inject,
                       "self-test: negate declared expectations so checks must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_catalog) return run_catalog(catalog_json);
    if (*cmd_sol) return run_sol(sol_group, sol_element, sol_members, sol_json);
    if (*cmd_graph) return run_graph(graph_group, graph_stats, graph_dot, graph_labels);
    if (*cmd_radical) return run_radical(radical_group, radical_json);
    if (*cmd_verify)
      return run_verify(verify_group_id, verify_suite, verify_json, verify_extended,
                        verify_inject);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
