#include "indpow/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "indpow/counting.hpp"
#include "indpow/cubes.hpp"
#include "indpow/graph.hpp"

namespace indpow {

namespace {

constexpr int kMaxTableRows = 10000;

void require_member(const std::vector<std::string>& allowed,
                    const std::string& value, const char* what) {
  if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
    throw UsageError(std::string("unknown ") + what + " '" + value + "'");
  }
}

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw UsageError(std::string(what) + " must be nonnegative");
}

// Largest cardinality with a nonzero count anywhere in rows 0..n_max.
int max_cardinality(bool path, int h, int n_max) {
  if (path) return (n_max + h) / (h + 1);
  return std::max(n_max >= 1 ? 1 : 0, n_max / (h + 1));
}

struct ExportGraph {
  SimpleGraph graph;
  /// Rendered vertex ids in vertex order.
  std::vector<std::string> ids;
  /// Whether ids are bitstrings (quoted in DOT, strings in JSON).
  bool string_ids = false;
};

ExportGraph from_labeled(LabeledGraph g) {
  return ExportGraph{std::move(g.graph), g.label_strings(), true};
}

ExportGraph build_export_graph(const ExportRequest& r) {
  require_member(kExportFamilies, r.family, "family");
  require_member({"graph", "hasse"}, r.what, "selector");
  require_nonnegative(r.n, "n");

  if (r.family == "path" || r.family == "cycle") {
    if (r.h < 0) throw UsageError("--h is required for " + r.family);
    auto g = r.family == "path" ? power_path(r.n, r.h) : power_cycle(r.n, r.h);
    if (r.what == "hasse") return from_labeled(diagram_as_graph(hasse_diagram(g)));
    std::vector<std::string> ids;
    for (int v = 1; v <= r.n; ++v) ids.push_back(std::to_string(v));
    return ExportGraph{std::move(g), std::move(ids), false};
  }

  if (r.what != "graph") {
    throw UsageError(r.family + " is already a cube graph; use --what graph");
  }
  if (r.family == "fib-cube") return from_labeled(fibonacci_cube(r.n));
  if (r.family == "lucas-cube") return from_labeled(lucas_cube(r.n));

  auto patterns = r.patterns;
  if (patterns.empty()) {
    if (r.h < 1) throw UsageError("gen-cube needs --patterns or --h >= 1");
    patterns = spacing_patterns(r.h);
  }
  return from_labeled(generalized_cube(r.n, patterns, r.circular));
}

std::string quoted(const std::string& id, bool string_ids) {
  return string_ids ? "\"" + id + "\"" : id;
}

std::string to_dot(const ExportGraph& e) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& id : e.ids) out << "  " << quoted(id, e.string_ids) << ";\n";
  for (const auto& [u, v] : e.graph.edges()) {
    out << "  " << quoted(e.ids[u], e.string_ids) << " -- "
        << quoted(e.ids[v], e.string_ids) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const ExportGraph& e, int n) {
  using Json = nlohmann::ordered_json;
  auto id = [&e](int v) -> Json {
    if (e.string_ids) return e.ids[v];
    return v + 1;
  };
  Json doc;
  doc["n"] = n;
  doc["labels"] = Json::array();
  for (int v = 0; v < e.graph.vertex_count(); ++v) doc["labels"].push_back(id(v));
  doc["edges"] = Json::array();
  for (const auto& [u, v] : e.graph.edges()) {
    doc["edges"].push_back(Json::array({id(u), id(v)}));
  }
  return doc.dump() + "\n";
}

}  // namespace

std::string render_table(const std::string& family, int h, int n_max,
                         bool per_k) {
  require_member(kTableFamilies, family, "family");
  require_nonnegative(h, "h");
  require_nonnegative(n_max, "n-max");
  if (n_max > kMaxTableRows) {
    throw UsageError("n-max above " + std::to_string(kMaxTableRows));
  }
  const bool path = family == "path";
  const auto totals =
      path ? p_total_rec_table(n_max, h) : q_total_rec_table(n_max, h);
  const auto edges =
      path ? h_edges_conv_table(n_max, h) : m_edges_closed_table(n_max, h);
  const int k_max = per_k ? max_cardinality(path, h, n_max) : -1;

  std::ostringstream out;
  out << "n\ttotal\tedges";
  for (int k = 0; k <= k_max; ++k) out << "\tk" << k;
  out << '\n';
  for (int n = 0; n <= n_max; ++n) {
    out << n << '\t' << totals[n] << '\t' << edges[n];
    for (int k = 0; k <= k_max; ++k) {
      out << '\t' << (path ? p_nk(n, h, k) : q_nk(n, h, k));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_seq(const std::string& kind, int h, int count) {
  require_member(kSeqKinds, kind, "kind");
  require_nonnegative(h, "h");
  require_nonnegative(count, "count");

  std::vector<ExactInt> terms;
  if (kind == "hfib") {
    const auto seq = hfib(h, count);
    terms.assign(seq.terms().begin(), seq.terms().end());
  } else if (count > 0 && kind == "p") {
    terms = p_total_rec_table(count - 1, h);
  } else if (count > 0 && kind == "q") {
    terms = q_total_rec_table(count - 1, h);
  } else if (kind == "hedges") {
    terms = h_edges_conv_table(count, h);
    terms.erase(terms.begin());
  } else if (kind == "medges") {
    terms = m_edges_closed_table(count, h);
    terms.erase(terms.begin());
  }

  std::ostringstream out;
  for (const auto& t : terms) out << t << '\n';
  return out.str();
}

std::string render_export(const ExportRequest& request) {
  require_member({"dot", "json"}, request.format, "format");
  const auto e = build_export_graph(request);
  return request.format == "dot" ? to_dot(e) : to_json(e, request.n);
}

}  // namespace indpow
