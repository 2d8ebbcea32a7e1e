#include "indpow/cubes.hpp"

#include <algorithm>
#include <unordered_map>

#include "indpow/enumerate.hpp"

namespace indpow {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxCubeOrder) {
    throw CapacityError("order " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxCubeOrder) + "]");
  }
}

std::size_t index_of(const std::vector<VertexSubset>& sorted,
                     const VertexSubset& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s, CanonicalLess{});
  if (it == sorted.end() || *it != s) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

// Upward covers of one node: every s + v that is still independent.
std::vector<PosetDiagram::Cover> covers_above(const SimpleGraph& g,
                                              const VertexSubset& s) {
  std::vector<PosetDiagram::Cover> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    const VertexSubset up = s.with(v);
    if (is_independent(g, up)) out.emplace_back(s, up);
  }
  return out;
}

PosetDiagram assemble(int n, const std::vector<VertexSubset>& nodes,
                      std::vector<std::vector<PosetDiagram::Cover>> per_node) {
  PosetDiagram d;
  d.n = n;
  for (const auto& s : nodes) {
    const auto k = static_cast<std::size_t>(s.cardinality());
    if (d.levels.size() <= k) d.levels.resize(k + 1);
    d.levels[k].push_back(s);
  }
  std::size_t total = 0;
  for (const auto& part : per_node) total += part.size();
  d.covers.reserve(total);
  for (auto& part : per_node) {
    d.covers.insert(d.covers.end(), part.begin(), part.end());
  }
  // Upper bounds from one lower node share its cardinality and rise in
  // numeric value with v, so the concatenation is already sorted.
  return d;
}

void check_diagram_capacity(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxCubeOrder) {
    throw CapacityError("Hasse diagrams need at most " +
                        std::to_string(kMaxCubeOrder) + " vertices");
  }
}

// Hamming-distance-1 graph on a canonically sorted vertex list.
LabeledGraph hamming_graph(int n, std::vector<VertexSubset> vertices) {
  std::sort(vertices.begin(), vertices.end(), CanonicalLess{});
  std::vector<std::vector<SimpleGraph::Edge>> parts(vertices.size());

#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int v = 1; v <= n; ++v) {
      if (vertices[i].contains(v)) continue;
      const std::size_t j = index_of(vertices, vertices[i].with(v));
      if (j != vertices.size()) {
        parts[i].emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }

  std::vector<SimpleGraph::Edge> edges;
  for (const auto& p : parts) edges.insert(edges.end(), p.begin(), p.end());
  const int count = static_cast<int>(vertices.size());
  return LabeledGraph{SimpleGraph(count, std::move(edges)),
                      std::move(vertices)};
}

template <typename Keep>
LabeledGraph filtered_cube(int n, Keep keep) {
  check_order(n);
  std::vector<VertexSubset> vertices;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    VertexSubset s(n, m);
    if (keep(s)) vertices.push_back(s);
  }
  return hamming_graph(n, std::move(vertices));
}

}  // namespace

std::size_t PosetDiagram::node_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

std::vector<VertexSubset> PosetDiagram::nodes() const {
  std::vector<VertexSubset> out;
  out.reserve(node_count());
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<std::string> LabeledGraph::label_strings() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& s : labels) out.push_back(s.to_string());
  return out;
}

namespace serial {

PosetDiagram hasse_diagram(const SimpleGraph& g) {
  check_diagram_capacity(g);
  const auto nodes = serial::enumerate_independent(g);
  std::vector<std::vector<PosetDiagram::Cover>> per_node;
  per_node.reserve(nodes.size());
  for (const auto& s : nodes) per_node.push_back(covers_above(g, s));
  return assemble(g.vertex_count(), nodes, std::move(per_node));
}

}  // namespace serial

PosetDiagram hasse_diagram(const SimpleGraph& g) {
  check_diagram_capacity(g);
  const auto nodes = enumerate_independent(g);
  std::vector<std::vector<PosetDiagram::Cover>> per_node(nodes.size());

#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    per_node[i] = covers_above(g, nodes[i]);
  }
  return assemble(g.vertex_count(), nodes, std::move(per_node));
}

LabeledGraph diagram_as_graph(const PosetDiagram& d) {
  auto nodes = d.nodes();
  std::vector<SimpleGraph::Edge> edges;
  edges.reserve(d.covers.size());
  for (const auto& [lower, upper] : d.covers) {
    const std::size_t a = index_of(nodes, lower);
    const std::size_t b = index_of(nodes, upper);
    if (a == nodes.size() || b == nodes.size()) {
      throw PreconditionError("cover references a subset outside the diagram");
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  const int count = static_cast<int>(nodes.size());
  return LabeledGraph{SimpleGraph(count, std::move(edges)), std::move(nodes)};
}

LabeledGraph fibonacci_cube(int n) {
  return filtered_cube(n, [](const VertexSubset& s) {
    return (s.bits() & (s.bits() >> 1)) == 0;
  });
}

LabeledGraph lucas_cube(int n) {
  return filtered_cube(n, [n](const VertexSubset& s) {
    if ((s.bits() & (s.bits() >> 1)) != 0) return false;
    return n == 0 || !(s.contains(1) && s.contains(n));
  });
}

LabeledGraph generalized_cube(int n, const std::vector<std::string>& patterns,
                              bool circular) {
  if (patterns.empty()) throw PreconditionError("empty pattern list");
  for (const auto& p : patterns) {
    if (p.empty()) throw PreconditionError("empty pattern");
  }
  return filtered_cube(n, [&](const VertexSubset& s) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const std::string& p) {
                          return contains_pattern(s, p, circular);
                        });
  });
}

std::vector<std::string> spacing_patterns(int h) {
  std::vector<std::string> out;
  for (int j = 0; j < h; ++j) out.push_back("1" + std::string(j, '0') + "1");
  return out;
}

bool same_labeled_graph(const SimpleGraph& a, const SimpleGraph& b,
                        const std::vector<int>& label_map) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) {
    throw DimensionMismatch("graphs have different vertex counts");
  }
  if (static_cast<int>(label_map.size()) != n) {
    throw PreconditionError("label map does not cover every vertex");
  }
  std::vector<bool> hit(n, false);
  for (int target : label_map) {
    if (target < 0 || target >= n || hit[target]) {
      throw PreconditionError("label map is not a bijection");
    }
    hit[target] = true;
  }
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<SimpleGraph::Edge> mapped;
  mapped.reserve(a.edge_count());
  for (const auto& [u, v] : a.edges()) {
    const int x = label_map[u];
    const int y = label_map[v];
    mapped.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.edges();
}

std::vector<int> label_correspondence(const LabeledGraph& from,
                                      const LabeledGraph& to) {
  if (from.labels.size() != to.labels.size()) {
    throw PreconditionError("label sets differ in size");
  }
  std::unordered_map<std::uint64_t, int> position;
  for (std::size_t j = 0; j < to.labels.size(); ++j) {
    position.emplace(to.labels[j].bits(), static_cast<int>(j));
  }
  std::vector<int> map;
  map.reserve(from.labels.size());
  for (const auto& s : from.labels) {
    auto it = position.find(s.bits());
    if (it == position.end() || to.labels[it->second] != s) {
      throw PreconditionError("label " + s.to_string() +
                              " has no counterpart");
    }
    map.push_back(it->second);
  }
  return map;
}

}  // namespace indpow
