#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indpow/graph.hpp"

namespace indpow {

/// Largest string length accepted by the cube and Hasse constructors.
inline constexpr int kMaxCubeOrder = 20;

/// Leveled Hasse diagram of the independent subsets of a graph, ordered by
/// inclusion.
struct PosetDiagram {
  using Cover = std::pair<VertexSubset, VertexSubset>;

  int n = 0;
  /// levels[k] holds the independent k-subsets in canonical order.
  std::vector<std::vector<VertexSubset>> levels;
  /// (lower, upper) with upper = lower + one vertex, sorted canonically by
  /// lower, then upper.
  std::vector<Cover> covers;

  std::size_t node_count() const;
  /// All nodes, level by level: the canonical enumeration order.
  std::vector<VertexSubset> nodes() const;
};

/// A graph whose vertices carry binary-string labels.
struct LabeledGraph {
  SimpleGraph graph;
  std::vector<VertexSubset> labels;

  std::vector<std::string> label_strings() const;
};

namespace serial {
PosetDiagram hasse_diagram(const SimpleGraph& g);
}

/// Cover relations are collected per node in parallel; the result is
/// identical to serial::hasse_diagram.
PosetDiagram hasse_diagram(const SimpleGraph& g);

/// Undirected cover graph; vertex i is the i-th node in canonical order.
LabeledGraph diagram_as_graph(const PosetDiagram& d);

/// Hamming-distance-1 graph on length-n strings with no two consecutive 1s.
LabeledGraph fibonacci_cube(int n);
/// Hamming-distance-1 graph on length-n strings with no two consecutive 1s
/// and not both b_1 and b_n set.
LabeledGraph lucas_cube(int n);
/// B_n with every string containing any pattern removed (containment is
/// circular when `circular` is set).
LabeledGraph generalized_cube(int n, const std::vector<std::string>& patterns,
                              bool circular);

/// {1 0^j 1 : 0 <= j < h}: the patterns whose avoidance matches
/// independence in the h-th power of a path or cycle.
std::vector<std::string> spacing_patterns(int h);

/// True iff label_map (vertex of a -> vertex of b) carries a's edges exactly
/// onto b's edges. Throws DimensionMismatch on differing orders and
/// PreconditionError if label_map is not a bijection.
bool same_labeled_graph(const SimpleGraph& a, const SimpleGraph& b,
                        const std::vector<int>& label_map);

/// The map sending each label of `from` to the position of the equal label
/// in `to`. Throws PreconditionError if the label sets differ.
std::vector<int> label_correspondence(const LabeledGraph& from,
                                      const LabeledGraph& to);

}  // namespace indpow
