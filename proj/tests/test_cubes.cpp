#include <doctest.h>

#include <algorithm>

#include "indpow/counting.hpp"
#include "indpow/cubes.hpp"
#include "oracle.hpp"

using namespace indpow;

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

std::vector<std::string> sorted_labels(const LabeledGraph& g) {
  auto out = g.label_strings();
  std::sort(out.begin(), out.end());
  return out;
}

bool labeled_equal(const LabeledGraph& a, const LabeledGraph& b) {
  if (sorted_labels(a) != sorted_labels(b)) return false;
  return same_labeled_graph(a.graph, b.graph, label_correspondence(a, b));
}

}  // namespace

TEST_CASE("hasse_diagram") {
  SUBCASE("Boolean lattice for h = 0") {
    const auto d = hasse_diagram(power_path(3, 0));
    CHECK(d.node_count() == 8);
    CHECK(d.covers.size() == 12);
    CHECK(d.levels.size() == 4);
  }
  SUBCASE("P_3^1") {
    const auto d = hasse_diagram(power_path(3, 1));
    CHECK(d.node_count() == 5);
    CHECK(d.covers.size() == 5);
    CHECK(d.covers.size() == h_edges_sum(3, 1));
  }
  SUBCASE("Q_5^1") {
    const auto d = hasse_diagram(power_cycle(5, 1));
    CHECK(d.node_count() == 11);
    CHECK(d.covers.size() == 15);
    CHECK(d.covers.size() == m_edges_sum(5, 1));
  }
  CHECK_THROWS_AS(hasse_diagram(power_path(21, 3)), CapacityError);
}

TEST_CASE("hasse_diagram structure") {
  for (int n = 0; n <= 12; ++n) {
    for (int h = 0; h <= 3; ++h) {
      for (bool cycle : {false, true}) {
        const auto g = cycle ? power_cycle(n, h) : power_path(n, h);
        const auto d = hasse_diagram(g);
        const auto ref = serial::hasse_diagram(g);
        CHECK(d.levels == ref.levels);
        CHECK(d.covers == ref.covers);

        REQUIRE(!d.levels.empty());
        CHECK(d.levels[0] == std::vector<VertexSubset>{VertexSubset(n)});
        std::size_t graded = 0;
        for (std::size_t k = 0; k < d.levels.size(); ++k) {
          graded += k * d.levels[k].size();
        }
        CHECK(d.covers.size() == graded);
        CHECK(d.covers.size() == oracle::cover_count(n, h, cycle));
        for (const auto& [lower, upper] : d.covers) {
          CHECK(lower.is_subset_of(upper));
          CHECK(upper.cardinality() == lower.cardinality() + 1);
        }
        CHECK(std::is_sorted(d.covers.begin(), d.covers.end(),
                             [](const auto& a, const auto& b) {
                               CanonicalLess less;
                               if (a.first != b.first) return less(a.first, b.first);
                               return less(a.second, b.second);
                             }));
      }
    }
  }
}

TEST_CASE("diagram_as_graph") {
  const auto g0 = diagram_as_graph(hasse_diagram(power_path(0, 1)));
  CHECK(g0.graph.vertex_count() == 1);
  CHECK(g0.graph.edge_count() == 0);

  const auto g1 = diagram_as_graph(hasse_diagram(power_path(3, 1)));
  CHECK(g1.graph.vertex_count() == 5);
  CHECK(g1.graph.edge_count() == 5);

  const auto g2 = diagram_as_graph(hasse_diagram(power_path(3, 0)));
  CHECK(g2.graph.vertex_count() == 8);
  CHECK(g2.graph.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(g2.graph.degree(v) == 3);
}

TEST_CASE("fibonacci_cube") {
  const auto c1 = fibonacci_cube(1);
  CHECK(c1.label_strings() == std::vector<std::string>{"0", "1"});
  CHECK(c1.graph.edge_count() == 1);

  CHECK(fibonacci_cube(4).labels.size() == 8);

  const auto c3 = fibonacci_cube(3);
  CHECK(sorted_labels(c3) ==
        std::vector<std::string>{"000", "001", "010", "100", "101"});
  CHECK(c3.graph.edge_count() == 5);

  for (int n = 1; n <= 14; ++n) {
    const auto cube = fibonacci_cube(n);
    CHECK(cube.labels.size() == p_total(n, 1));
    CHECK(cube.graph.edge_count() == h_edges_sum(n, 1));
    const auto hasse = diagram_as_graph(hasse_diagram(power_path(n, 1)));
    // Both sides use the canonical order, so the identity map is the
    // string encoding.
    REQUIRE(cube.labels == hasse.labels);
    CHECK(same_labeled_graph(cube.graph, hasse.graph, identity_map(cube.graph.vertex_count())));
    for (const auto& [u, v] : cube.graph.edges()) {
      CHECK(cube.labels[u].is_subset_of(cube.labels[v]));
    }
  }
  CHECK_THROWS_AS(fibonacci_cube(21), CapacityError);
}

TEST_CASE("lucas_cube") {
  CHECK(lucas_cube(4).labels.size() == 7);
  const auto c5 = lucas_cube(5);
  CHECK(c5.labels.size() == 11);
  CHECK(c5.graph.edge_count() == 15);
  CHECK(sorted_labels(lucas_cube(2)) == std::vector<std::string>{"00", "01", "10"});
  CHECK(lucas_cube(1).label_strings() == std::vector<std::string>{"0"});

  for (int n = 2; n <= 14; ++n) {
    const auto cube = lucas_cube(n);
    CHECK(cube.labels.size() == lucas(n));
    CHECK(cube.graph.edge_count() == n * fibonacci(n - 1));
    CHECK(labeled_equal(cube, diagram_as_graph(hasse_diagram(power_cycle(n, 1)))));
  }
}

TEST_CASE("generalized_cube") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(labeled_equal(generalized_cube(n, {"11"}, false), fibonacci_cube(n)));
    if (n != 1) {
      CHECK(labeled_equal(generalized_cube(n, {"11"}, true), lucas_cube(n)));
    }
  }

  const auto b4 = generalized_cube(4, {"11", "101"}, false);
  CHECK(b4.labels.size() == 6);
  CHECK(sorted_labels(b4) == std::vector<std::string>{"0000", "0001", "0010",
                                                      "0100", "1000", "1001"});
  CHECK(b4.labels.size() == p_total(4, 2));

  CHECK(spacing_patterns(3) == std::vector<std::string>{"11", "101", "1001"});
  CHECK(spacing_patterns(0).empty());

  for (int h = 1; h <= 4; ++h) {
    for (int n = 0; n <= 12; ++n) {
      CHECK(labeled_equal(generalized_cube(n, spacing_patterns(h), false),
                          diagram_as_graph(hasse_diagram(power_path(n, h)))));
      CHECK(labeled_equal(generalized_cube(n, spacing_patterns(h), true),
                          diagram_as_graph(hasse_diagram(power_cycle(n, h)))));
    }
  }

  // Not a Hasse diagram of any independence poset: strings avoiding 00.
  const auto no00 = generalized_cube(3, {"00"}, false);
  CHECK(sorted_labels(no00) ==
        std::vector<std::string>{"010", "011", "101", "110", "111"});

  CHECK_THROWS_AS(generalized_cube(3, {}, false), PreconditionError);
  CHECK_THROWS_AS(generalized_cube(3, {""}, false), PreconditionError);
  CHECK_THROWS_AS(generalized_cube(21, {"11"}, false), CapacityError);
}

TEST_CASE("same_labeled_graph") {
  const auto g2 = fibonacci_cube(2).graph;
  CHECK(same_labeled_graph(g2, g2, identity_map(3)));

  const SimpleGraph path3(3, {{0, 1}, {1, 2}});
  const SimpleGraph other(3, {{0, 2}, {2, 1}});
  CHECK_FALSE(same_labeled_graph(path3, other, identity_map(3)));
  CHECK(same_labeled_graph(path3, other, {0, 2, 1}));

  CHECK_THROWS_AS(same_labeled_graph(path3, other, {0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(same_labeled_graph(path3, other, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(same_labeled_graph(path3, SimpleGraph(4, {}), identity_map(3)),
                  DimensionMismatch);
}
