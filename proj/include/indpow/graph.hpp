#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indpow {

/// Largest vertex count representable by a VertexSubset (one machine word).
inline constexpr int kMaxVertices = 64;

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of {v_1..v_n}, equivalently the binary string b_1..b_n.
/// Vertex v_i lives in bit i-1. Vertex names in the public API are 1-based.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(int n, std::uint64_t bits = 0);

  /// Builds from 1-based vertex names.
  static VertexSubset of(int n, std::initializer_list<int> vertices);
  static VertexSubset of(int n, std::span<const int> vertices);
  /// Parses "b_1 b_2 ... b_n", e.g. "1001".
  static VertexSubset from_string(std::string_view bits);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int cardinality() const;
  bool empty() const { return bits_ == 0; }

  bool contains(int vertex) const;
  VertexSubset with(int vertex) const;
  VertexSubset without(int vertex) const;
  bool is_subset_of(const VertexSubset& other) const;

  /// Ascending 1-based vertex names.
  std::vector<int> vertices() const;
  /// b_1..b_n as '0'/'1' characters.
  std::string to_string() const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Canonical order used everywhere: (cardinality, numeric bitmask) ascending.
struct CanonicalLess {
  bool operator()(const VertexSubset& a, const VertexSubset& b) const;
};

/// Undirected simple graph on vertices 0..n-1 (1-based names at the API
/// surface of the power constructors).
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  SimpleGraph() = default;
  /// Edges are normalized to (min, max), deduplicated and sorted. Self loops
  /// and out-of-range endpoints throw PreconditionError.
  SimpleGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted (u, v) pairs with u < v, 0-based.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  /// Neighbour bitmask of 0-based vertex v. Only valid when n <= 64.
  std::uint64_t neighbor_mask(int v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;
};

/// h-th power of the path on n vertices: v_i ~ v_j iff |i-j| <= h.
SimpleGraph power_path(int n, int h);
/// h-th power of the cycle: v_i ~ v_j iff |i-j| <= h or |i-j| >= n-h.
SimpleGraph power_cycle(int n, int h);

bool is_independent(const SimpleGraph& g, const VertexSubset& s);

int hamming(const VertexSubset& a, const VertexSubset& b);

/// Pattern given as '0'/'1' characters. In circular mode a window may start
/// anywhere and wrap, but never reuse a position, so patterns longer than
/// the string never match.
bool contains_pattern(const VertexSubset& s, std::string_view pattern,
                      bool circular);

/// Per-cardinality counts of a subset list; index k holds the number of
/// k-subsets. Trailing zeros are trimmed.
std::vector<std::uint64_t> cardinality_histogram(
    std::span<const VertexSubset> subsets);

}  // namespace indpow
