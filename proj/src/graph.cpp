#include "indpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace indpow {

namespace {

void check_capacity(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) +
                        " outside [0, 64]");
  }
}

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_vertex(int n, int vertex) {
  if (vertex < 1 || vertex > n) {
    throw PreconditionError("vertex v_" + std::to_string(vertex) +
                            " outside 1.." + std::to_string(n));
  }
}

}  // namespace

VertexSubset::VertexSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_capacity(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw PreconditionError("subset has bits beyond position n");
  }
}

VertexSubset VertexSubset::of(int n, std::initializer_list<int> vertices) {
  return of(n, std::span<const int>(vertices.begin(), vertices.size()));
}

VertexSubset VertexSubset::of(int n, std::span<const int> vertices) {
  VertexSubset s(n);
  for (int v : vertices) s = s.with(v);
  return s;
}

VertexSubset VertexSubset::from_string(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  check_capacity(n);
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (bits[i] == '1') {
      mask |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw PreconditionError("binary string may only contain 0 and 1");
    }
  }
  return VertexSubset(n, mask);
}

int VertexSubset::cardinality() const { return std::popcount(bits_); }

bool VertexSubset::contains(int vertex) const {
  check_vertex(n_, vertex);
  return (bits_ >> (vertex - 1)) & 1U;
}

VertexSubset VertexSubset::with(int vertex) const {
  check_vertex(n_, vertex);
  return VertexSubset(n_, bits_ | (std::uint64_t{1} << (vertex - 1)));
}

VertexSubset VertexSubset::without(int vertex) const {
  check_vertex(n_, vertex);
  return VertexSubset(n_, bits_ & ~(std::uint64_t{1} << (vertex - 1)));
}

bool VertexSubset::is_subset_of(const VertexSubset& other) const {
  return n_ == other.n_ && (bits_ & ~other.bits_) == 0;
}

std::vector<int> VertexSubset::vertices() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string VertexSubset::to_string() const {
  std::string out(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1U) out[i] = '1';
  }
  return out;
}

bool CanonicalLess::operator()(const VertexSubset& a,
                               const VertexSubset& b) const {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a.bits() < b.bits();
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw PreconditionError("self loop in simple graph");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());

  if (n <= kMaxVertices) {
    masks_.assign(n, 0);
    for (const auto& [u, v] : edges_) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::uint64_t SimpleGraph::neighbor_mask(int v) const {
  if (n_ > kMaxVertices) {
    throw CapacityError("neighbour masks need at most 64 vertices");
  }
  return masks_.at(v);
}

SimpleGraph power_path(int n, int h) {
  check_capacity(n);
  if (h < 0) throw PreconditionError("negative power");
  std::vector<SimpleGraph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i <= h; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph power_cycle(int n, int h) {
  check_capacity(n);
  if (h < 0) throw PreconditionError("negative power");
  std::vector<SimpleGraph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = j - i;
      if (d <= h || d >= n - h) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, std::move(edges));
}

bool is_independent(const SimpleGraph& g, const VertexSubset& s) {
  if (s.size() != g.vertex_count()) {
    throw DimensionMismatch("subset width " + std::to_string(s.size()) +
                            " != graph order " +
                            std::to_string(g.vertex_count()));
  }
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    if (g.neighbor_mask(std::countr_zero(b)) & s.bits()) return false;
  }
  return true;
}

int hamming(const VertexSubset& a, const VertexSubset& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("hamming distance needs equal lengths");
  }
  return std::popcount(a.bits() ^ b.bits());
}

bool contains_pattern(const VertexSubset& s, std::string_view pattern,
                      bool circular) {
  if (pattern.empty()) throw PreconditionError("empty pattern");
  for (char c : pattern) {
    if (c != '0' && c != '1') {
      throw PreconditionError("pattern may only contain 0 and 1");
    }
  }
  const int n = s.size();
  const int len = static_cast<int>(pattern.size());
  if (len > n) return false;
  const int starts = circular ? n : n - len + 1;
  for (int start = 0; start < starts; ++start) {
    bool match = true;
    for (int j = 0; j < len && match; ++j) {
      const int pos = (start + j) % n;
      const bool bit = (s.bits() >> pos) & 1U;
      match = bit == (pattern[j] == '1');
    }
    if (match) return true;
  }
  return false;
}

std::vector<std::uint64_t> cardinality_histogram(
    std::span<const VertexSubset> subsets) {
  std::vector<std::uint64_t> hist;
  for (const auto& s : subsets) {
    const auto k = static_cast<std::size_t>(s.cardinality());
    if (hist.size() <= k) hist.resize(k + 1, 0);
    ++hist[k];
  }
  return hist;
}

}  // namespace indpow
