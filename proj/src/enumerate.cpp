#include "indpow/enumerate.hpp"

#include <algorithm>
#include <bit>

namespace indpow {

namespace {

struct SearchState {
  std::uint64_t chosen = 0;
  std::uint64_t blocked = 0;
};

// Visits every independent set extending `state` using vertices first..n-1.
template <typename Visit>
void extend(const SimpleGraph& g, int first, SearchState state, Visit& visit) {
  const int n = g.vertex_count();
  if (first == n) {
    visit(state.chosen);
    return;
  }
  extend(g, first + 1, state, visit);
  const std::uint64_t bit = std::uint64_t{1} << first;
  if ((state.blocked & bit) == 0) {
    extend(g, first + 1,
           SearchState{state.chosen | bit,
                       state.blocked | g.neighbor_mask(first)},
           visit);
  }
}

// All independent partial assignments of vertices 0..depth-1.
std::vector<SearchState> prefixes(const SimpleGraph& g, int depth) {
  std::vector<SearchState> frontier{SearchState{}};
  for (int v = 0; v < depth; ++v) {
    std::vector<SearchState> next;
    next.reserve(frontier.size() * 2);
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (const auto& s : frontier) {
      next.push_back(s);
      if ((s.blocked & bit) == 0) {
        next.push_back({s.chosen | bit, s.blocked | g.neighbor_mask(v)});
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

void check_capacity(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxVertices) {
    throw CapacityError("enumeration needs at most 64 vertices");
  }
}

std::vector<VertexSubset> to_sorted_subsets(int n,
                                            std::vector<std::uint64_t> masks) {
  std::vector<VertexSubset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(n, m);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

void add_into(std::vector<std::uint64_t>& acc,
              const std::vector<std::uint64_t>& part) {
  if (acc.size() < part.size()) acc.resize(part.size(), 0);
  for (std::size_t k = 0; k < part.size(); ++k) acc[k] += part[k];
}

constexpr int kSplitDepth = 12;

}  // namespace

namespace serial {

std::vector<VertexSubset> enumerate_independent(const SimpleGraph& g) {
  check_capacity(g);
  std::vector<std::uint64_t> masks;
  auto visit = [&](std::uint64_t m) { masks.push_back(m); };
  extend(g, 0, SearchState{}, visit);
  return to_sorted_subsets(g.vertex_count(), std::move(masks));
}

std::vector<std::uint64_t> independent_histogram(const SimpleGraph& g) {
  check_capacity(g);
  std::vector<std::uint64_t> hist(g.vertex_count() + 1, 0);
  auto visit = [&](std::uint64_t m) { ++hist[std::popcount(m)]; };
  extend(g, 0, SearchState{}, visit);
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

}  // namespace serial

std::vector<VertexSubset> enumerate_independent(const SimpleGraph& g) {
  check_capacity(g);
  const int depth = std::min(g.vertex_count(), kSplitDepth);
  const auto roots = prefixes(g, depth);
  std::vector<std::vector<std::uint64_t>> parts(roots.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto& local = parts[r];
    auto visit = [&](std::uint64_t m) { local.push_back(m); };
    extend(g, depth, roots[r], visit);
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<std::uint64_t> masks;
  masks.reserve(total);
  for (const auto& p : parts) masks.insert(masks.end(), p.begin(), p.end());
  return to_sorted_subsets(g.vertex_count(), std::move(masks));
}

std::vector<std::uint64_t> independent_histogram(const SimpleGraph& g) {
  check_capacity(g);
  const int n = g.vertex_count();
  const int depth = std::min(n, kSplitDepth);
  const auto roots = prefixes(g, depth);
  std::vector<std::vector<std::uint64_t>> parts(roots.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto& local = parts[r];
    local.assign(n + 1, 0);
    auto visit = [&](std::uint64_t m) { ++local[std::popcount(m)]; };
    extend(g, depth, roots[r], visit);
  }

  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& p : parts) add_into(hist, p);
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

}  // namespace indpow
