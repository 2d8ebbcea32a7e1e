#pragma once

#include <cstdint>
#include <vector>

#include "indpow/graph.hpp"

namespace indpow {

namespace serial {

/// Reference enumeration: depth-first include/exclude backtracking over
/// v_1..v_n, pruning on adjacency. Output is canonically sorted.
std::vector<VertexSubset> enumerate_independent(const SimpleGraph& g);

/// Counts independent subsets per cardinality without materializing them.
std::vector<std::uint64_t> independent_histogram(const SimpleGraph& g);

}  // namespace serial

/// Parallel enumeration. The search tree is cut at a fixed depth and each
/// prefix is explored by its own task; results are merged and canonically
/// sorted, so the output is identical to serial::enumerate_independent.
std::vector<VertexSubset> enumerate_independent(const SimpleGraph& g);

std::vector<std::uint64_t> independent_histogram(const SimpleGraph& g);

}  // namespace indpow
