#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rgiso/graph.hpp"
#include "rgiso/search.hpp"

namespace rgiso {

using BigCount = boost::multiprecision::cpp_int;

/// Outcome of an induced-subgraph-isomorphism search. When found is yes the
/// witness maps every pattern vertex and preserves edges and non-edges;
/// found is no only after exhaustive search, unknown on budget exhaustion.
struct SisResult {
    Ternary found = Ternary::unknown;
    std::optional<std::vector<std::pair<int, int>>> witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Does `target` contain `pattern` as an induced subgraph? Backtracking over
/// a static pattern order with bitset candidate domains; assigning u -> v
/// intersects every open domain with N(v) or its complement according to the
/// pattern's adjacency, so both edges and non-edges prune. Trivially yes for
/// the empty pattern. Deterministic node counts.
SisResult contains_induced(const Graph& pattern, const Graph& target,
                           const SearchBudget& budget = {});

/// Exact number of ordered induced embeddings: injective maps from pattern
/// vertices to target vertices preserving adjacency and non-adjacency.
/// Counts ordered tuples (distinct vertex subsets each appear once per
/// pattern automorphism). Cost grows with the count itself; intended for
/// patterns of at most ~12 vertices and moderate targets.
BigCount count_induced_embeddings(const Graph& pattern, const Graph& target);

/// Independent oracle for tests: decision and ordered-embedding count by
/// enumerating every injection. Requires pattern.n <= 6 and target.n <= 10
/// (throws std::invalid_argument).
std::pair<bool, BigCount> brute_force_sis(const Graph& pattern, const Graph& target);

} // namespace rgiso
