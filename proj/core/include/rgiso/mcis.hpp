#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "rgiso/graph.hpp"
#include "rgiso/search.hpp"

namespace rgiso {

/// Outcome of a maximum-common-induced-subgraph search. `mapping` holds
/// `size` (g1-vertex, g2-vertex) pairs, injective on both sides, and always
/// passes is_induced_isomorphism. When `optimal` is true no common induced
/// subgraph with size+1 vertices exists; optimal is false only when the
/// search was cut short by the budget.
struct SolveResult {
    int size = 0;
    std::vector<std::pair<int, int>> mapping;
    std::uint64_t nodes_explored = 0;
    bool optimal = false;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Exact branch-and-bound MCIS solver over label classes. The common
/// subgraph is vertex-induced and need not be connected. Deterministic:
/// identical inputs give identical mappings and node counts.
SolveResult max_common_induced_subgraph(const Graph& g1, const Graph& g2,
                                        const SearchBudget& budget = {});

/// Decision form: is there a common induced subgraph on k vertices?
/// `yes` comes with an internally verified witness, `no` only after
/// exhaustive search, `unknown` on budget exhaustion. Prunes harder than the
/// optimization search (bound tested against k directly).
Ternary decision_common(const Graph& g1, const Graph& g2, int k,
                        const SearchBudget& budget = {});

/// Independent oracle for tests: enumerates, for each k descending, all
/// k-subsets of each side and all bijections between them. Requires both
/// graphs to have at most 8 vertices (throws std::invalid_argument).
SolveResult brute_force_mcis(const Graph& g1, const Graph& g2);

} // namespace rgiso
