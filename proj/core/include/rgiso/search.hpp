#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace rgiso {

/// Resource limits for a single solver call. Absent fields mean unlimited.
/// Exhausting a budget is never an error; it is reported through the result
/// (optimal=false or found=unknown). Budgets are checked every 1024 search
/// nodes, so overshoot is bounded and node-limited runs are deterministic.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
    /// Stop as soon as a common induced subgraph of this size is found
    /// (maximum-common-subgraph search only).
    std::optional<int> target;

    static SearchBudget unlimited() { return {}; }
    static SearchBudget node_limit(std::uint64_t n) {
        SearchBudget b;
        b.max_nodes = n;
        return b;
    }
};

enum class Ternary { no, yes, unknown };

} // namespace rgiso
