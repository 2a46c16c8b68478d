#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rgiso {

/// Immutable simple undirected graph with word-packed adjacency rows.
///
/// Each row is stored as (n+63)/64 little-endian 64-bit words; padding bits
/// past vertex n-1 are always zero, so rows can be compared and combined
/// word-wise. Degrees are cached at construction. Vertex ids are 0-based.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edges_; }
    int words_per_row() const { return words_; }

    /// No bounds checking; u and v must be valid vertex ids.
    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    int words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

/// Accumulates edges and freezes them into an immutable Graph. All mutation
/// happens here; a built Graph never changes.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int vertex_count() const { return n_; }
    bool has_edge(int u, int v) const;

    /// Adds the undirected edge {u,v}. Rejects self-loops and out-of-range
    /// ids with std::invalid_argument. Adding an existing edge is a no-op.
    void add_edge(int u, int v);

    Graph build() &&;

private:
    void check_pair(int u, int v) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Edge set inverted off the diagonal. An involution.
Graph complement(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in list order.
/// Throws std::invalid_argument on out-of-range or duplicated ids.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// True iff `mapping` (pairs of g1-vertex, g2-vertex) preserves both edges
/// and non-edges between every pair of mapped vertices. Empty and singleton
/// mappings are trivially induced isomorphisms. Throws std::invalid_argument
/// if the mapping is not injective on both sides or ids are out of range.
bool is_induced_isomorphism(const Graph& g1, const Graph& g2,
                            std::span<const std::pair<int, int>> mapping);

} // namespace rgiso
