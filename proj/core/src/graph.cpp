#include "rgiso/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rgiso {

namespace {

int words_for(int n) { return (n + 63) / 64; }

} // namespace

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
    if (n < 0)
        throw std::invalid_argument("GraphBuilder: negative vertex count");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void GraphBuilder::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("GraphBuilder: vertex id out of range: " +
                                    std::to_string(u) + "," + std::to_string(v));
    if (u == v)
        throw std::invalid_argument("GraphBuilder: self-loop rejected at vertex " +
                                    std::to_string(u));
}

bool GraphBuilder::has_edge(int u, int v) const {
    check_pair(u, v);
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

void GraphBuilder::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

Graph GraphBuilder::build() && {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = std::move(bits_);
    g.degrees_.resize(static_cast<std::size_t>(n_));
    std::int64_t total = 0;
    for (int v = 0; v < n_; ++v) {
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(g.bits_[static_cast<std::size_t>(v) * words_ + w]);
        g.degrees_[static_cast<std::size_t>(v)] = d;
        total += d;
    }
    g.edges_ = total / 2;
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                b.add_edge(i, j);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("induced_subgraph: vertex id out of range: " +
                                        std::to_string(v));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("induced_subgraph: duplicated vertex id " +
                                        std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
    }
    const int k = static_cast<int>(vertices.size());
    GraphBuilder b(k);
    for (int a = 0; a < k; ++a)
        for (int bdx = a + 1; bdx < k; ++bdx)
            if (g.adjacent(vertices[static_cast<std::size_t>(a)],
                           vertices[static_cast<std::size_t>(bdx)]))
                b.add_edge(a, bdx);
    return std::move(b).build();
}

bool is_induced_isomorphism(const Graph& g1, const Graph& g2,
                            std::span<const std::pair<int, int>> mapping) {
    std::vector<bool> used1(static_cast<std::size_t>(g1.vertex_count()), false);
    std::vector<bool> used2(static_cast<std::size_t>(g2.vertex_count()), false);
    for (auto [u, v] : mapping) {
        if (u < 0 || u >= g1.vertex_count() || v < 0 || v >= g2.vertex_count())
            throw std::invalid_argument("is_induced_isomorphism: vertex id out of range");
        if (used1[static_cast<std::size_t>(u)] || used2[static_cast<std::size_t>(v)])
            throw std::invalid_argument("is_induced_isomorphism: mapping is not injective");
        used1[static_cast<std::size_t>(u)] = true;
        used2[static_cast<std::size_t>(v)] = true;
    }
    const std::size_t k = mapping.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (g1.adjacent(mapping[a].first, mapping[b].first) !=
                g2.adjacent(mapping[a].second, mapping[b].second))
                return false;
    return true;
}

} // namespace rgiso
