#pragma once

#include <cstdint>

#include "rgiso/graph.hpp"

namespace rgiso {

/// A (master, stream) pair fully determines every random draw: the same pair
/// always reproduces a bit-identical graph, and distinct streams under one
/// master give independent-looking substreams (one per trial artifact).
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

/// xoshiro256** seeded from (master, stream) via a splitmix64 chain.
///
/// Construction is pinned so other implementations can reproduce it:
/// x0 = master XOR (stream * 0x9E3779B97F4A7C15), then four successive
/// splitmix64 outputs of the chain starting at x0 form the state.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(Seed seed);

    std::uint64_t next();

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<result_type>(0); }
    result_type operator()() { return next(); }

private:
    std::uint64_t s_[4];
};

/// G(n,p) sample: each unordered pair {i,j}, i<j, is an edge independently
/// with probability p. Exactly one 64-bit draw is consumed per pair, in
/// row-major order (i ascending, then j ascending); the edge is present iff
/// draw < floor(p * 2^64) (p=0 never, p=1 always). Deterministic in seed.
/// Throws std::invalid_argument if n < 0 or p is outside [0,1].
Graph gnp_sample(int n, double p, Seed seed);

/// Deterministic prefix of the binary-digit model of the countable random
/// graph: edge {i,j} with i<j present iff bit i of j is 1 (bit 0 rightmost).
Graph rado_prefix(int n);

} // namespace rgiso
