#include "rgiso/random.hpp"

#include <stdexcept>

namespace rgiso {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

} // namespace

Xoshiro256ss::Xoshiro256ss(Seed seed) {
    std::uint64_t x = seed.master ^ (seed.stream * 0x9E3779B97F4A7C15ULL);
    s_[0] = splitmix64(x);
    s_[1] = splitmix64(x);
    s_[2] = splitmix64(x);
    s_[3] = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
        s_[0] = 1; // the all-zero state is the one fixed point; avoid it
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

Graph gnp_sample(int n, double p, Seed seed) {
    if (n < 0)
        throw std::invalid_argument("gnp_sample: negative vertex count");
    if (!(p >= 0.0) || !(p <= 1.0))
        throw std::invalid_argument("gnp_sample: p must lie in [0,1]");

    Xoshiro256ss rng(seed);
    GraphBuilder b(n);
    const bool always = p >= 1.0;
    const bool never = p <= 0.0;
    // floor(p * 2^64); exact for p = 1/2. long double keeps the full 64-bit
    // mantissa on x86.
    const std::uint64_t threshold =
        (always || never) ? 0
                          : static_cast<std::uint64_t>(
                                static_cast<long double>(p) * 18446744073709551616.0L);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t draw = rng.next(); // one draw per pair, row-major
            if (always || (!never && draw < threshold))
                b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

Graph rado_prefix(int n) {
    if (n < 0)
        throw std::invalid_argument("rado_prefix: negative vertex count");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i < 64 && ((static_cast<std::uint64_t>(j) >> i) & 1u))
                b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace rgiso
