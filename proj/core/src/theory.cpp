#include "rgiso/theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rgiso {

namespace {

constexpr long double kE = std::numbers::e_v<long double>;

// floor with a near-integer guard: flags arguments within 2^-30 of an
// integer, where a different rounding of x could silently move the window.
std::pair<long long, bool> guarded_floor(long double v) {
    const long double f = std::floor(v);
    const bool near = std::fabs(v - std::nearbyint(v)) < std::ldexp(1.0L, -30);
    return {static_cast<long long>(f), near};
}

long double log2_falling_factorial(long long n, long long N) {
    // sum_{k<n} log2(N-k); switch to lgamma once the direct sum gets long
    if (n <= 4096) {
        long double s = 0;
        for (long long k = 0; k < n; ++k)
            s += std::log2(static_cast<long double>(N - k));
        return s;
    }
    return (std::lgamma(static_cast<long double>(N + 1)) -
            std::lgamma(static_cast<long double>(N - n + 1))) /
           std::numbers::ln2_v<long double>;
}

} // namespace

ThresholdPrediction lcs_threshold(long long N) {
    if (N < 2)
        throw std::invalid_argument("lcs_threshold: N must be at least 2");
    const long double lg = std::log2(static_cast<long double>(N));
    const long double x = 4 * lg - 2 * std::log2(lg) - 2 * std::log2(4.0L / kE) + 1;
    const long double eps = 1 / std::sqrt(4 * lg);
    auto [lo, flag_lo] = guarded_floor(x - eps);
    auto [hi, flag_hi] = guarded_floor(x + eps);
    return {N, x, eps, lo, hi, flag_lo || flag_hi};
}

SisPrediction sis_threshold(long long N) {
    if (N < 2)
        throw std::invalid_argument("sis_threshold: N must be at least 2");
    const long double lg = std::log2(static_cast<long double>(N));
    const long double y = 2 * lg + 1;
    const long double eps = 1 / std::sqrt(4 * lg);
    auto [contain, flag_lo] = guarded_floor(y - eps);
    auto [hi, flag_hi] = guarded_floor(y + eps);
    return {N, y, eps, contain, hi + 1, flag_lo || flag_hi};
}

long double alon_window(long long N) {
    if (N < 4)
        throw std::invalid_argument("alon_window: N must be at least 4");
    const long double lg = std::log2(static_cast<long double>(N));
    return 2 * lg - 2 * std::log2(lg) + 2 * std::log2(kE / 2) + 1;
}

long double log2_expected_pairs(long long n, long long N) {
    if (n < 0 || n > N)
        throw std::invalid_argument("log2_expected_pairs: need 0 <= n <= N");
    return 2 * log2_falling_factorial(n, N) -
           static_cast<long double>(n) * (n - 1) / 2;
}

long double log2_expected_embeddings(long long n, long long N) {
    if (n < 0 || n > N)
        throw std::invalid_argument("log2_expected_embeddings: need 0 <= n <= N");
    return log2_falling_factorial(n, N) - static_cast<long double>(n) * (n - 1) / 2;
}

double first_moment_bound_sis(long long n, long long N) {
    if (N < 2)
        throw std::invalid_argument("first_moment_bound_sis: N must be at least 2");
    // n = a*ln(N) + b with a = 2/ln 2, exactly as the bound is parameterized
    const long double a = 2.0L / std::numbers::ln2_v<long double>;
    const long double b = static_cast<long double>(n) - a * std::log(static_cast<long double>(N));
    const long double log2_bound =
        (1 - b) * std::log2(static_cast<long double>(N)) - b * (b - 1) / 2;
    if (log2_bound >= 0)
        return 1.0;
    return static_cast<double>(std::exp2(log2_bound));
}

namespace {

// Minimal union-find over pair ids; small enough to reset per permutation.
struct PairUnionFind {
    std::array<int, 28> parent; // C(8,2) = 28 pair slots suffice

    void reset(int count) { std::iota(parent.begin(), parent.begin() + count, 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

PhiResult phi_exact(int m, int n) {
    if (m < 0 || m > n || n > 8)
        throw std::invalid_argument("phi_exact: need 0 <= m <= n <= 8");

    // pair id table over {0..n-1}
    int pid[8][8];
    int pair_count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pid[i][j] = pair_count;
            pid[j][i] = pair_count;
            ++pair_count;
        }

    const int constraints = m * (m - 1) / 2;
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);

    PairUnionFind uf;
    std::uint64_t numerator = 0;
    do {
        uf.reset(pair_count);
        int merges = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (uf.unite(pid[i][j], pid[perm[i]][perm[j]]))
                    ++merges;
        // P(pi satisfies its constraint system) = 2^-(pairs - components),
        // and pairs - components equals the number of successful merges.
        numerator += std::uint64_t{1} << (constraints - merges);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    int denom = constraints;
    while (denom > 0 && (numerator & 1u) == 0) {
        numerator >>= 1;
        --denom;
    }
    return {m, n, numerator, denom};
}

PhiBoundConstants phi_bound_witness(int n_max) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("phi_bound_witness: need 1 <= n_max <= 8");

    struct Entry {
        double phi;
        double exponent_at_unit_k2; // (n-m) * ln(n-m), 0*ln 0 = 0
    };
    std::vector<Entry> domain;
    for (int n = 1; n <= n_max; ++n) {
        const int m_lo = std::max(1, (2 * n + 2) / 3); // ceil(2n/3)
        for (int m = m_lo; m <= n; ++m) {
            const int gap = n - m;
            const double e = gap <= 1 ? 0.0 : gap * std::log(static_cast<double>(gap));
            domain.push_back({phi_exact(m, n).value(), e});
        }
    }

    constexpr double kCap = 1e9;
    double best_k1 = std::numeric_limits<double>::infinity();
    double best_k2 = 0;
    for (int step = 0; step <= 80; ++step) {
        const double k2 = 0.1 * step;
        double k1 = 0;
        for (const auto& entry : domain)
            k1 = std::max(k1, entry.phi / std::exp(k2 * entry.exponent_at_unit_k2));
        if (k1 < best_k1) {
            best_k1 = k1;
            best_k2 = k2;
        }
    }
    best_k1 *= 1 + 1e-9; // keep the argmax comparison strictly satisfiable
    if (!(best_k1 <= kCap))
        throw std::runtime_error(
            "phi_bound_witness: no constants with k1 <= 1e9 satisfy the bound; "
            "this indicates a phi_exact bug");
    for (const auto& entry : domain)
        if (entry.phi > best_k1 * std::exp(best_k2 * entry.exponent_at_unit_k2))
            throw std::runtime_error("phi_bound_witness: verification failed");
    return {best_k1, best_k2};
}

} // namespace rgiso
