#pragma once

#include <cstdint>

namespace rgiso {

/// Two-point concentration window for the largest common induced subgraph of
/// two independent G(N,1/2) graphs: L_N lands in {lo, hi} with probability
/// tending to one, where lo = floor(x - eps), hi = floor(x + eps),
/// x = 4*log2(N) - 2*log2(log2(N)) - 2*log2(4/e) + 1 and
/// eps = (4*log2(N))^(-1/2). hi - lo is 0 or 1 because eps <= 1/2 for N >= 2.
/// boundary_flag is set when a floor argument lies within 2^-30 of an
/// integer, i.e. the window edges are numerically ambiguous.
struct ThresholdPrediction {
    long long N = 0;
    long double x = 0;
    long double eps = 0;
    long long lo = 0;
    long long hi = 0;
    bool boundary_flag = false;
};

/// One-window phase transition for induced containment of G(n,1/2) in
/// G(N,1/2): containment holds with high probability for n <= n_contain =
/// floor(y - eps) and fails with high probability for n >= n_exclude =
/// floor(y + eps) + 1, where y = 2*log2(N) + 1.
struct SisPrediction {
    long long N = 0;
    long double y = 0;
    long double eps = 0;
    long long n_contain = 0;
    long long n_exclude = 0;
    bool boundary_flag = false;
};

/// Exact dyadic rational phi(m,n) = sum over permutations pi of S_n of the
/// probability that a G(n,1/2) graph agrees with its pi-image on every pair
/// within {0..m-1}. Stored as numerator / 2^denom_pow2, fully reduced.
struct PhiResult {
    int m = 0;
    int n = 0;
    std::uint64_t numerator = 0;
    int denom_pow2 = 0;

    double value() const {
        return static_cast<double>(numerator) / static_cast<double>(1ull << denom_pow2);
    }
};

/// Empirically searched constants witnessing phi(m,n) <= k1 * exp(k2 *
/// (n-m) * log(n-m)) over the checked domain.
struct PhiBoundConstants {
    double k1 = 0;
    double k2 = 0;
};

/// Concentration window for L_N. Throws std::invalid_argument for N < 2.
ThresholdPrediction lcs_threshold(long long N);

/// Phase-transition window for P(n,N). Throws std::invalid_argument for N < 2.
SisPrediction sis_threshold(long long N);

/// Center of the contains-all-graphs window, 2*log2(N) - 2*log2(log2(N)) +
/// 2*log2(e/2) + 1; sits left of sis_threshold(N).y by Theta(log log N).
/// Throws std::invalid_argument for N < 4.
long double alon_window(long long N);

/// log2 of the expected number of ordered pairs (A,B) of n-tuples with the
/// induced subgraphs on A and B isomorphic via the tuple order:
/// 2 * sum_{k<n} log2(N-k) - n(n-1)/2. Computed in the log domain; the huge
/// number itself is never materialized. Throws if n < 0 or n > N.
long double log2_expected_pairs(long long n, long long N);

/// log2 of the expected number of ordered induced embeddings of a G(n,1/2)
/// pattern in a G(N,1/2) target: sum_{k<n} log2(N-k) - n(n-1)/2.
long double log2_expected_embeddings(long long n, long long N);

/// First-moment certificate min(1, N^(1-b) * 2^(-b(b-1)/2)) with
/// b = n - (2/ln 2) * ln N, an upper bound on the probability that a
/// G(N,1/2) target contains a G(n,1/2) pattern. Throws for N < 2.
double first_moment_bound_sis(long long n, long long N);

/// Exact phi(m,n) by enumerating all n! permutations; the probability per
/// permutation is 2^-(pairs - components) of its pair-constraint system,
/// computed by union-find. Requires 0 <= m <= n <= 8.
PhiResult phi_exact(int m, int n);

/// Grid-searches (k1, k2) such that phi(m,n) <= k1 * exp(k2*(n-m)*ln(n-m))
/// for all 1 <= n <= n_max and 2n/3 <= m <= n (0*ln 0 = 0), verified against
/// phi_exact. Throws std::runtime_error if no constants with k1 <= 1e9 work,
/// which would indicate an implementation bug. Requires n_max <= 8.
PhiBoundConstants phi_bound_witness(int n_max);

} // namespace rgiso
