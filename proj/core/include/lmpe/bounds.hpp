#pragma once

// Closed-form analyses: error-ball counts, sphere-packing and
// Gilbert-Varshamov bounds on the code size, geodesic-ball volume terms,
// quotient-vector counting, code rates and redundancy estimates.
//
// Code sizes overflow any machine integer (C(k+3,3)^n), so every bound is
// carried as log2 in extended precision.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lmpe/prob.hpp"

namespace lmpe {

/// Error count at the corner symbol (0,0,0,k): sum_{i<=l} C(i+2,2).
std::uint64_t e_min(int l);
/// Error count at an interior symbol: (10/3)l^3 + 5l^2 + (11/3)l + 1.
std::uint64_t e_count(int l);

/// log2 C(n, r) for real-sized arguments (exact for small values via lgamma).
long double log2_binomial(long double n, long double r);

enum class SpbVariant { relaxed, exact };

struct BoundReport {
    /// log2 of the bound on the number of codewords.
    long double log2_code_size = 0;
    /// log2 of the denominator (ball size or its estimate).
    long double log2_ball = 0;
    /// log2_code_size / (n log2 C(k+3,3)), clamped to [0, 1].
    double rate = 0;
    /// The raw ratio fell outside [0, 1] and was clamped.
    bool clamped = false;
    /// For GV: n > (2t)^2 3.02^(2t) / l^3.  Always true for sphere packing.
    bool condition_met = true;
};

/// Sphere-packing upper bound.  Requires k >= 4l.
BoundReport sphere_packing(long long n, int k, int t, int l, SpbVariant variant = SpbVariant::relaxed);

/// Gilbert-Varshamov lower bound (closed form).  The validity condition is
/// reported in `condition_met`, never enforced.
BoundReport gv_bound(long long n, int k, int t, int l);

/// Volume terms of the geodesic ball of radius d, for i = 1..d (index i-1).
struct BallVolumeTerms {
    std::vector<long double> log2_v;
    std::vector<long double> log2_lower;
    std::vector<long double> log2_upper;
    /// Number of compositions (l_1..l_i) summed over in V(i): C(d-1, i-1).
    std::vector<BigCount> compositions;
};
BallVolumeTerms ball_volume_terms(long long n, int l, int d);

/// log2 of L(i+1)/U(i), the lower bound on V(i+1)/V(i), for 1 <= i < d.
long double log2_volume_ratio_bound(long long n, int l, int d, int i);
/// Length above which L(i+1)/U(i) exceeds 1.
long double volume_ratio_threshold(int l, int d, int i);

enum class QuotientCase { one, two };

struct QuotientCount {
    int s = 0;
    QuotientCase which = QuotientCase::one;
    int s_min = 0;
    /// Total number of quotient vectors over all remainder sums.
    BigCount total;
    /// C(j+3,3) for s_min <= j <= s.
    std::vector<BigCount> per_sum;
};
QuotientCount quotient_counts(int k, int l);

/// C(n+3, 3) as an exact integer.
BigCount compositions4(long long n);

enum class RateVariant { exact, approx };

/// Rate of the remainder-class construction with m information symbols out of n.
double rate_nonsystematic(long long n, long long m, int k, int l, RateVariant variant = RateVariant::exact);
/// m / (m + ceil((n - m)/g)).
double rate_systematic(long long n, long long m, int g);

enum class RedundancyMethod {
    naive_hamming,
    hamming_remainder,
    improved_hamming,
    hamming_reduced,
    bch_remainder,
    bch_reduced,
};

RedundancyMethod parse_redundancy_method(std::string_view name);
std::string_view to_string(RedundancyMethod method);

/// Large-k redundancy in bits.  The Hamming-type methods correct one error
/// and throw for t != 1.
double redundancy_bits(RedundancyMethod method, long long n, int k, int l, int t);

}  // namespace lmpe
