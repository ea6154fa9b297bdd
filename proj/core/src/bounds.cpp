#include "lmpe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lmpe/error.hpp"

namespace lmpe {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

long double log2l_(long double x) { return std::log2(x); }

// log2(2^a + 2^b)
long double log2_add(long double a, long double b) {
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    const long double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log2(1.0L + std::exp2(lo - hi));
}

long double log2_alphabet(int k) { return log2l_(static_cast<long double>(alphabet_size(k))); }

BoundReport finish(long long n, int k, long double log2_ball) {
    BoundReport r;
    r.log2_ball = log2_ball;
    const long double total = static_cast<long double>(n) * log2_alphabet(k);
    r.log2_code_size = total - log2_ball;
    long double rate = total > 0 ? r.log2_code_size / total : 1.0L;
    if (rate > 1.0L || rate < 0.0L) {
        r.clamped = true;
        rate = std::clamp(rate, 0.0L, 1.0L);
    }
    r.rate = static_cast<double>(rate);
    return r;
}

}  // namespace

std::uint64_t e_min(int l) {
    require(l >= 0, "l must be non-negative");
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; i <= static_cast<std::uint64_t>(l); ++i) sum += (i + 2) * (i + 1) / 2;
    return sum;
}

std::uint64_t e_count(int l) {
    require(l >= 0, "l must be non-negative");
    const auto x = static_cast<std::uint64_t>(l);
    return (10 * x * x * x + 15 * x * x + 11 * x) / 3 + 1;
}

long double log2_binomial(long double n, long double r) {
    if (r < 0 || r > n) return -std::numeric_limits<long double>::infinity();
    return (std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1)) / kLn2;
}

BigCount compositions4(long long n) {
    if (n < 0) return 0;
    BigCount v = n;
    return (v + 3) * (v + 2) * (v + 1) / 6;
}

BoundReport sphere_packing(long long n, int k, int t, int l, SpbVariant variant) {
    require(n >= 1 && t >= 0 && l >= 0, "need n >= 1, t >= 0, l >= 0");
    if (k < 4 * l) fail(ErrorKind::invalid_argument, "sphere-packing bound needs k >= 4l");
    long double ball = 0;
    if (variant == SpbVariant::relaxed) {
        if (t > 0) {
            if (l == 0) fail(ErrorKind::invalid_argument, "relaxed sphere-packing bound needs l >= 1 when t > 0");
            ball = log2_binomial(n, t) + t * (3 * log2l_(l) - log2l_(6));
        }
    } else {
        const long double per = log2l_(static_cast<long double>(e_min(l)));
        ball = -std::numeric_limits<long double>::infinity();
        for (int tp = 0; tp <= t && tp <= n; ++tp) ball = log2_add(ball, log2_binomial(n, tp) + tp * per);
    }
    return finish(n, k, ball);
}

BoundReport gv_bound(long long n, int k, int t, int l) {
    require(n >= 1 && t >= 0 && l >= 1, "need n >= 1, t >= 0, l >= 1");
    if (t == 0) return finish(n, k, 0);
    const int d = 2 * t;
    const long double ball =
        log2l_(d) + log2_binomial(n, d) + d * log2l_(10.0L / 3.0L) + 6.0L * t * log2l_(l);
    BoundReport r = finish(n, k, ball);
    const long double threshold =
        static_cast<long double>(d) * d * std::pow(3.02L, static_cast<long double>(d)) / std::pow(static_cast<long double>(l), 3);
    r.condition_met = static_cast<long double>(n) > threshold;
    return r;
}

BallVolumeTerms ball_volume_terms(long long n, int l, int d) {
    require(d >= 1 && l >= 1 && n >= 1, "need d >= 1, l >= 1, n >= 1");
    // weight[i][s]: sum over compositions of s into i positive parts of prod c_j^3
    std::vector<std::vector<long double>> weight(static_cast<std::size_t>(d) + 1,
                                                 std::vector<long double>(static_cast<std::size_t>(d) + 1, 0));
    weight[0][0] = 1;
    for (int i = 1; i <= d; ++i)
        for (int s = i; s <= d; ++s)
            for (int c = 1; c <= s - (i - 1); ++c)
                weight[i][s] += weight[i - 1][s - c] * static_cast<long double>(c) * c * c;

    BallVolumeTerms out;
    const long double ten_thirds = log2l_(10.0L / 3.0L);
    const long double log_l = log2l_(l);
    for (int i = 1; i <= d; ++i) {
        const long double common = log2_binomial(n, i) + i * ten_thirds;
        const long double comps = log2_binomial(d - 1, i - 1);
        out.log2_v.push_back(common + log2l_(weight[i][d]) + 3.0L * i * log_l);
        out.log2_lower.push_back(common + comps + 3.0L * log2l_(d - i + 1) + 3.0L * i * log_l);
        out.log2_upper.push_back(common + comps + 3.0L * i * log2l_(static_cast<long double>(d) * l / i));
        BigCount c = 1;
        for (int j = 1; j <= i - 1; ++j) c = c * (d - j) / j;
        out.compositions.push_back(c);
    }
    return out;
}

long double log2_volume_ratio_bound(long long n, int l, int d, int i) {
    require(i >= 1 && i < d && n > i && l >= 1, "need 1 <= i < d and n > i");
    return log2l_(10.0L / 3.0L) + log2l_(static_cast<long double>(n - i)) - log2l_(static_cast<long double>(i) * (i + 1)) +
           4.0L * log2l_(d - i) + 3.0L * log2l_(l) + 3.0L * i * log2l_(static_cast<long double>(i) / d);
}

long double volume_ratio_threshold(int l, int d, int i) {
    require(i >= 1 && i < d && l >= 1, "need 1 <= i < d");
    const long double li = static_cast<long double>(i);
    return 3.0L / (10.0L * std::pow(static_cast<long double>(l), 3)) * li * (li + 1) /
               std::pow(static_cast<long double>(d - i), 4) * std::pow(static_cast<long double>(d) / li, 3 * li) +
           li;
}

QuotientCount quotient_counts(int k, int l) {
    require(k >= 1 && l >= 0, "need k >= 1 and l >= 0");
    const int p = 2 * l + 1;
    QuotientCount qc;
    qc.s = k / p;
    qc.which = (6 * l + 3 + k % p <= 8 * l) ? QuotientCase::one : QuotientCase::two;
    qc.s_min = std::max(qc.s - (qc.which == QuotientCase::one ? 3 : 2), 0);
    qc.total = 0;
    for (int j = qc.s_min; j <= qc.s; ++j) {
        qc.per_sum.push_back(compositions4(j));
        qc.total += qc.per_sum.back();
    }
    return qc;
}

double rate_nonsystematic(long long n, long long m, int k, int l, RateVariant variant) {
    require(n >= 1 && m >= 0 && m <= n, "need 0 <= m <= n");
    const long double frac = static_cast<long double>(m) / static_cast<long double>(n);
    if (variant == RateVariant::approx) {
        require(k >= 2, "approximate rate needs k >= 2");
        return static_cast<double>(frac + (1.0L - log2l_(2 * l + 1) / log2l_(k)) * (1.0L - frac));
    }
    const long double full = log2_alphabet(k);
    const long double part = log2l_(static_cast<long double>(alphabet_size(quotient_counts(k, l).s_min)));
    return static_cast<double>((m * full + (n - m) * part) / (n * full));
}

double rate_systematic(long long n, long long m, int g) {
    require(n >= 1 && m >= 0 && m <= n && g >= 1, "need 0 <= m <= n and g >= 1");
    if (m == 0) return 0.0;
    const long long r = (n - m + g - 1) / g;
    return static_cast<double>(m) / static_cast<double>(m + r);
}

RedundancyMethod parse_redundancy_method(std::string_view name) {
    for (auto m : {RedundancyMethod::naive_hamming, RedundancyMethod::hamming_remainder, RedundancyMethod::improved_hamming,
                   RedundancyMethod::hamming_reduced, RedundancyMethod::bch_remainder, RedundancyMethod::bch_reduced})
        if (to_string(m) == name) return m;
    fail(ErrorKind::invalid_argument, "unknown redundancy method '" + std::string(name) + "'");
}

std::string_view to_string(RedundancyMethod method) {
    switch (method) {
        case RedundancyMethod::naive_hamming: return "naive_hamming";
        case RedundancyMethod::hamming_remainder: return "hamming_remainder";
        case RedundancyMethod::improved_hamming: return "improved_hamming";
        case RedundancyMethod::hamming_reduced: return "hamming_reduced";
        case RedundancyMethod::bch_remainder: return "bch_remainder";
        case RedundancyMethod::bch_reduced: return "bch_reduced";
    }
    return "?";
}

double redundancy_bits(RedundancyMethod method, long long n, int k, int l, int t) {
    require(n >= 1 && l >= 1 && t >= 0, "need n >= 1, l >= 1, t >= 0");
    const long double p = 2 * l + 1;
    const long double nn = static_cast<long double>(n);
    const bool single = method != RedundancyMethod::bch_remainder && method != RedundancyMethod::bch_reduced;
    if (single && t != 1)
        fail(ErrorKind::invalid_argument, std::string(to_string(method)) + " corrects a single error; t must be 1");
    switch (method) {
        case RedundancyMethod::naive_hamming:
            return static_cast<double>(log2l_((static_cast<long double>(alphabet_size(k)) - 1) * nn + 1));
        case RedundancyMethod::hamming_remainder: return static_cast<double>(log2l_((p * p * p - 1) * nn + 1));
        case RedundancyMethod::improved_hamming: return static_cast<double>(log2l_((p * p * p - 1) / 2 * nn + 1));
        case RedundancyMethod::hamming_reduced:
            return static_cast<double>(log2l_((p * p - 1) * nn + 1) + log2l_(p));
        case RedundancyMethod::bch_remainder: return static_cast<double>(2.0L * t * log2l_(nn + 1));
        case RedundancyMethod::bch_reduced: return static_cast<double>(3.0L * t * log2l_(nn + 1));
    }
    return 0;
}

}  // namespace lmpe
