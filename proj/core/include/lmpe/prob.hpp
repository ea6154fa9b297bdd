#pragma once

// Probability vectors (composite-DNA symbols), limited-magnitude probability
// errors, error balls and the LMPE channel sampler.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lmpe {

/// Number of nucleotides per composite letter.  Only 4 is supported.
inline constexpr int kLetters = 4;

using Quad = std::array<int, kLetters>;

/// One symbol: four non-negative scaled probabilities summing to the resolution k.
struct ProbabilityVector {
    Quad values{};

    [[nodiscard]] int sum() const noexcept { return values[0] + values[1] + values[2] + values[3]; }
    [[nodiscard]] bool valid_for(int k) const noexcept;
    int operator[](std::size_t i) const { return values[i]; }

    friend auto operator<=>(const ProbabilityVector&, const ProbabilityVector&) = default;
};

/// Zero-sum perturbation of one symbol.
struct SymbolError {
    Quad deltas{};

    [[nodiscard]] bool is_zero() const noexcept { return deltas == Quad{}; }
    /// Total upward change (equals the downward change for a zero-sum error).
    [[nodiscard]] int magnitude() const noexcept;

    friend auto operator<=>(const SymbolError&, const SymbolError&) = default;
};

using Word = std::vector<ProbabilityVector>;
using ErrorWord = std::vector<SymbolError>;
using BigCount = boost::multiprecision::cpp_int;

ProbabilityVector operator+(const ProbabilityVector& x, const SymbolError& e);
SymbolError operator-(const ProbabilityVector& y, const ProbabilityVector& x);

/// |alphabet| = C(k+3, 3).
std::uint64_t alphabet_size(int k);

/// Every symbol of resolution k in lexicographic order.
std::vector<ProbabilityVector> enumerate_alphabet(int k);

/// True iff sum(e) = 0 and sum|e_j| <= 2l (equivalently upward = downward <= l).
bool lmpe_is_valid(const SymbolError& e, int l);

/// All l-LMPE errors e (zero included) with x + e still a symbol of resolution k,
/// in lexicographic order of the delta tuple.
std::vector<SymbolError> symbol_error_ball(const ProbabilityVector& x, int k, int l);

/// Number of words reachable from `x` by an (l, t) LMPE.
BigCount word_error_ball_size(const Word& x, int k, int l, int t);

/// Shortest path length between two words in the graph whose edges are
/// single-symbol l-LMPEs.  `std::nullopt` when y is unreachable.  Throws
/// `limit_exceeded` once more than `max_visited` words have been explored.
std::optional<int> geodesic_distance(const Word& x, const Word& y, int k, int l,
                                     std::size_t max_visited = 2'000'000);

/// All words within geodesic distance `radius` of `x` (center included), sorted.
std::vector<Word> geodesic_ball(const Word& x, int k, int l, int radius,
                                std::size_t max_visited = 2'000'000);

enum class WeightPolicy {
    up_to_t,  // number of corrupted symbols uniform on {0, ..., t}
    exactly_t,
};

/// Draws an (l, t) LMPE for the word `x`: a uniform set of corrupted
/// positions and, per position, a uniform nonzero error from its l-ball.
/// Deterministic for a fixed seed.
ErrorWord sample_lmpe(const Word& x, int k, int l, int t, std::uint64_t seed,
                      WeightPolicy policy = WeightPolicy::up_to_t);

Word apply_errors(const Word& x, const ErrorWord& e);

/// Resolution shared by every symbol of the word; throws if the word is empty
/// or mixed.
int word_resolution(const Word& w);

// Codeword line format: symbols separated by ';', values by ','.
// Example: "3,3,3,3;2,4,3,3".
std::string format_symbol(const ProbabilityVector& x);
std::string format_word(const Word& w);
ProbabilityVector parse_symbol(std::string_view text, int k);
/// Strict: every symbol must satisfy 0 <= x_j <= k and sum = k.
Word parse_word(std::string_view line, int k);

std::ostream& operator<<(std::ostream& os, const ProbabilityVector& x);
std::ostream& operator<<(std::ostream& os, const SymbolError& e);

}  // namespace lmpe
