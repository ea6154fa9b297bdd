#pragma once

// Gray mappings: every length-g word over GF(q) is assigned a probability
// vector so that mapped vectors which differ by a 2l-LMPE carry words at
// Hamming distance exactly 1.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmpe/field.hpp"
#include "lmpe/prob.hpp"

namespace lmpe {

using GrayWord = std::vector<FieldElement>;

struct GrayParams {
    int k = 0;
    int l = 0;
    std::uint32_t q = 0;
    int g = 0;

    friend bool operator==(const GrayParams&, const GrayParams&) = default;
};

class GrayMapping {
public:
    struct Pair {
        GrayWord word;
        ProbabilityVector vector;
    };

    explicit GrayMapping(GrayParams params);

    /// Adds a pair without any Gray check (gray_validate does that).
    void insert(GrayWord word, const ProbabilityVector& x);

    [[nodiscard]] const GrayParams& params() const noexcept { return params_; }
    /// q^g.
    [[nodiscard]] std::uint64_t word_count() const noexcept { return word_count_; }
    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }
    [[nodiscard]] bool complete() const noexcept { return pairs_.size() == word_count_; }
    /// Pairs in insertion order.
    [[nodiscard]] const std::vector<Pair>& pairs() const noexcept { return pairs_; }

    [[nodiscard]] std::optional<ProbabilityVector> image(const GrayWord& word) const;
    [[nodiscard]] std::optional<GrayWord> preimage(const ProbabilityVector& x) const;

    /// Word <-> integer in [0, q^g), most significant digit first.
    [[nodiscard]] std::uint64_t word_index(const GrayWord& word) const;
    [[nodiscard]] GrayWord word_at(std::uint64_t index) const;

private:
    GrayParams params_;
    std::uint64_t word_count_ = 0;
    std::vector<Pair> pairs_;
    std::unordered_map<std::uint64_t, std::size_t> by_word_;
    std::unordered_map<std::uint64_t, std::size_t> by_vector_;
};

struct GraySearchOptions {
    /// Extra constraint on mapped vectors (for example: remainder class in
    /// the chosen field subset).  Unset means every vector is admissible.
    std::function<bool(const ProbabilityVector&)> admissible;
    /// Neighbourhood used for the distance-1 condition, as an LMPE magnitude.
    /// Defaults to 2l.  Smaller radii give mappings that only satisfy the
    /// condition for closer pairs.
    std::optional<int> ball_radius;
};

/// Breadth-first search over 2l-error balls, visiting vectors, ball deltas and
/// unused words in lexicographic order.  Returns nullopt when every vector
/// has been visited before q^g pairs were placed.
std::optional<GrayMapping> gray_search(int k, int l, std::uint32_t q, int g, const GraySearchOptions& options = {});

/// Checks completeness, injectivity and the distance-1 condition between
/// every pair of mapped vectors that differ by an LMPE of magnitude at most
/// `radius` (2l by default).
bool gray_validate(const GrayMapping& mapping, std::optional<int> radius = std::nullopt);

/// Same mapping with k2 - k added to the last coordinate of every image.
GrayMapping gray_extend(const GrayMapping& mapping, int k2);

/// Smallest k with C(k+3,3) >= q^g E_{2l}.
int gray_existence_k(int l, std::uint32_t q, int g);

struct Ratio {
    BigCount numerator;
    BigCount denominator;

    [[nodiscard]] double value() const;
};

/// q^g / C(k+3,3), reduced.
Ratio gray_efficiency(std::uint32_t q, int g, int k);

/// Text format: a header line "# gray k=.. l=.. q=.. g=.." followed by one
/// line per pair, "d1 d2 ... -> x1,x2,x3,x4".
void write_gray_mapping(std::ostream& os, const GrayMapping& mapping);
GrayMapping read_gray_mapping(std::istream& is);

}  // namespace lmpe
