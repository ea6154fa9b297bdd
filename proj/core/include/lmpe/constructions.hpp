#pragma once

// Complete LMPE codecs.  Every variant classifies symbols by their remainder
// under 2l+1, protects the classes with a code over a small field, and puts
// free information into whatever the classes leave unconstrained:
//
//   remainder         remainder class -> GF(q), Hamming or BCH first layer
//   improved_hamming  linear class map into GF((2l+1)^3), improved Hamming code
//   reduced           reduced classes: row index over GF((2l+1)^2) with a BCH
//                     code of distance 2t+1, first remainder entry over
//                     GF(2l+1) with a BCH code of distance t+1
//   systematic        information symbols verbatim, field parities packed g
//                     per parity symbol through a Gray mapping
//
// In the non-systematic variants each parity symbol also carries a quotient
// vector chosen from C(s_min+3, 3) possibilities.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmpe/blockcodes.hpp"
#include "lmpe/classify.hpp"
#include "lmpe/field.hpp"
#include "lmpe/gray.hpp"
#include "lmpe/prob.hpp"

namespace lmpe {

enum class Variant { remainder, reduced, improved_hamming, systematic };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct LmpeCodeSpec {
    Variant variant = Variant::remainder;
    int k = 12;
    int l = 1;
    int t = 1;
    /// Field order for the class map (remainder, systematic).  Defaults to the
    /// largest prime power <= (2l+1)^3.
    std::optional<std::uint32_t> q;
    /// Hamming redundancy.  Used when `w` is unset (remainder needs t = 1).
    std::optional<int> r;
    /// BCH extension degree.  For `reduced` this is the first-layer degree
    /// over GF((2l+1)^2); the second layer defaults to w2 = 2w.
    std::optional<int> w;
    std::optional<int> w2;
    /// Code length.  BCH codes are shortened to it.  For `systematic` it is
    /// the nominal length whose n - m parities are padded and grouped by g.
    std::optional<std::size_t> n;
    /// Information symbols of the systematic variant.
    std::optional<std::size_t> m;
    int g = 2;
    /// LMPE magnitude of the neighbourhood used when searching for the Gray
    /// mapping (default 2l).
    std::optional<int> gray_radius;
    /// Pre-computed Gray mapping; searched for when absent.
    std::shared_ptr<const GrayMapping> gray;
    /// Critical vector of the reduced variant (default: first one found).
    std::optional<RemainderVector> critical;
    /// Explicit remainder -> field integer assignments applied on top of the
    /// default class map.
    std::vector<std::pair<RemainderVector, std::uint32_t>> map_overrides;
    std::optional<std::uint64_t> seed;
};

struct Message {
    std::vector<ProbabilityVector> info_symbols;
    /// One per non-systematic parity symbol, each below C(s_min+3, 3).
    std::vector<std::uint64_t> parity_quotient_indices;

    friend bool operator==(const Message&, const Message&) = default;
};

struct DecodeReport {
    Message message;
    /// The transmitted word as reconstructed by the decoder.
    Word codeword;
    /// Symbol positions where the received word differed from `codeword`.
    std::vector<std::size_t> corrected;
    /// Erasures handed to the first-layer decoder.
    std::size_t erasures = 0;
};

/// Lexicographic rank of a among the weak compositions of sum(a) into 4 parts.
std::uint64_t quotient_rank(const QuotientVector& a);
/// Inverse of quotient_rank for compositions of `target_sum`.
QuotientVector quotient_unrank(std::uint64_t index, int target_sum);

class LmpeCode {
public:
    static LmpeCode build(const LmpeCodeSpec& spec);

    [[nodiscard]] const LmpeCodeSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] Variant variant() const noexcept { return spec_.variant; }
    [[nodiscard]] int k() const noexcept { return spec_.k; }
    [[nodiscard]] int l() const noexcept { return spec_.l; }
    [[nodiscard]] int t() const noexcept { return spec_.t; }

    /// Number of symbols in a codeword.
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::size_t info_length() const noexcept { return info_; }
    /// Parity symbols that carry a quotient index (0 for systematic).
    [[nodiscard]] std::size_t quotient_slots() const noexcept;
    [[nodiscard]] int s_min() const noexcept { return s_min_; }
    /// C(s_min+3, 3).
    [[nodiscard]] std::uint64_t quotient_message_size() const noexcept { return quotient_size_; }
    /// Information symbols first, then parity symbols.
    [[nodiscard]] std::vector<std::size_t> info_positions() const;
    [[nodiscard]] std::vector<std::size_t> parity_positions() const;

    /// log2(#messages) / (n log2 C(k+3,3)) for the non-systematic variants,
    /// m/(m+r) scaled by the information alphabet for the systematic one.
    [[nodiscard]] double rate() const;

    [[nodiscard]] const BlockCode& first_layer() const noexcept { return *layer1_; }
    [[nodiscard]] const BlockCode* second_layer() const noexcept { return layer2_.get(); }
    [[nodiscard]] const RemainderClassMap* class_map() const noexcept { return classes_.get(); }
    [[nodiscard]] const ReducedClassTable* reduced_table() const noexcept { return table_.get(); }
    [[nodiscard]] const GrayMapping* gray_mapping() const noexcept { return gray_.get(); }

    /// Throws `invalid_argument` when the message does not fit the layout.
    [[nodiscard]] Word encode(const Message& msg) const;
    /// Throws `data_format` for malformed input and `decode_failure` when the
    /// word is not within (l, t) of a codeword the decoder can reach.
    [[nodiscard]] DecodeReport decode(const Word& received) const;

    /// A message whose symbols and indices are drawn from the full message
    /// space, deterministic for a given seed.
    [[nodiscard]] Message random_message(std::uint64_t seed) const;

    [[nodiscard]] std::string describe() const;

private:
    LmpeCode() = default;

    void build_class_variant();
    void build_reduced();
    void build_systematic();

    [[nodiscard]] ProbabilityVector parity_symbol(const RemainderVector& b, std::uint64_t index) const;
    void check_message(const Message& msg) const;
    void check_received(const Word& received) const;
    [[nodiscard]] Message extract(const Word& x) const;
    [[nodiscard]] DecodeReport finish(const Word& received, Word x, std::size_t erasures) const;

    [[nodiscard]] Word encode_classes(const Message& msg) const;
    [[nodiscard]] Word encode_reduced(const Message& msg) const;
    [[nodiscard]] Word encode_systematic(const Message& msg) const;
    [[nodiscard]] DecodeReport decode_classes(const Word& received) const;
    [[nodiscard]] DecodeReport decode_reduced(const Word& received) const;
    [[nodiscard]] DecodeReport decode_systematic(const Word& received) const;

    LmpeCodeSpec spec_;
    std::size_t length_ = 0;
    std::size_t info_ = 0;
    int s_min_ = 0;
    std::uint64_t quotient_size_ = 1;
    /// Symbols whose remainder vector has a class (all of them unless q is
    /// smaller than the number of remainder vectors).
    long double log2_info_alphabet_ = 0;
    std::size_t parity_columns_ = 0;  // systematic

    std::shared_ptr<const BlockCode> layer1_;
    std::shared_ptr<const BlockCode> layer2_;
    std::shared_ptr<const RemainderClassMap> classes_;
    std::shared_ptr<const ReducedClassTable> table_;
    std::shared_ptr<const GrayMapping> gray_;
};

/// Message line format: info symbols as a codeword line, then '|' and the
/// comma-separated parity quotient indices (omitted when there are none).
std::string format_message(const Message& msg);
Message parse_message(std::string_view line, int k);

}  // namespace lmpe
