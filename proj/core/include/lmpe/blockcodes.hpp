#pragma once

// Linear block codes over GF(q) for the first coding layer.
//
// All codes are systematic with the parity symbols last: a codeword is
// (u_0, ..., u_{k-1}, p_0, ..., p_{r-1}) and the parity-check matrix has the
// form [A | I_r].

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmpe/field.hpp"

namespace lmpe {

using Symbols = std::vector<FieldElement>;
using Matrix = std::vector<Symbols>;  // row-major

enum class CodeKind { hamming, bch, improved_hamming };

enum class DecodeStatus { ok, failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::failure;
    Symbols codeword;
    /// Positions whose symbol was changed or filled in (erasures included).
    std::vector<std::size_t> corrected;
    std::string diagnostic;

    [[nodiscard]] bool ok() const noexcept { return status == DecodeStatus::ok; }
};

class BlockCode {
public:
    /// q-ary Hamming code with r parity symbols, n = (q^r - 1)/(q - 1).
    static BlockCode hamming(const Field& field, int r);

    /// Narrow-sense BCH code over GF(q) with designed distance 2t+1 and
    /// natural length q^w - 1, optionally shortened to `length`.
    static BlockCode bch(const Field& field, int w, int t, std::optional<std::size_t> length = std::nullopt);
    /// Same, for an arbitrary designed distance delta >= 1.
    static BlockCode bch_designed(const Field& field, int w, int delta,
                                  std::optional<std::size_t> length = std::nullopt);

    /// Hamming code extended by scaled copies of the major columns so that
    /// any single error whose value lies in `errors` is corrected.
    static BlockCode improved_hamming(const Field& field, int r, std::span<const FieldElement> errors);

    [[nodiscard]] CodeKind kind() const noexcept { return kind_; }
    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return n_ - r_; }
    [[nodiscard]] std::size_t redundancy() const noexcept { return r_; }
    [[nodiscard]] int designed_distance() const noexcept { return delta_; }
    /// BCH extension degree w (1 for the Hamming kinds).
    [[nodiscard]] int extension_degree() const noexcept { return w_; }
    [[nodiscard]] const Matrix& parity_check() const noexcept { return h_; }
    /// Column scalars of an improved Hamming code (just {1} otherwise).
    [[nodiscard]] const Symbols& scalars() const noexcept { return scalars_; }
    /// Correctable error values of an improved Hamming code.
    [[nodiscard]] const Symbols& error_values() const noexcept { return errors_; }
    /// BCH generator polynomial over GF(q), lowest degree first.
    [[nodiscard]] const Symbols& generator() const noexcept { return generator_; }

    [[nodiscard]] Symbols encode(std::span<const FieldElement> info) const;
    [[nodiscard]] Symbols syndrome(std::span<const FieldElement> word) const;
    /// Corrects any pattern with 2*errors + erasures < designed distance (for
    /// the improved Hamming code: one error valued in error_values()).
    /// Anything else is reported as a failure rather than miscorrected where
    /// the syndrome allows detection.
    [[nodiscard]] DecodeResult decode(std::span<const FieldElement> received,
                                      std::span<const std::size_t> erasures = {}) const;

    [[nodiscard]] std::string describe() const;

private:
    struct BchData;

    explicit BlockCode(Field field) : field_(std::move(field)) {}

    void finish_from_columns(std::vector<Symbols> columns);
    void build_syndrome_table(std::span<const FieldElement> values);
    DecodeResult decode_by_table(std::span<const FieldElement> received) const;
    DecodeResult decode_erasures_only(std::span<const FieldElement> received,
                                      std::span<const std::size_t> erasures) const;
    DecodeResult decode_bch(std::span<const FieldElement> received, std::span<const std::size_t> erasures) const;

    Field field_;
    CodeKind kind_ = CodeKind::hamming;
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    int delta_ = 3;
    int w_ = 1;
    Matrix h_;
    Symbols scalars_{Field::one()};
    Symbols errors_;
    Symbols generator_;
    // syndrome (packed base q) -> (position, error value)
    std::unordered_map<std::uint64_t, std::pair<std::size_t, FieldElement>> table_;
    std::shared_ptr<const BchData> bch_;
};

/// floor((q-1) / ((10/3) l^3 + 5 l^2 + (11/3) l)): the largest achievable
/// number of column scalars of an improved Hamming code.
int i_max(int l, std::uint32_t q);

/// Error-value embedding {alpha^(i_max * j) : 0 <= j < count} that attains i_max scalars.
Symbols optimal_error_embedding(const Field& field, std::size_t count, int scalars);

/// Parity-check matrix as CSV in the integer representation.
std::string parity_check_csv(const BlockCode& code);

}  // namespace lmpe
