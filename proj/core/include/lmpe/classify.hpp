#pragma once

// Symbol classification: quotient/remainder split under the divisor 2l+1,
// remainder-class <-> field-element maps, reduced classes generated by a
// critical vector, and recovery of a symbol from its corrected class.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lmpe/field.hpp"
#include "lmpe/prob.hpp"

namespace lmpe {

using RemainderVector = Quad;
using QuotientVector = Quad;

struct RemainderDecomposition {
    QuotientVector quotient{};
    RemainderVector remainder{};

    friend bool operator==(const RemainderDecomposition&, const RemainderDecomposition&) = default;
};

inline int divisor(int l) { return 2 * l + 1; }

RemainderDecomposition split(const ProbabilityVector& x, int l);
/// Inverse of split.  Throws when the result is not a symbol of resolution k.
ProbabilityVector combine(const RemainderDecomposition& d, int l, int k);

/// All remainder vectors b (entries in [0, 2l]) with sum(b) = k mod (2l+1)
/// and sum(b) <= k, in lexicographic order.
std::vector<RemainderVector> remainder_vectors(int l, int k);

/// d is a remainder error pattern iff the upward part (entries in [0, l])
/// equals the downward part (2l+1-d_j for entries in [l+1, 2l]) and is <= l.
bool is_remainder_error_pattern(const RemainderVector& d, int l);

/// Nonzero remainder error patterns with zero sum mod (2l+1), lexicographic.
std::vector<RemainderVector> remainder_error_patterns(int l);

RemainderVector scale_mod(const RemainderVector& b, int i, int l);
RemainderVector add_mod(const RemainderVector& a, const RemainderVector& b, int l);
RemainderVector sub_mod(const RemainderVector& a, const RemainderVector& b, int l);

/// Injective map between remainder vectors and GF(q) elements.
class RemainderClassMap {
public:
    /// The reference l = 1, k = 0 (mod 3) mapping onto GF(27).
    static RemainderClassMap table_one();
    /// Remainder vectors in lexicographic order against field integers 0..q-1.
    static RemainderClassMap lexicographic(int l, int k, std::uint32_t q);
    /// Linear embedding b -> b1 a^2 + b2 a + b3 into GF((2l+1)^3), 2l+1 prime.
    /// Differences of remainder vectors map to differences of field elements.
    static RemainderClassMap polynomial(const Field& field, int l, int k);
    /// Default for a remainder-class code: table_one() when it applies, otherwise
    /// lexicographic onto the first q elements.
    static RemainderClassMap canonical(int l, int k, std::uint32_t q);

    /// Replaces the element of `b`, swapping with whichever vector held `e`.
    void reassign(const RemainderVector& b, FieldElement e);

    [[nodiscard]] std::optional<FieldElement> class_index(const RemainderVector& b) const;
    [[nodiscard]] const RemainderVector& remainder_of(FieldElement e) const;
    [[nodiscard]] bool covers(FieldElement e) const { return e.value < by_element_.size() && has_[e.value]; }

    [[nodiscard]] int l() const noexcept { return l_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::uint32_t field_order() const noexcept { return q_; }
    [[nodiscard]] std::size_t size() const noexcept { return by_vector_.size(); }
    [[nodiscard]] const std::map<RemainderVector, FieldElement>& entries() const noexcept { return by_vector_; }

private:
    RemainderClassMap(int l, int k, std::uint32_t q);
    void insert(const RemainderVector& b, FieldElement e);

    int l_ = 0;
    int k_ = 0;
    std::uint32_t q_ = 0;
    std::map<RemainderVector, FieldElement> by_vector_;
    std::vector<RemainderVector> by_element_;
    std::vector<bool> has_;
};

/// (2l+1)^2 classes x (2l+1) columns; cell (r, i) = column0[r] + i * critical.
class ReducedClassTable {
public:
    struct Cell {
        std::size_t row = 0;
        int column = 0;
    };

    /// Throws when `critical` is not a critical vector for l.
    static ReducedClassTable build(int l, int k, const RemainderVector& critical);
    /// Wraps explicit rows without checks (used to test the validator).
    static ReducedClassTable from_rows(int l, int k, RemainderVector critical,
                                       std::vector<std::vector<RemainderVector>> rows);

    [[nodiscard]] int l() const noexcept { return l_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] const RemainderVector& critical() const noexcept { return critical_; }
    [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
    [[nodiscard]] int column_count() const noexcept { return divisor(l_); }
    [[nodiscard]] const std::vector<std::vector<RemainderVector>>& rows() const noexcept { return rows_; }
    [[nodiscard]] const RemainderVector& at(std::size_t row, int column) const;
    /// Row/column of a remainder vector; nullopt when absent.
    [[nodiscard]] std::optional<Cell> locate(const RemainderVector& b) const;

private:
    int l_ = 0;
    int k_ = 0;
    RemainderVector critical_{};
    std::vector<std::vector<RemainderVector>> rows_;
    std::map<RemainderVector, Cell> index_;
};

/// b1 = 1, sum(b) = 0 mod (2l+1), and no i*b (1 <= i <= 2l) is a remainder
/// error pattern.  Lexicographic order.
std::vector<RemainderVector> find_critical_vectors(int l);

/// Exhaustively checks exact cover (C2) and that no two vectors sharing a
/// row differ by a remainder error pattern (C1).
bool validate_classification(const ReducedClassTable& table, int l);

/// Finds the unique symbol x with remainder `b` such that y - x is an
/// l-LMPE.  Throws `decode_failure` when no (or more than one) symbol fits.
ProbabilityVector second_layer_recover(const ProbabilityVector& y, const RemainderVector& b, int k, int l);

}  // namespace lmpe
