#pragma once

// Arithmetic over small finite fields GF(p^m).
//
// Elements are exchanged in the "integer representation": 0 is the zero
// element and the nonzero element alpha^j is the integer j + 1, where alpha
// is a root of the field's primitive polynomial.  Polynomial coefficient
// vectors are written highest power first (constant term last), so the
// element alpha + 2 of GF(27) reads as (0, 1, 2).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lmpe {

struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

enum class ArithOp { add, sub, mul, div };

class Field {
public:
    /// Builds GF(p^m).  `primitive_poly` lists the monic polynomial's
    /// coefficients from x^m down to the constant term.  When omitted a
    /// default is used (x^3 + 2x + 1 for GF(27); otherwise the first
    /// primitive polynomial in lexicographic coefficient order).
    static Field make(int p, int m, std::optional<std::vector<int>> primitive_poly = std::nullopt);

    /// Default primitive polynomial for (p, m), highest coefficient first.
    static std::vector<int> default_primitive_poly(int p, int m);

    [[nodiscard]] int characteristic() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return m_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
    [[nodiscard]] const std::vector<int>& primitive_poly() const noexcept { return poly_; }

    [[nodiscard]] bool contains(FieldElement a) const noexcept { return a.value < q_; }
    [[nodiscard]] FieldElement element(std::uint32_t integer) const;

    [[nodiscard]] static constexpr FieldElement zero() noexcept { return {0}; }
    [[nodiscard]] static constexpr FieldElement one() noexcept { return {1}; }

    [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
    [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
    [[nodiscard]] FieldElement neg(FieldElement a) const;
    [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
    [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const;
    [[nodiscard]] FieldElement inv(FieldElement a) const;
    [[nodiscard]] FieldElement pow(FieldElement a, long long e) const;
    [[nodiscard]] FieldElement arith(ArithOp op, FieldElement a, FieldElement b) const;

    /// alpha^power; negative powers allowed.
    [[nodiscard]] FieldElement exp(long long power) const;
    /// Discrete log base alpha, in [0, q-2].  Throws for zero.
    [[nodiscard]] std::uint32_t log(FieldElement a) const;

    /// Polynomial coefficients of `a`, highest power first, length m.
    [[nodiscard]] std::vector<int> coefficients(FieldElement a) const;
    [[nodiscard]] FieldElement from_coefficients(std::span<const int> coeffs) const;

    /// Multiplicative order of `a` (a != 0).
    [[nodiscard]] std::uint32_t multiplicative_order(FieldElement a) const;

    [[nodiscard]] std::string describe() const;

private:
    Field() = default;

    std::uint32_t poly_add(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t poly_neg(std::uint32_t u) const;

    int p_ = 0;
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> poly_;
    // packed[v] is the base-p packed coefficient word of the element with
    // integer representation v; element_of is its inverse.
    std::vector<std::uint32_t> packed_;
    std::vector<std::uint32_t> element_of_;
};

bool is_prime(long long n);

/// Largest prime power not exceeding `n` (n >= 2), with its (p, m).
struct PrimePower {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
};
std::optional<PrimePower> as_prime_power(std::uint64_t n);
PrimePower largest_prime_power_at_most(std::uint64_t n);

}  // namespace lmpe
