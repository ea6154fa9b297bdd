#include <doctest.h>

#include <vector>

#include "lmpe/error.hpp"
#include "lmpe/field.hpp"

using namespace lmpe;

namespace {

// Schoolbook product of two coefficient vectors (highest first) reduced by the
// monic modulus, all mod p.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus, int p) {
    const std::size_t m = a.size();
    std::vector<int> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // modulus = x^m + c_{m-1} x^{m-1} + ... + c_0, stored {1, c_{m-1}, ..., c_0}
    for (std::size_t i = 0; i + m < prod.size(); ++i) {
        const int lead = prod[i];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= m; ++j) prod[i + j] = ((prod[i + j] - lead * modulus[j]) % p + p) % p;
    }
    return {prod.end() - static_cast<std::ptrdiff_t>(m), prod.end()};
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("GF(27) with x^3+2x+1 matches the reference representation") {
        const Field f = Field::make(3, 3);
        CHECK(f.order() == 27);
        CHECK(f.primitive_poly() == std::vector<int>{1, 0, 2, 1});
        CHECK(f.exp(3).value == 4);
        CHECK(f.coefficients(f.exp(3)) == std::vector<int>{0, 1, 2});
        CHECK(f.exp(13).value == 14);
        CHECK(f.coefficients(f.exp(13)) == std::vector<int>{0, 0, 2});
        CHECK(f.log(FieldElement{4}) == 3);
        CHECK(f.log(FieldElement{26}) == 25);
        CHECK(f.coefficients(FieldElement{26}) == std::vector<int>{2, 0, 1});
        CHECK(f.coefficients(FieldElement{5}) == std::vector<int>{1, 2, 0});
    }

    TEST_CASE("multiplication agrees with polynomial arithmetic") {
        for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}}) {
            const Field f = Field::make(p, m);
            for (std::uint32_t a = 0; a < f.order(); ++a)
                for (std::uint32_t b = 0; b < f.order(); ++b) {
                    const auto ca = f.coefficients(FieldElement{a});
                    const auto cb = f.coefficients(FieldElement{b});
                    const auto expect = poly_mulmod(ca, cb, f.primitive_poly(), p);
                    REQUIRE(f.coefficients(f.mul(FieldElement{a}, FieldElement{b})) == expect);
                    std::vector<int> sum(ca.size());
                    for (std::size_t i = 0; i < ca.size(); ++i) sum[i] = (ca[i] + cb[i]) % p;
                    REQUIRE(f.coefficients(f.add(FieldElement{a}, FieldElement{b})) == sum);
                }
        }
    }

    TEST_CASE("inverses, division and powers") {
        const Field f = Field::make(5, 2);
        for (std::uint32_t a = 1; a < f.order(); ++a) {
            const FieldElement x{a};
            CHECK(f.mul(x, f.inv(x)) == Field::one());
            CHECK(f.div(f.mul(x, FieldElement{7}), x) == FieldElement{7});
            CHECK(f.pow(x, static_cast<long long>(f.order() - 1)) == Field::one());
            CHECK(f.sub(x, x) == Field::zero());
            CHECK(f.add(x, f.neg(x)) == Field::zero());
        }
        CHECK(f.multiplicative_order(f.exp(1)) == f.order() - 1);
        CHECK(f.exp(-1) == f.inv(f.exp(1)));
        CHECK_THROWS_AS((void)f.inv(Field::zero()), Error);
        CHECK_THROWS_AS((void)f.log(Field::zero()), Error);
    }

    TEST_CASE("integer representation of the prime field") {
        const Field f = Field::make(3, 1);
        // alpha = 2 generates GF(3)^*: alpha^0 = 1 -> integer 1, alpha^1 = 2 -> integer 2
        CHECK(f.coefficients(FieldElement{1}) == std::vector<int>{1});
        CHECK(f.coefficients(FieldElement{2}) == std::vector<int>{2});
    }

    TEST_CASE("rejects non-primitive moduli and bad parameters") {
        CHECK_THROWS_AS((void)Field::make(3, 2, std::vector<int>{1, 0, 1}), Error);  // x^2+1: order 4
        CHECK_THROWS_AS((void)Field::make(4, 1), Error);
        CHECK_THROWS_AS((void)Field::make(3, 2, std::vector<int>{1, 1}), Error);
    }

    TEST_CASE("prime power helpers") {
        CHECK(is_prime(2));
        CHECK(is_prime(7));
        CHECK_FALSE(is_prime(343));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(27));
        const auto pp = as_prime_power(27);
        REQUIRE(pp.has_value());
        CHECK(pp->p == 3);
        CHECK(pp->m == 3);
        CHECK_FALSE(as_prime_power(12).has_value());
        CHECK(largest_prime_power_at_most(26).q == 25);
        CHECK(largest_prime_power_at_most(343).q == 343);
        CHECK(largest_prime_power_at_most(730).q == 729);
    }
}
