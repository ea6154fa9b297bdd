#include <doctest.h>

#include <set>

#include "lmpe/classify.hpp"
#include "lmpe/error.hpp"

using namespace lmpe;

TEST_SUITE("classify") {
    TEST_CASE("split and combine") {
        const auto d = split(ProbabilityVector{{2, 4, 3, 3}}, 1);
        CHECK(d.quotient == QuotientVector{0, 1, 1, 1});
        CHECK(d.remainder == RemainderVector{2, 1, 0, 0});
        const auto c = split(ProbabilityVector{{3, 3, 3, 3}}, 1);
        CHECK(c.quotient == QuotientVector{1, 1, 1, 1});
        CHECK(c.remainder == RemainderVector{0, 0, 0, 0});
        CHECK(combine({{0, 1, 1, 1}, {2, 1, 0, 0}}, 1, 12) == ProbabilityVector{{2, 4, 3, 3}});
        CHECK_THROWS_AS((void)combine({{0, 1, 1, 1}, {2, 1, 0, 0}}, 1, 13), Error);
        for (int l = 1; l <= 2; ++l)
            for (int k = 0; k <= 16; ++k)
                for (const auto& x : enumerate_alphabet(k)) REQUIRE(combine(split(x, l), l, k) == x);
    }

    TEST_CASE("remainder vector counts") {
        for (int l = 1; l <= 3; ++l) {
            const int p = divisor(l);
            for (int k : {6 * l, 6 * l + 1, 6 * l + 2, 10 * l}) {
                const auto all = remainder_vectors(l, k);
                CHECK(all.size() == static_cast<std::size_t>(p * p * p));
                CHECK(std::is_sorted(all.begin(), all.end()));
                // brute force: the distinct remainders actually met by symbols
                std::set<RemainderVector> seen;
                for (const auto& x : enumerate_alphabet(k)) seen.insert(split(x, l).remainder);
                CHECK(seen == std::set<RemainderVector>(all.begin(), all.end()));
            }
        }
    }

    TEST_CASE("remainder error patterns for l = 1") {
        const std::set<RemainderVector> reference{{0, 0, 1, 2}, {0, 1, 0, 2}, {1, 0, 0, 2}, {0, 1, 2, 0},
                                                  {1, 2, 0, 0}, {1, 0, 2, 0}, {0, 0, 2, 1}, {0, 2, 0, 1},
                                                  {2, 0, 0, 1}, {0, 2, 1, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}};
        const auto found = remainder_error_patterns(1);
        CHECK(std::set<RemainderVector>(found.begin(), found.end()) == reference);
        CHECK(is_remainder_error_pattern({0, 0, 1, 2}, 1));
        CHECK_FALSE(is_remainder_error_pattern({1, 1, 1, 0}, 1));
        // every l-LMPE changes the remainder by a pattern
        for (int l = 1; l <= 2; ++l) {
            const auto pats = remainder_error_patterns(l);
            const std::set<RemainderVector> pset(pats.begin(), pats.end());
            const ProbabilityVector x{{3 * l, 3 * l, 3 * l, 3 * l}};
            for (const auto& e : symbol_error_ball(x, 12 * l, l)) {
                if (e.is_zero()) continue;
                const auto d = sub_mod(split(x + e, l).remainder, split(x, l).remainder, l);
                CHECK(pset.count(d) == 1);
            }
        }
    }

    TEST_CASE("reference class map") {
        const auto map = RemainderClassMap::table_one();
        CHECK(map.size() == 27);
        CHECK(map.class_index({0, 0, 0, 0})->value == 0);
        CHECK(map.class_index({1, 1, 1, 0})->value == 1);
        CHECK(map.class_index({2, 2, 2, 0})->value == 2);
        CHECK(map.class_index({2, 1, 0, 0})->value == 17);
        CHECK(map.class_index({0, 1, 2, 0})->value == 24);
        CHECK(map.class_index({2, 0, 1, 0})->value == 26);
        CHECK(map.remainder_of(FieldElement{13}) == RemainderVector{1, 1, 0, 1});
        std::set<std::uint32_t> used;
        for (const auto& [b, e] : map.entries()) used.insert(e.value);
        CHECK(used.size() == 27);
        CHECK(RemainderClassMap::canonical(1, 12, 27).class_index({2, 1, 0, 0})->value == 17);
    }

    TEST_CASE("lexicographic map and overrides") {
        auto map = RemainderClassMap::lexicographic(2, 20, 121);
        CHECK(map.size() == 121);  // four of the 125 remainder vectors stay unmapped
        const auto all = remainder_vectors(2, 20);
        CHECK(map.class_index(all[0])->value == 0);
        CHECK_FALSE(map.class_index(all[124]).has_value());
        map.reassign(all[0], FieldElement{5});
        CHECK(map.class_index(all[0])->value == 5);
        CHECK(map.class_index(all[5])->value == 0);
    }

    TEST_CASE("polynomial map is linear") {
        const Field f = Field::make(3, 3);
        const auto map = RemainderClassMap::polynomial(f, 1, 12);
        const auto all = remainder_vectors(1, 12);
        for (const auto& a : all)
            for (const auto& b : all) {
                const auto diff = f.sub(*map.class_index(a), *map.class_index(b));
                const auto d = sub_mod(a, b, 1);
                const int coeffs[3] = {d[0], d[1], d[2]};
                REQUIRE(diff == f.from_coefficients(coeffs));
            }
    }

    TEST_CASE("critical vectors") {
        const RemainderVector reference[] = {{1, 1, 1, 0}, {1, 1, 2, 1}, {1, 2, 3, 1}, {1, 4, 6, 7}};
        for (int l = 1; l <= 3; ++l) {
            const auto found = find_critical_vectors(l);
            CHECK(std::find(found.begin(), found.end(), reference[l - 1]) != found.end());
            for (const auto& b : found) {
                CHECK(b[0] == 1);
                CHECK((b[0] + b[1] + b[2] + b[3]) % divisor(l) == 0);
                CHECK(validate_classification(ReducedClassTable::build(l, 4 * divisor(l), b), l));
            }
        }
        CHECK(find_critical_vectors(5).empty());
        CHECK_THROWS_AS((void)ReducedClassTable::build(1, 12, {0, 0, 1, 2}), Error);
    }

    TEST_CASE("reduced table layout and validation") {
        const auto table = ReducedClassTable::build(1, 12, {1, 1, 1, 0});
        CHECK(table.row_count() == 9);
        CHECK(table.column_count() == 3);
        CHECK(validate_classification(table, 1));
        for (std::size_t r = 0; r < table.row_count(); ++r)
            for (int c = 0; c < 3; ++c) {
                const auto cell = table.locate(table.at(r, c));
                REQUIRE(cell.has_value());
                CHECK(cell->row == r);
                CHECK(cell->column == c);
                CHECK(table.at(r, c) == add_mod(table.at(r, 0), scale_mod({1, 1, 1, 0}, c, 1), 1));
            }
        // rows sorted by their column-0 vector
        for (std::size_t r = 1; r < table.row_count(); ++r) CHECK(table.at(r - 1, 0) < table.at(r, 0));

        auto rows = table.rows();
        rows[1][0] = rows[0][0];  // duplicate cell: not a cover
        CHECK_FALSE(validate_classification(ReducedClassTable::from_rows(1, 12, {1, 1, 1, 0}, rows), 1));
        rows = table.rows();
        // (0,0,0,0) and (0,0,1,2) in one row differ by a remainder error pattern
        auto where = table.locate({0, 0, 1, 2});
        REQUIRE(where.has_value());
        std::swap(rows[0][1], rows[where->row][static_cast<std::size_t>(where->column)]);
        CHECK_FALSE(validate_classification(ReducedClassTable::from_rows(1, 12, {1, 1, 1, 0}, rows), 1));
    }

    TEST_CASE("second layer recovery is unique") {
        for (int k = 0; k <= 14; ++k)
            for (const auto& x : enumerate_alphabet(k)) {
                const auto b = split(x, 1).remainder;
                for (const auto& e : symbol_error_ball(x, k, 1)) REQUIRE(second_layer_recover(x + e, b, k, 1) == x);
            }
        for (const auto& x : enumerate_alphabet(12)) {
            const auto b = split(x, 2).remainder;
            for (const auto& e : symbol_error_ball(x, 12, 2)) REQUIRE(second_layer_recover(x + e, b, 12, 2) == x);
        }
        try {
            (void)second_layer_recover(ProbabilityVector{{3, 3, 3, 3}}, {1, 1, 1, 0}, 12, 1);
            FAIL("expected a decode failure");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::decode_failure);
        }
    }
}
