#include "lmpe/classify.hpp"

#include <algorithm>
#include <set>

#include "lmpe/error.hpp"

namespace lmpe {

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

std::string show(const RemainderVector& b) {
    return "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "," +
           std::to_string(b[3]) + ")";
}

bool is_critical(const RemainderVector& b, int l) {
    const int p = divisor(l);
    if (b[0] != 1) return false;
    for (int v : b)
        if (v < 0 || v >= p) return false;
    if (mod(b[0] + b[1] + b[2] + b[3], p) != 0) return false;
    for (int i = 1; i <= 2 * l; ++i)
        if (is_remainder_error_pattern(scale_mod(b, i, l), l)) return false;
    return true;
}

}  // namespace

RemainderDecomposition split(const ProbabilityVector& x, int l) {
    require(l >= 0, "error magnitude must be non-negative");
    const int p = divisor(l);
    RemainderDecomposition d;
    for (int j = 0; j < kLetters; ++j) {
        require(x.values[j] >= 0, "negative probability value");
        d.quotient[j] = x.values[j] / p;
        d.remainder[j] = x.values[j] % p;
    }
    return d;
}

ProbabilityVector combine(const RemainderDecomposition& d, int l, int k) {
    const int p = divisor(l);
    ProbabilityVector x;
    for (int j = 0; j < kLetters; ++j) x.values[j] = p * d.quotient[j] + d.remainder[j];
    if (!x.valid_for(k))
        fail(ErrorKind::invalid_argument,
             "combined symbol " + format_symbol(x) + " violates resolution " + std::to_string(k));
    return x;
}

std::vector<RemainderVector> remainder_vectors(int l, int k) {
    const int p = divisor(l);
    std::vector<RemainderVector> out;
    for (int b0 = 0; b0 < p; ++b0)
        for (int b1 = 0; b1 < p; ++b1)
            for (int b2 = 0; b2 < p; ++b2) {
                const int b3 = mod(k - b0 - b1 - b2, p);
                if (b0 + b1 + b2 + b3 <= k) out.push_back({b0, b1, b2, b3});
            }
    return out;
}

bool is_remainder_error_pattern(const RemainderVector& d, int l) {
    int up = 0, down = 0;
    for (int v : d) {
        if (v < 0 || v > 2 * l) return false;
        if (v <= l)
            up += v;
        else
            down += 2 * l + 1 - v;
    }
    return up == down && up <= l;
}

std::vector<RemainderVector> remainder_error_patterns(int l) {
    const int p = divisor(l);
    std::vector<RemainderVector> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    const RemainderVector v{a, b, c, d};
                    if (v == RemainderVector{}) continue;
                    if (is_remainder_error_pattern(v, l)) out.push_back(v);
                }
    return out;
}

RemainderVector scale_mod(const RemainderVector& b, int i, int l) {
    const int p = divisor(l);
    RemainderVector out;
    for (int j = 0; j < kLetters; ++j) out[j] = mod(i * b[j], p);
    return out;
}

RemainderVector add_mod(const RemainderVector& a, const RemainderVector& b, int l) {
    const int p = divisor(l);
    RemainderVector out;
    for (int j = 0; j < kLetters; ++j) out[j] = mod(a[j] + b[j], p);
    return out;
}

RemainderVector sub_mod(const RemainderVector& a, const RemainderVector& b, int l) {
    const int p = divisor(l);
    RemainderVector out;
    for (int j = 0; j < kLetters; ++j) out[j] = mod(a[j] - b[j], p);
    return out;
}

// ---------------------------------------------------------------------------
// RemainderClassMap

RemainderClassMap::RemainderClassMap(int l, int k, std::uint32_t q)
    : l_(l), k_(k), q_(q), by_element_(q), has_(q, false) {}

void RemainderClassMap::insert(const RemainderVector& b, FieldElement e) {
    require(e.value < q_, "class element outside the field");
    require(!has_[e.value], "field element mapped twice");
    require(!by_vector_.contains(b), "remainder vector mapped twice");
    by_vector_.emplace(b, e);
    by_element_[e.value] = b;
    has_[e.value] = true;
}

RemainderClassMap RemainderClassMap::table_one() {
    // Remainder vector digits followed by the GF(27) integer.
    static constexpr int kTable[27][5] = {
        {0, 0, 0, 0, 0},  {1, 1, 1, 0, 1},  {2, 2, 2, 0, 2},  {0, 1, 1, 1, 3},  {1, 2, 2, 1, 4},
        {2, 0, 0, 1, 5},  {0, 2, 2, 2, 6},  {1, 0, 0, 2, 7},  {2, 1, 1, 2, 8},  {0, 0, 1, 2, 9},
        {1, 1, 2, 2, 10}, {2, 2, 0, 2, 11}, {0, 0, 2, 1, 12}, {1, 1, 0, 1, 13}, {2, 2, 1, 1, 14},
        {0, 2, 1, 0, 15}, {1, 0, 2, 0, 16}, {2, 1, 0, 0, 17}, {0, 1, 0, 2, 18}, {1, 2, 1, 2, 19},
        {2, 0, 2, 2, 20}, {0, 2, 0, 1, 21}, {1, 0, 1, 1, 22}, {2, 1, 2, 1, 23}, {0, 1, 2, 0, 24},
        {1, 2, 0, 0, 25}, {2, 0, 1, 0, 26},
    };
    RemainderClassMap map(1, 0, 27);
    for (const auto& row : kTable)
        map.insert({row[0], row[1], row[2], row[3]}, FieldElement{static_cast<std::uint32_t>(row[4])});
    return map;
}

RemainderClassMap RemainderClassMap::lexicographic(int l, int k, std::uint32_t q) {
    RemainderClassMap map(l, k, q);
    std::uint32_t next = 0;
    for (const auto& b : remainder_vectors(l, k)) {
        if (next == q) break;
        map.insert(b, FieldElement{next++});
    }
    return map;
}

RemainderClassMap RemainderClassMap::polynomial(const Field& field, int l, int k) {
    const int p = divisor(l);
    require(field.characteristic() == p && field.degree() == 3,
            "polynomial class map needs GF((2l+1)^3) with 2l+1 prime");
    RemainderClassMap map(l, k, field.order());
    for (const auto& b : remainder_vectors(l, k)) {
        const int coeffs[3] = {b[0], b[1], b[2]};
        map.insert(b, field.from_coefficients(coeffs));
    }
    return map;
}

RemainderClassMap RemainderClassMap::canonical(int l, int k, std::uint32_t q) {
    if (l == 1 && k % 3 == 0 && k >= 6 && q == 27) {
        auto map = table_one();
        map.k_ = k;
        return map;
    }
    return lexicographic(l, k, q);
}

void RemainderClassMap::reassign(const RemainderVector& b, FieldElement e) {
    require(e.value < q_, "class element outside the field");
    auto it = by_vector_.find(b);
    require(it != by_vector_.end(), "remainder vector " + show(b) + " is not in the class map");
    const FieldElement old = it->second;
    if (old == e) return;
    if (has_[e.value]) {
        const RemainderVector other = by_element_[e.value];
        by_vector_[other] = old;
        by_element_[old.value] = other;
    } else {
        has_[old.value] = false;
        has_[e.value] = true;
    }
    it->second = e;
    by_element_[e.value] = b;
}

std::optional<FieldElement> RemainderClassMap::class_index(const RemainderVector& b) const {
    const int p = divisor(l_);
    for (int v : b)
        if (v < 0 || v >= p) fail(ErrorKind::invalid_argument, "malformed remainder vector " + show(b));
    auto it = by_vector_.find(b);
    if (it == by_vector_.end()) return std::nullopt;
    return it->second;
}

const RemainderVector& RemainderClassMap::remainder_of(FieldElement e) const {
    if (!covers(e)) fail(ErrorKind::invalid_argument, "field element " + std::to_string(e.value) + " has no class");
    return by_element_[e.value];
}

// ---------------------------------------------------------------------------
// Reduced classes

std::vector<RemainderVector> find_critical_vectors(int l) {
    require(l >= 1, "critical vectors need l >= 1");
    const int p = divisor(l);
    std::vector<RemainderVector> out;
    for (int b1 = 0; b1 < p; ++b1)
        for (int b2 = 0; b2 < p; ++b2)
            for (int b3 = 0; b3 < p; ++b3) {
                const RemainderVector b{1, b1, b2, b3};
                if (is_critical(b, l)) out.push_back(b);
            }
    return out;
}

ReducedClassTable ReducedClassTable::build(int l, int k, const RemainderVector& critical) {
    require(l >= 1, "reduced classes need l >= 1");
    if (!is_critical(critical, l))
        fail(ErrorKind::invalid_argument, show(critical) + " is not a critical vector for l=" + std::to_string(l));
    const int p = divisor(l);
    std::vector<std::vector<RemainderVector>> rows;
    for (int b1 = 0; b1 < p; ++b1)
        for (int b2 = 0; b2 < p; ++b2) {
            RemainderVector c0{0, b1, b2, mod(-b1 - b2 + k, p)};
            std::vector<RemainderVector> row;
            for (int i = 0; i < p; ++i) row.push_back(add_mod(c0, scale_mod(critical, i, l), l));
            rows.push_back(std::move(row));
        }
    return from_rows(l, k, critical, std::move(rows));
}

ReducedClassTable ReducedClassTable::from_rows(int l, int k, RemainderVector critical,
                                               std::vector<std::vector<RemainderVector>> rows) {
    ReducedClassTable t;
    t.l_ = l;
    t.k_ = k;
    t.critical_ = critical;
    t.rows_ = std::move(rows);
    for (std::size_t r = 0; r < t.rows_.size(); ++r)
        for (std::size_t i = 0; i < t.rows_[r].size(); ++i)
            t.index_.emplace(t.rows_[r][i], Cell{r, static_cast<int>(i)});
    return t;
}

const RemainderVector& ReducedClassTable::at(std::size_t row, int column) const {
    require(row < rows_.size() && column >= 0 && static_cast<std::size_t>(column) < rows_[row].size(),
            "reduced class cell out of range");
    return rows_[row][static_cast<std::size_t>(column)];
}

std::optional<ReducedClassTable::Cell> ReducedClassTable::locate(const RemainderVector& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool validate_classification(const ReducedClassTable& table, int l) {
    const int p = divisor(l);
    // C2: exact cover of every remainder vector with sum = k mod (2l+1)
    std::map<RemainderVector, int> seen;
    for (const auto& row : table.rows())
        for (const auto& b : row) {
            for (int v : b)
                if (v < 0 || v >= p) return false;
            if (mod(b[0] + b[1] + b[2] + b[3] - table.k(), p) != 0) return false;
            if (++seen[b] > 1) return false;
        }
    if (seen.size() != static_cast<std::size_t>(p * p * p)) return false;

    // C1: no in-row difference is a remainder error pattern
    for (const auto& row : table.rows())
        for (std::size_t a = 0; a < row.size(); ++a)
            for (std::size_t b = 0; b < row.size(); ++b)
                if (a != b && is_remainder_error_pattern(sub_mod(row[a], row[b], l), l)) return false;
    return true;
}

ProbabilityVector second_layer_recover(const ProbabilityVector& y, const RemainderVector& b, int k, int l) {
    std::optional<ProbabilityVector> found;
    for (const auto& e : symbol_error_ball(y, k, l)) {
        const ProbabilityVector x = y + e;
        if (split(x, l).remainder != b) continue;
        if (found)
            fail(ErrorKind::decode_failure, "remainder " + show(b) + " is ambiguous around " + format_symbol(y));
        found = x;
    }
    if (!found)
        fail(ErrorKind::decode_failure,
             "no symbol with remainder " + show(b) + " within magnitude " + std::to_string(l) + " of " +
                 format_symbol(y));
    return *found;
}

}  // namespace lmpe
