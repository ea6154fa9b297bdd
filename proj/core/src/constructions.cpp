#include "lmpe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lmpe/bounds.hpp"
#include "lmpe/error.hpp"

namespace lmpe {

namespace {

// Weak compositions of n into `parts` parts: C(n+parts-1, parts-1).
std::uint64_t compositions(int n, int parts) {
    if (n < 0) return 0;
    if (parts <= 1) return 1;
    std::uint64_t c = 1;
    for (int j = 1; j < parts; ++j) c = c * static_cast<std::uint64_t>(n + j) / static_cast<std::uint64_t>(j);
    return c;
}

std::string show(const Quad& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
           std::to_string(v[3]) + ")";
}

long double log2_symbols_with_class(const RemainderClassMap& map, int k, int l) {
    const int p = divisor(l);
    long double count = 0;
    for (const auto& [b, e] : map.entries()) {
        const int sb = b[0] + b[1] + b[2] + b[3];
        if (sb > k) continue;
        count += static_cast<long double>(compositions((k - sb) / p, 4));
    }
    return count > 0 ? std::log2(count) : 0.0L;
}

Field field_of_order(std::uint32_t q) {
    const auto pp = as_prime_power(q);
    require(pp.has_value(), "field order " + std::to_string(q) + " is not a prime power");
    return Field::make(pp->p, pp->m);
}

RemainderClassMap with_overrides(RemainderClassMap map, const LmpeCodeSpec& spec) {
    for (const auto& [b, e] : spec.map_overrides) map.reassign(b, FieldElement{e});
    return map;
}

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::remainder: return "remainder";
        case Variant::reduced: return "reduced";
        case Variant::improved_hamming: return "improved_hamming";
        case Variant::systematic: return "systematic";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (auto v : {Variant::remainder, Variant::reduced, Variant::improved_hamming, Variant::systematic})
        if (to_string(v) == name) return v;
    fail(ErrorKind::invalid_argument, "unknown variant '" + std::string(name) + "'");
}

std::uint64_t quotient_rank(const QuotientVector& a) {
    for (int v : a) require(v >= 0, "quotient vector entries must be non-negative");
    int rest = a[0] + a[1] + a[2] + a[3];
    std::uint64_t rank = 0;
    for (int j = 0; j < kLetters - 1; ++j) {
        for (int v = 0; v < a[static_cast<std::size_t>(j)]; ++v) rank += compositions(rest - v, kLetters - 1 - j);
        rest -= a[static_cast<std::size_t>(j)];
    }
    return rank;
}

QuotientVector quotient_unrank(std::uint64_t index, int target_sum) {
    require(target_sum >= 0, "target sum must be non-negative");
    require(index < compositions(target_sum, kLetters),
            "index " + std::to_string(index) + " exceeds the compositions of " + std::to_string(target_sum));
    QuotientVector a{};
    int rest = target_sum;
    for (int j = 0; j < kLetters - 1; ++j) {
        int v = 0;
        while (true) {
            const auto block = compositions(rest - v, kLetters - 1 - j);
            if (index < block) break;
            index -= block;
            ++v;
        }
        a[static_cast<std::size_t>(j)] = v;
        rest -= v;
    }
    a[kLetters - 1] = rest;
    return a;
}

LmpeCode LmpeCode::build(const LmpeCodeSpec& spec) {
    require(spec.l >= 1, "l must be at least 1");
    require(spec.t >= 1, "t must be at least 1");
    require(spec.k >= 1, "k must be at least 1");
    LmpeCode code;
    code.spec_ = spec;
    const auto qc = quotient_counts(spec.k, spec.l);
    code.s_min_ = qc.s_min;
    code.quotient_size_ = compositions(qc.s_min, kLetters);
    switch (spec.variant) {
        case Variant::remainder:
        case Variant::improved_hamming: code.build_class_variant(); break;
        case Variant::reduced: code.build_reduced(); break;
        case Variant::systematic: code.build_systematic(); break;
    }
    return code;
}

void LmpeCode::build_class_variant() {
    const int l = spec_.l, k = spec_.k, p = divisor(l);
    const auto full = static_cast<std::uint32_t>(p * p * p);
    if (spec_.variant == Variant::improved_hamming) {
        require(spec_.t == 1, "the improved Hamming code corrects a single error; t must be 1");
        require(is_prime(p), "the improved Hamming code needs 2l+1 prime");
        require(!spec_.q || *spec_.q == full, "the improved Hamming code works over GF((2l+1)^3)");
        require(spec_.map_overrides.empty(), "the improved Hamming class map is linear and cannot be overridden");
        const Field field = Field::make(p, 3);
        auto map = RemainderClassMap::polynomial(field, l, k);
        Symbols errors;
        for (const auto& d : remainder_error_patterns(l)) {
            const int coeffs[3] = {d[0], d[1], d[2]};
            errors.push_back(field.from_coefficients(coeffs));
        }
        std::sort(errors.begin(), errors.end());
        errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
        layer1_ = std::make_shared<BlockCode>(BlockCode::improved_hamming(field, spec_.r.value_or(2), errors));
        classes_ = std::make_shared<RemainderClassMap>(std::move(map));
    } else {
        const std::uint32_t q = spec_.q.value_or(largest_prime_power_at_most(full).q);
        const Field field = field_of_order(q);
        classes_ = std::make_shared<RemainderClassMap>(with_overrides(RemainderClassMap::canonical(l, k, q), spec_));
        if (spec_.w) {
            layer1_ = std::make_shared<BlockCode>(BlockCode::bch(field, *spec_.w, spec_.t, spec_.n));
        } else {
            require(spec_.t == 1, "a Hamming first layer corrects a single error; set w for a BCH code");
            layer1_ = std::make_shared<BlockCode>(BlockCode::hamming(field, spec_.r.value_or(2)));
        }
    }
    if (spec_.n)
        require(*spec_.n == layer1_->length(), "code length " + std::to_string(*spec_.n) + " does not match the " +
                                                   layer1_->describe());
    length_ = layer1_->length();
    info_ = layer1_->dimension();
    for (std::uint32_t v = 0; v < layer1_->field().order(); ++v)
        require(classes_->covers(FieldElement{v}), "field element " + std::to_string(v) +
                                                       " has no remainder vector; parity classes could not be realised");
    log2_info_alphabet_ = log2_symbols_with_class(*classes_, k, l);
}

void LmpeCode::build_reduced() {
    const int l = spec_.l, k = spec_.k, p = divisor(l);
    const auto pp = as_prime_power(static_cast<std::uint64_t>(p));
    require(pp.has_value(), "the reduced construction needs 2l+1 to be a prime power");
    const Field rows = Field::make(pp->p, 2 * pp->m);
    const Field cols = Field::make(pp->p, pp->m);
    const int w = spec_.w.value_or(2);
    const int w2 = spec_.w2.value_or(2 * w);
    layer1_ = std::make_shared<BlockCode>(BlockCode::bch_designed(rows, w, 2 * spec_.t + 1, spec_.n));
    layer2_ = std::make_shared<BlockCode>(BlockCode::bch_designed(cols, w2, spec_.t + 1, spec_.n));
    require(layer1_->length() == layer2_->length(), "the two layers of the reduced construction differ in length");
    require(layer1_->redundancy() == layer2_->redundancy(),
            "the two layers need the same redundancy (" + std::to_string(layer1_->redundancy()) + " vs " +
                std::to_string(layer2_->redundancy()) + "); choose w2 accordingly");
    RemainderVector critical{};
    if (spec_.critical) {
        critical = *spec_.critical;
    } else {
        const auto found = find_critical_vectors(l);
        if (found.empty()) fail(ErrorKind::search_failure, "no critical vector exists for l = " + std::to_string(l));
        critical = found.front();
    }
    table_ = std::make_shared<ReducedClassTable>(ReducedClassTable::build(l, k, critical));
    require(table_->row_count() == rows.order(), "reduced table has an unexpected number of rows");
    length_ = layer1_->length();
    info_ = layer1_->dimension();
    log2_info_alphabet_ = std::log2(static_cast<long double>(alphabet_size(k)));
}

void LmpeCode::build_systematic() {
    const int l = spec_.l, k = spec_.k, p = divisor(l);
    require(spec_.m.has_value() && *spec_.m >= 1, "the systematic variant needs m >= 1 information symbols");
    require(spec_.g >= 1, "g must be at least 1");
    const auto full = static_cast<std::uint32_t>(p * p * p);
    const std::uint32_t q = spec_.q.value_or(largest_prime_power_at_most(full).q);
    const Field field = field_of_order(q);
    classes_ = std::make_shared<RemainderClassMap>(with_overrides(RemainderClassMap::canonical(l, k, q), spec_));
    const int w = spec_.w.value_or(2);
    const auto natural = BlockCode::bch(field, w, spec_.t);
    const std::size_t m = *spec_.m;
    require(m + natural.redundancy() <= natural.length(),
            "m = " + std::to_string(m) + " does not fit in " + natural.describe());
    layer1_ = std::make_shared<BlockCode>(BlockCode::bch(field, w, spec_.t, m + natural.redundancy()));
    const std::size_t nominal = spec_.n.value_or(m + layer1_->redundancy());
    require(nominal >= m + layer1_->redundancy(), "n - m = " + std::to_string(nominal - std::min(nominal, m)) +
                                                      " is smaller than the " +
                                                      std::to_string(layer1_->redundancy()) + " BCH parities");
    const auto g = static_cast<std::size_t>(spec_.g);
    parity_columns_ = (nominal - m + g - 1) / g;
    length_ = m + parity_columns_;
    info_ = m;

    const int radius = spec_.gray_radius.value_or(2 * l);
    require(radius >= 1 && radius <= 2 * l, "gray_radius must lie in [1, 2l]");
    std::shared_ptr<const GrayMapping> mapping = spec_.gray;
    if (mapping) {
        const auto& gp = mapping->params();
        require(gp.l == l && gp.q == q && gp.g == spec_.g, "the supplied Gray mapping has different (l, q, g)");
        if (gp.k != k) {
            require(gp.k < k, "the supplied Gray mapping has a larger resolution than the code");
            mapping = std::make_shared<GrayMapping>(gray_extend(*mapping, k));
        }
    } else {
        GraySearchOptions options;
        options.ball_radius = radius;
        auto found = gray_search(k, l, q, spec_.g, options);
        if (!found)
            fail(ErrorKind::search_failure, "no Gray mapping found for k = " + std::to_string(k) + ", l = " +
                                                std::to_string(l) + ", q = " + std::to_string(q) +
                                                ", g = " + std::to_string(spec_.g));
        mapping = std::make_shared<GrayMapping>(std::move(*found));
    }
    // The parity-column decoder needs the distance-1 property for any two
    // vectors within l of the same received vector.  Full 2l validity gives
    // that for every g; l-validity suffices when a column has at most two digits.
    const bool usable = gray_validate(*mapping) || (spec_.g <= 2 && gray_validate(*mapping, l));
    if (!usable) fail(ErrorKind::invalid_argument, "the Gray mapping does not satisfy the distance-1 condition");
    gray_ = std::move(mapping);
    log2_info_alphabet_ = log2_symbols_with_class(*classes_, k, l);
}

std::size_t LmpeCode::quotient_slots() const noexcept {
    return spec_.variant == Variant::systematic ? 0 : length_ - info_;
}

std::vector<std::size_t> LmpeCode::info_positions() const {
    std::vector<std::size_t> out(info_);
    for (std::size_t i = 0; i < info_; ++i) out[i] = i;
    return out;
}

std::vector<std::size_t> LmpeCode::parity_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = info_; i < length_; ++i) out.push_back(i);
    return out;
}

double LmpeCode::rate() const {
    const long double per_symbol = std::log2(static_cast<long double>(alphabet_size(spec_.k)));
    const long double n = static_cast<long double>(length_);
    long double bits = static_cast<long double>(info_) * log2_info_alphabet_;
    if (spec_.variant != Variant::systematic)
        bits += static_cast<long double>(length_ - info_) * std::log2(static_cast<long double>(quotient_size_));
    return static_cast<double>(bits / (n * per_symbol));
}

ProbabilityVector LmpeCode::parity_symbol(const RemainderVector& b, std::uint64_t index) const {
    const int sb = b[0] + b[1] + b[2] + b[3];
    const int p = divisor(spec_.l);
    require(sb <= spec_.k && (spec_.k - sb) % p == 0, "parity remainder " + show(b) + " is not realisable");
    RemainderDecomposition d;
    d.remainder = b;
    d.quotient = quotient_unrank(index, (spec_.k - sb) / p);
    return combine(d, spec_.l, spec_.k);
}

void LmpeCode::check_message(const Message& msg) const {
    require(msg.info_symbols.size() == info_, "message needs " + std::to_string(info_) + " information symbols, got " +
                                                  std::to_string(msg.info_symbols.size()));
    require(msg.parity_quotient_indices.size() == quotient_slots(),
            "message needs " + std::to_string(quotient_slots()) + " parity quotient indices, got " +
                std::to_string(msg.parity_quotient_indices.size()));
    for (const auto& x : msg.info_symbols)
        require(x.valid_for(spec_.k), "information symbol " + format_symbol(x) + " is not of resolution " +
                                          std::to_string(spec_.k));
    for (auto idx : msg.parity_quotient_indices)
        require(idx < quotient_size_, "parity quotient index " + std::to_string(idx) + " is not below " +
                                          std::to_string(quotient_size_));
}

void LmpeCode::check_received(const Word& received) const {
    if (received.size() != length_)
        fail(ErrorKind::data_format,
             "received word has " + std::to_string(received.size()) + " symbols, expected " + std::to_string(length_));
    for (const auto& y : received)
        if (!y.valid_for(spec_.k))
            fail(ErrorKind::data_format,
                 "received symbol " + format_symbol(y) + " is not of resolution " + std::to_string(spec_.k));
}

Word LmpeCode::encode(const Message& msg) const {
    check_message(msg);
    switch (spec_.variant) {
        case Variant::remainder:
        case Variant::improved_hamming: return encode_classes(msg);
        case Variant::reduced: return encode_reduced(msg);
        case Variant::systematic: return encode_systematic(msg);
    }
    return {};
}

Word LmpeCode::encode_classes(const Message& msg) const {
    Symbols info;
    for (const auto& x : msg.info_symbols) {
        const auto e = classes_->class_index(split(x, spec_.l).remainder);
        require(e.has_value(), "information symbol " + format_symbol(x) + " has no remainder class");
        info.push_back(*e);
    }
    const Symbols cw = layer1_->encode(info);
    Word out = msg.info_symbols;
    for (std::size_t j = 0; j < length_ - info_; ++j)
        out.push_back(parity_symbol(classes_->remainder_of(cw[info_ + j]), msg.parity_quotient_indices[j]));
    return out;
}

Word LmpeCode::encode_reduced(const Message& msg) const {
    Symbols rows, cols;
    for (const auto& x : msg.info_symbols) {
        const auto cell = table_->locate(split(x, spec_.l).remainder);
        require(cell.has_value(), "information symbol " + format_symbol(x) + " is not in the reduced table");
        rows.push_back(FieldElement{static_cast<std::uint32_t>(cell->row)});
        cols.push_back(FieldElement{static_cast<std::uint32_t>(cell->column)});
    }
    const Symbols c1 = layer1_->encode(rows);
    const Symbols c2 = layer2_->encode(cols);
    Word out = msg.info_symbols;
    for (std::size_t j = 0; j < length_ - info_; ++j) {
        const auto& b = table_->at(c1[info_ + j].value, static_cast<int>(c2[info_ + j].value));
        out.push_back(parity_symbol(b, msg.parity_quotient_indices[j]));
    }
    return out;
}

Word LmpeCode::encode_systematic(const Message& msg) const {
    Symbols info;
    for (const auto& x : msg.info_symbols) {
        const auto e = classes_->class_index(split(x, spec_.l).remainder);
        require(e.has_value(), "information symbol " + format_symbol(x) + " has no remainder class");
        info.push_back(*e);
    }
    const Symbols cw = layer1_->encode(info);
    const auto g = static_cast<std::size_t>(spec_.g);
    Symbols digits(cw.begin() + static_cast<std::ptrdiff_t>(info_), cw.end());
    digits.resize(parity_columns_ * g, Field::zero());
    Word out = msg.info_symbols;
    for (std::size_t c = 0; c < parity_columns_; ++c) {
        GrayWord word(digits.begin() + static_cast<std::ptrdiff_t>(c * g),
                      digits.begin() + static_cast<std::ptrdiff_t>((c + 1) * g));
        const auto x = gray_->image(word);
        require(x.has_value(), "Gray mapping has no image for a parity column");
        out.push_back(*x);
    }
    return out;
}

Message LmpeCode::extract(const Word& x) const {
    Message msg;
    msg.info_symbols.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(info_));
    for (std::size_t i = info_; i < info_ + quotient_slots(); ++i) {
        const auto idx = quotient_rank(split(x[i], spec_.l).quotient);
        if (idx >= quotient_size_)
            fail(ErrorKind::decode_failure,
                 "parity symbol " + std::to_string(i) + " carries a quotient outside the message space");
        msg.parity_quotient_indices.push_back(idx);
    }
    return msg;
}

DecodeReport LmpeCode::finish(const Word& received, Word x, std::size_t erasures) const {
    DecodeReport report;
    report.message = extract(x);
    // Re-encoding rejects anything the layers accepted but which is not a codeword.
    Word again;
    try {
        again = encode(report.message);
    } catch (const Error& e) {
        fail(ErrorKind::decode_failure, std::string("decoded message is not encodable: ") + e.what());
    }
    if (again != x) fail(ErrorKind::decode_failure, "decoded word is not a codeword");
    for (std::size_t i = 0; i < received.size(); ++i)
        if (received[i] != x[i]) report.corrected.push_back(i);
    if (report.corrected.size() > static_cast<std::size_t>(spec_.t))
        fail(ErrorKind::decode_failure, "nearest codeword differs in " + std::to_string(report.corrected.size()) +
                                            " symbols, more than t = " + std::to_string(spec_.t));
    report.codeword = std::move(x);
    report.erasures = erasures;
    return report;
}

DecodeReport LmpeCode::decode(const Word& received) const {
    check_received(received);
    switch (spec_.variant) {
        case Variant::remainder:
        case Variant::improved_hamming: return decode_classes(received);
        case Variant::reduced: return decode_reduced(received);
        case Variant::systematic: return decode_systematic(received);
    }
    return {};
}

DecodeReport LmpeCode::decode_classes(const Word& received) const {
    Symbols classes(length_, Field::zero());
    std::vector<std::size_t> erased;
    for (std::size_t i = 0; i < length_; ++i) {
        const auto e = classes_->class_index(split(received[i], spec_.l).remainder);
        if (e)
            classes[i] = *e;
        else
            erased.push_back(i);
    }
    const auto res = layer1_->decode(classes, erased);
    if (!res.ok()) fail(ErrorKind::decode_failure, "first layer: " + res.diagnostic);
    Word x(length_);
    for (std::size_t i = 0; i < length_; ++i)
        x[i] = second_layer_recover(received[i], classes_->remainder_of(res.codeword[i]), spec_.k, spec_.l);
    return finish(received, std::move(x), erased.size());
}

DecodeReport LmpeCode::decode_reduced(const Word& received) const {
    Symbols rows(length_), cols(length_);
    for (std::size_t i = 0; i < length_; ++i) {
        const auto cell = table_->locate(split(received[i], spec_.l).remainder);
        if (!cell) fail(ErrorKind::data_format, "received symbol " + format_symbol(received[i]) + " has no reduced class");
        rows[i] = FieldElement{static_cast<std::uint32_t>(cell->row)};
        cols[i] = FieldElement{static_cast<std::uint32_t>(cell->column)};
    }
    const auto r1 = layer1_->decode(rows);
    if (!r1.ok()) fail(ErrorKind::decode_failure, "row layer: " + r1.diagnostic);
    // Within a row no two vectors differ by a remainder error pattern, so the
    // column can only be wrong where the row was.
    std::vector<std::size_t> suspects;
    for (std::size_t i = 0; i < length_; ++i)
        if (r1.codeword[i] != rows[i]) suspects.push_back(i);
    const auto r2 = layer2_->decode(cols, suspects);
    if (!r2.ok()) fail(ErrorKind::decode_failure, "column layer: " + r2.diagnostic);
    Word x(length_);
    for (std::size_t i = 0; i < length_; ++i) {
        const auto& b = table_->at(r1.codeword[i].value, static_cast<int>(r2.codeword[i].value));
        x[i] = second_layer_recover(received[i], b, spec_.k, spec_.l);
    }
    return finish(received, std::move(x), suspects.size());
}

DecodeReport LmpeCode::decode_systematic(const Word& received) const {
    const auto g = static_cast<std::size_t>(spec_.g);
    const std::size_t r = layer1_->redundancy();
    Symbols word(info_ + r, Field::zero());
    std::vector<std::size_t> erased;
    for (std::size_t i = 0; i < info_; ++i) {
        const auto e = classes_->class_index(split(received[i], spec_.l).remainder);
        if (e)
            word[i] = *e;
        else
            erased.push_back(i);
    }
    for (std::size_t c = 0; c < parity_columns_; ++c) {
        const auto& y = received[info_ + c];
        GrayWord digits(g, Field::zero());
        std::vector<bool> unknown(g, false);
        if (auto exact = gray_->preimage(y)) {
            digits = *exact;
        } else {
            std::vector<GrayWord> candidates;
            for (const auto& e : symbol_error_ball(y, spec_.k, spec_.l)) {
                if (e.is_zero()) continue;
                if (auto w = gray_->preimage(y + e)) candidates.push_back(std::move(*w));
            }
            if (candidates.empty()) {
                unknown.assign(g, true);
            } else {
                digits = candidates.front();
                std::size_t disagree = 0;
                for (std::size_t d = 0; d < g; ++d)
                    for (const auto& w : candidates)
                        if (w[d] != digits[d]) {
                            unknown[d] = true;
                            ++disagree;
                            break;
                        }
                // Candidates are pairwise Gray neighbours: they share all but
                // one digit.  With more spread than two digits any candidate is
                // as good as another.
                if (disagree > 2) unknown.assign(g, false);
            }
        }
        for (std::size_t d = 0; d < g; ++d) {
            const std::size_t pos = c * g + d;
            if (pos >= r) continue;
            word[info_ + pos] = digits[d];
            if (unknown[d]) erased.push_back(info_ + pos);
        }
    }
    const auto res = layer1_->decode(word, erased);
    if (!res.ok()) fail(ErrorKind::decode_failure, "first layer: " + res.diagnostic);
    Word x = received;
    for (std::size_t i = 0; i < info_; ++i)
        x[i] = second_layer_recover(received[i], classes_->remainder_of(res.codeword[i]), spec_.k, spec_.l);
    Message msg;
    msg.info_symbols.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(info_));
    Word again = encode(msg);
    return finish(received, std::move(again), erased.size());
}

Message LmpeCode::random_message(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const auto total = alphabet_size(spec_.k);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    Message msg;
    while (msg.info_symbols.size() < info_) {
        const ProbabilityVector x{quotient_unrank(pick(rng), spec_.k)};
        if (spec_.variant != Variant::reduced && !classes_->class_index(split(x, spec_.l).remainder)) continue;
        msg.info_symbols.push_back(x);
    }
    std::uniform_int_distribution<std::uint64_t> index(0, quotient_size_ - 1);
    for (std::size_t j = 0; j < quotient_slots(); ++j) msg.parity_quotient_indices.push_back(index(rng));
    return msg;
}

std::string LmpeCode::describe() const {
    std::ostringstream os;
    os << to_string(spec_.variant) << " LMPE code: k=" << spec_.k << " l=" << spec_.l << " t=" << spec_.t
       << " n=" << length_ << " info=" << info_ << " s_min=" << s_min_ << " quotient_messages=" << quotient_size_;
    if (spec_.variant == Variant::systematic) os << " g=" << spec_.g << " parity_columns=" << parity_columns_;
    os << " rate=" << rate() << "\n  layer 1: " << layer1_->describe();
    if (layer2_) os << "\n  layer 2: " << layer2_->describe();
    if (table_) os << "\n  critical vector: " << show(table_->critical());
    if (gray_) os << "\n  Gray mapping: " << gray_->size() << " words at k=" << gray_->params().k;
    return os.str();
}

std::string format_message(const Message& msg) {
    std::string out = format_word(msg.info_symbols);
    if (!msg.parity_quotient_indices.empty()) {
        out += '|';
        for (std::size_t i = 0; i < msg.parity_quotient_indices.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(msg.parity_quotient_indices[i]);
        }
    }
    return out;
}

Message parse_message(std::string_view line, int k) {
    Message msg;
    const auto bar = line.find('|');
    msg.info_symbols = parse_word(line.substr(0, bar), k);
    if (bar == std::string_view::npos) return msg;
    std::string_view rest = line.substr(bar + 1);
    if (rest.empty()) fail(ErrorKind::data_format, "empty parity quotient index list after '|'");
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos || item.size() > 19)
            fail(ErrorKind::data_format, "malformed parity quotient index '" + std::string(item) + "'");
        msg.parity_quotient_indices.push_back(std::stoull(std::string(item)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) fail(ErrorKind::data_format, "trailing comma in parity quotient indices");
    }
    return msg;
}

}  // namespace lmpe
