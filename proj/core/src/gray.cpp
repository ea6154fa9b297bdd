#include "lmpe/gray.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "lmpe/bounds.hpp"
#include "lmpe/error.hpp"

namespace lmpe {

namespace {

std::uint64_t checked_power(std::uint32_t q, int g) {
    std::uint64_t v = 1;
    for (int i = 0; i < g; ++i) {
        if (v > (std::uint64_t{1} << 40) / q) fail(ErrorKind::invalid_argument, "q^g is too large");
        v *= q;
    }
    return v;
}

// Packs a symbol of resolution <= 2^16 into one integer.
std::uint64_t vector_key(const ProbabilityVector& x) {
    std::uint64_t key = 0;
    for (int v : x.values) key = (key << 16) | static_cast<std::uint16_t>(v);
    return key;
}

int digit_distance(std::uint64_t a, std::uint64_t b, std::uint32_t q, int g) {
    int d = 0;
    for (int i = 0; i < g; ++i) {
        if (a % q != b % q) ++d;
        a /= q;
        b /= q;
    }
    return d;
}

// Lexicographic rank of a symbol among all symbols of resolution k.
class AlphabetIndex {
public:
    explicit AlphabetIndex(int k) : k_(k), symbols_(enumerate_alphabet(k)) {
        for (std::size_t i = 0; i < symbols_.size(); ++i) rank_.emplace(vector_key(symbols_[i]), i);
    }

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] const ProbabilityVector& at(std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] std::size_t rank(const ProbabilityVector& x) const { return rank_.at(vector_key(x)); }
    [[nodiscard]] int k() const { return k_; }

private:
    int k_;
    std::vector<ProbabilityVector> symbols_;
    std::unordered_map<std::uint64_t, std::size_t> rank_;
};

// Nonzero 2l-ball members of every symbol, as alphabet ranks, in delta order.
std::vector<std::vector<std::size_t>> neighbour_lists(const AlphabetIndex& alphabet, int radius) {
    std::vector<std::vector<std::size_t>> out(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (const auto& e : symbol_error_ball(alphabet.at(i), alphabet.k(), radius))
            if (!e.is_zero()) out[i].push_back(alphabet.rank(alphabet.at(i) + e));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GrayMapping

GrayMapping::GrayMapping(GrayParams params) : params_(params) {
    require(params.k >= 0 && params.l >= 0 && params.g >= 1 && params.q >= 2, "invalid Gray mapping parameters");
    require(params.k < (1 << 16), "resolution too large for a Gray mapping");
    word_count_ = checked_power(params.q, params.g);
}

std::uint64_t GrayMapping::word_index(const GrayWord& word) const {
    require(word.size() == static_cast<std::size_t>(params_.g), "Gray word has the wrong length");
    std::uint64_t idx = 0;
    for (auto d : word) {
        require(d.value < params_.q, "Gray digit outside the field");
        idx = idx * params_.q + d.value;
    }
    return idx;
}

GrayWord GrayMapping::word_at(std::uint64_t index) const {
    require(index < word_count_, "Gray word index out of range");
    GrayWord w(static_cast<std::size_t>(params_.g));
    for (std::size_t i = w.size(); i-- > 0;) {
        w[i] = FieldElement{static_cast<std::uint32_t>(index % params_.q)};
        index /= params_.q;
    }
    return w;
}

void GrayMapping::insert(GrayWord word, const ProbabilityVector& x) {
    require(x.valid_for(params_.k), "Gray image " + format_symbol(x) + " has the wrong resolution");
    const auto idx = word_index(word);
    by_word_.try_emplace(idx, pairs_.size());
    by_vector_.try_emplace(vector_key(x), pairs_.size());
    pairs_.push_back({std::move(word), x});
}

std::optional<ProbabilityVector> GrayMapping::image(const GrayWord& word) const {
    auto it = by_word_.find(word_index(word));
    if (it == by_word_.end()) return std::nullopt;
    return pairs_[it->second].vector;
}

std::optional<GrayWord> GrayMapping::preimage(const ProbabilityVector& x) const {
    if (!x.valid_for(params_.k)) return std::nullopt;
    auto it = by_vector_.find(vector_key(x));
    if (it == by_vector_.end()) return std::nullopt;
    return pairs_[it->second].word;
}

// ---------------------------------------------------------------------------
// Search

std::optional<GrayMapping> gray_search(int k, int l, std::uint32_t q, int g, const GraySearchOptions& options) {
    require(k >= 0 && l >= 0 && g >= 1 && q >= 2, "invalid Gray search parameters");
    const std::uint64_t words = checked_power(q, g);
    if (words > alphabet_size(k))
        fail(ErrorKind::invalid_argument, "q^g = " + std::to_string(words) + " exceeds the alphabet size C(k+3,3) = " +
                                              std::to_string(alphabet_size(k)));

    const AlphabetIndex alphabet(k);
    const int radius = options.ball_radius.value_or(2 * l);
    require(radius >= 0, "ball radius must be non-negative");
    const auto neighbours = neighbour_lists(alphabet, radius);
    constexpr std::uint64_t kNone = ~std::uint64_t{0};

    std::vector<std::uint64_t> word_of(alphabet.size(), kNone);  // mapped word per symbol
    std::vector<bool> visited(alphabet.size(), false);
    std::vector<bool> used(words, false);
    std::vector<std::size_t> order;  // M, as symbol ranks
    std::size_t visited_count = 0;
    std::size_t next_unvisited = 0;
    std::uint64_t next_unused = 0;

    auto admissible = [&](std::size_t s) { return !options.admissible || options.admissible(alphabet.at(s)); };
    auto visit = [&](std::size_t s) {
        if (!visited[s]) {
            visited[s] = true;
            ++visited_count;
        }
    };
    auto assign = [&](std::size_t s, std::uint64_t w) {
        word_of[s] = w;
        used[w] = true;
        order.push_back(s);
    };

    // First unused word at distance exactly 1 from every mapped neighbour of s.
    auto pick_word = [&](std::size_t s) -> std::uint64_t {
        std::vector<std::uint64_t> mapped;
        for (auto nb : neighbours[s])
            if (word_of[nb] != kNone) mapped.push_back(word_of[nb]);
        if (mapped.empty()) {
            while (next_unused < words && used[next_unused]) ++next_unused;
            return next_unused < words ? next_unused : kNone;
        }
        // candidates: distance-1 neighbours of the first mapped word, ascending
        std::vector<std::uint64_t> candidates;
        std::uint64_t place = 1;
        for (int pos = 0; pos < g; ++pos, place *= q) {
            const std::uint64_t digit = (mapped.front() / place) % q;
            for (std::uint64_t v = 0; v < q; ++v)
                if (v != digit) candidates.push_back(mapped.front() + (v - digit) * place);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto c : candidates) {
            if (used[c]) continue;
            bool ok = true;
            for (auto m : mapped)
                if (digit_distance(c, m, q, g) != 1) {
                    ok = false;
                    break;
                }
            if (ok) return c;
        }
        return kNone;
    };

    std::size_t i = 0;
    while (order.size() < words) {
        if (i == order.size()) {
            // start a new component from the first unvisited admissible symbol
            while (next_unvisited < alphabet.size() && (visited[next_unvisited] || !admissible(next_unvisited))) {
                visit(next_unvisited);
                ++next_unvisited;
            }
            if (next_unvisited == alphabet.size()) return std::nullopt;
            const std::size_t seed = next_unvisited;
            const std::uint64_t w = pick_word(seed);
            if (w == kNone) return std::nullopt;
            assign(seed, w);
            visit(seed);
        }
        const std::size_t center = order[i];
        for (auto b : neighbours[center]) {
            if (order.size() == words) break;
            if (!visited[b] && admissible(b)) {
                const std::uint64_t w = pick_word(b);
                if (w != kNone) assign(b, w);
            }
            visit(b);
        }
        ++i;
    }

    GrayMapping mapping({k, l, q, g});
    for (auto s : order) mapping.insert(mapping.word_at(word_of[s]), alphabet.at(s));
    return mapping;
}

bool gray_validate(const GrayMapping& mapping, std::optional<int> radius) {
    const auto& p = mapping.params();
    const int reach = radius.value_or(2 * p.l);
    if (!mapping.complete()) return false;
    std::unordered_map<std::uint64_t, std::uint64_t> word_of;  // vector key -> word index
    std::vector<bool> seen(mapping.word_count(), false);
    for (const auto& pair : mapping.pairs()) {
        if (!pair.vector.valid_for(p.k)) return false;
        const auto idx = mapping.word_index(pair.word);
        if (seen[idx]) return false;
        seen[idx] = true;
        if (!word_of.emplace(vector_key(pair.vector), idx).second) return false;
    }
    for (const auto& pair : mapping.pairs()) {
        const auto idx = word_of.at(vector_key(pair.vector));
        for (const auto& e : symbol_error_ball(pair.vector, p.k, reach)) {
            if (e.is_zero()) continue;
            auto it = word_of.find(vector_key(pair.vector + e));
            if (it != word_of.end() && digit_distance(idx, it->second, p.q, p.g) != 1) return false;
        }
    }
    return true;
}

GrayMapping gray_extend(const GrayMapping& mapping, int k2) {
    const auto& p = mapping.params();
    if (k2 <= p.k)
        fail(ErrorKind::invalid_argument,
             "extension needs k2 > " + std::to_string(p.k) + " (got " + std::to_string(k2) + ")");
    GrayMapping out({k2, p.l, p.q, p.g});
    for (const auto& pair : mapping.pairs()) {
        ProbabilityVector x = pair.vector;
        x.values[kLetters - 1] += k2 - p.k;
        out.insert(pair.word, x);
    }
    return out;
}

int gray_existence_k(int l, std::uint32_t q, int g) {
    require(l >= 0 && g >= 1 && q >= 2, "invalid parameters");
    BigCount need = e_count(2 * l);
    for (int i = 0; i < g; ++i) need *= q;
    int k = 0;
    while (compositions4(k) < need) ++k;
    return k;
}

double Ratio::value() const {
    return numerator.convert_to<double>() / denominator.convert_to<double>();
}

Ratio gray_efficiency(std::uint32_t q, int g, int k) {
    require(q >= 2 && g >= 1 && k >= 0, "invalid parameters");
    BigCount num = 1;
    for (int i = 0; i < g; ++i) num *= q;
    BigCount den = compositions4(k);
    const BigCount d = boost::multiprecision::gcd(num, den);
    return {num / d, den / d};
}

void write_gray_mapping(std::ostream& os, const GrayMapping& mapping) {
    const auto& p = mapping.params();
    os << "# gray k=" << p.k << " l=" << p.l << " q=" << p.q << " g=" << p.g << '\n';
    for (const auto& pair : mapping.pairs()) {
        for (std::size_t i = 0; i < pair.word.size(); ++i) os << (i ? " " : "") << pair.word[i].value;
        os << " -> " << format_symbol(pair.vector) << '\n';
    }
}

GrayMapping read_gray_mapping(std::istream& is) {
    std::string line;
    std::optional<GrayMapping> mapping;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            GrayParams p;
            const int got = std::sscanf(line.c_str(), "# gray k=%d l=%d q=%u g=%d", &p.k, &p.l, &p.q, &p.g);
            if (got == 4) mapping.emplace(p);
            continue;
        }
        if (!mapping) fail(ErrorKind::data_format, "Gray mapping file lacks a '# gray k= l= q= g=' header");
        const auto arrow = line.find("->");
        if (arrow == std::string::npos)
            fail(ErrorKind::data_format, "line " + std::to_string(line_no) + ": expected 'digits -> symbol'");
        std::istringstream digits(line.substr(0, arrow));
        GrayWord word;
        long long d = 0;
        while (digits >> d) {
            if (d < 0 || d >= static_cast<long long>(mapping->params().q))
                fail(ErrorKind::data_format, "line " + std::to_string(line_no) + ": digit out of range");
            word.push_back(FieldElement{static_cast<std::uint32_t>(d)});
        }
        if (!digits.eof() || word.size() != static_cast<std::size_t>(mapping->params().g))
            fail(ErrorKind::data_format, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(mapping->params().g) + " digits");
        std::string sym = line.substr(arrow + 2);
        sym.erase(0, sym.find_first_not_of(' '));
        while (!sym.empty() && sym.back() == ' ') sym.pop_back();
        mapping->insert(std::move(word), parse_symbol(sym, mapping->params().k));
    }
    if (!mapping) fail(ErrorKind::data_format, "empty Gray mapping file");
    return std::move(*mapping);
}

}  // namespace lmpe
