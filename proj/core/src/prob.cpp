#include "lmpe/prob.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "lmpe/error.hpp"

namespace lmpe {

bool ProbabilityVector::valid_for(int k) const noexcept {
    for (int v : values)
        if (v < 0 || v > k) return false;
    return sum() == k;
}

int SymbolError::magnitude() const noexcept {
    int up = 0;
    for (int d : deltas)
        if (d > 0) up += d;
    return up;
}

ProbabilityVector operator+(const ProbabilityVector& x, const SymbolError& e) {
    ProbabilityVector y;
    for (int j = 0; j < kLetters; ++j) y.values[j] = x.values[j] + e.deltas[j];
    return y;
}

SymbolError operator-(const ProbabilityVector& y, const ProbabilityVector& x) {
    SymbolError e;
    for (int j = 0; j < kLetters; ++j) e.deltas[j] = y.values[j] - x.values[j];
    return e;
}

std::uint64_t alphabet_size(int k) {
    if (k < 0) return 0;
    const auto n = static_cast<std::uint64_t>(k);
    return (n + 3) * (n + 2) * (n + 1) / 6;
}

std::vector<ProbabilityVector> enumerate_alphabet(int k) {
    require(k >= 0, "resolution must be non-negative");
    std::vector<ProbabilityVector> out;
    out.reserve(alphabet_size(k));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
            for (int c = 0; a + b + c <= k; ++c) out.push_back({{a, b, c, k - a - b - c}});
    return out;
}

bool lmpe_is_valid(const SymbolError& e, int l) {
    int sum = 0, abs_sum = 0;
    for (int d : e.deltas) {
        sum += d;
        abs_sum += std::abs(d);
    }
    return sum == 0 && abs_sum <= 2 * l;
}

std::vector<SymbolError> symbol_error_ball(const ProbabilityVector& x, int k, int l) {
    require(l >= 0, "error magnitude must be non-negative");
    require(x.valid_for(k), "symbol is not a probability vector of resolution " + std::to_string(k));
    std::vector<SymbolError> ball;
    for (int e0 = -l; e0 <= l; ++e0)
        for (int e1 = -l; e1 <= l; ++e1)
            for (int e2 = -l; e2 <= l; ++e2) {
                const SymbolError e{{e0, e1, e2, -(e0 + e1 + e2)}};
                if (!lmpe_is_valid(e, l)) continue;
                if ((x + e).valid_for(k)) ball.push_back(e);
            }
    return ball;
}

BigCount word_error_ball_size(const Word& x, int k, int l, int t) {
    require(t >= 0, "t must be non-negative");
    const auto n = x.size();
    require(static_cast<double>(n) * static_cast<double>(t) <= 1e9,
            "word error ball size guard exceeded");
    const auto tt = std::min<std::size_t>(static_cast<std::size_t>(t), n);
    // ways[j] = number of error words with exactly j corrupted symbols among
    // the symbols processed so far
    std::vector<BigCount> ways(tt + 1, 0);
    ways[0] = 1;
    for (const auto& sym : x) {
        const BigCount nonzero = symbol_error_ball(sym, k, l).size() - 1;
        for (std::size_t j = tt; j >= 1; --j) ways[j] += ways[j - 1] * nonzero;
    }
    BigCount total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

namespace {

std::vector<Word> neighbours(const Word& w, int k, int l) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (const auto& e : symbol_error_ball(w[i], k, l)) {
            if (e.is_zero()) continue;
            Word v = w;
            v[i] = w[i] + e;
            out.push_back(std::move(v));
        }
    return out;
}

void check_pair(const Word& x, const Word& y, int k) {
    require(x.size() == y.size(), "words must have equal length");
    for (const auto& s : x) require(s.valid_for(k), "word symbol violates resolution");
    for (const auto& s : y) require(s.valid_for(k), "word symbol violates resolution");
}

}  // namespace

std::optional<int> geodesic_distance(const Word& x, const Word& y, int k, int l, std::size_t max_visited) {
    check_pair(x, y, k);
    if (x == y) return 0;
    std::set<Word> seen{x};
    std::vector<Word> frontier{x};
    for (int dist = 1; !frontier.empty(); ++dist) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (auto& v : neighbours(w, k, l)) {
                if (v == y) return dist;
                if (seen.insert(v).second) {
                    if (seen.size() > max_visited) fail(ErrorKind::limit_exceeded, "geodesic search guard exceeded");
                    next.push_back(std::move(v));
                }
            }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::vector<Word> geodesic_ball(const Word& x, int k, int l, int radius, std::size_t max_visited) {
    check_pair(x, x, k);
    std::set<Word> seen{x};
    std::vector<Word> frontier{x};
    for (int dist = 1; dist <= radius && !frontier.empty(); ++dist) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (auto& v : neighbours(w, k, l))
                if (seen.insert(v).second) {
                    if (seen.size() > max_visited) fail(ErrorKind::limit_exceeded, "geodesic ball guard exceeded");
                    next.push_back(std::move(v));
                }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

ErrorWord sample_lmpe(const Word& x, int k, int l, int t, std::uint64_t seed, WeightPolicy policy) {
    require(t >= 0 && static_cast<std::size_t>(t) <= x.size(), "need 0 <= t <= n");
    std::mt19937_64 rng(seed);
    ErrorWord e(x.size());
    int weight = t;
    if (policy == WeightPolicy::up_to_t) weight = std::uniform_int_distribution<int>(0, t)(rng);
    if (weight == 0 || l == 0) return e;

    std::vector<std::size_t> positions(x.size());
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // partial Fisher-Yates: the first `weight` entries become a uniform subset
    for (int i = 0; i < weight; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), positions.size() - 1);
        std::swap(positions[static_cast<std::size_t>(i)], positions[pick(rng)]);
    }
    for (int i = 0; i < weight; ++i) {
        const auto pos = positions[static_cast<std::size_t>(i)];
        auto ball = symbol_error_ball(x[pos], k, l);
        std::erase_if(ball, [](const SymbolError& s) { return s.is_zero(); });
        if (ball.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        e[pos] = ball[pick(rng)];
    }
    return e;
}

Word apply_errors(const Word& x, const ErrorWord& e) {
    require(x.size() == e.size(), "error word length mismatch");
    Word y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + e[i];
    return y;
}

int word_resolution(const Word& w) {
    require(!w.empty(), "empty word has no resolution");
    const int k = w.front().sum();
    for (const auto& s : w) require(s.sum() == k, "word mixes resolutions");
    return k;
}

std::string format_symbol(const ProbabilityVector& x) {
    std::string s;
    for (int j = 0; j < kLetters; ++j) {
        if (j) s += ',';
        s += std::to_string(x.values[j]);
    }
    return s;
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ';';
        s += format_symbol(w[i]);
    }
    return s;
}

ProbabilityVector parse_symbol(std::string_view text, int k) {
    ProbabilityVector x;
    std::size_t start = 0;
    for (int j = 0; j < kLetters; ++j) {
        const auto end = text.find(',', start);
        const bool last = j == kLetters - 1;
        if (last != (end == std::string_view::npos))
            fail(ErrorKind::data_format, "symbol '" + std::string(text) + "' must have exactly 4 values");
        const auto field = text.substr(start, last ? std::string_view::npos : end - start);
        int v = 0;
        const auto* first = field.data();
        const auto* stop = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(first, stop, v);
        if (field.empty() || ec != std::errc{} || ptr != stop)
            fail(ErrorKind::data_format, "bad value '" + std::string(field) + "' in symbol");
        x.values[j] = v;
        start = end + 1;
    }
    if (!x.valid_for(k))
        fail(ErrorKind::data_format,
             "symbol " + format_symbol(x) + " is not a probability vector of resolution " + std::to_string(k));
    return x;
}

Word parse_word(std::string_view line, int k) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) fail(ErrorKind::data_format, "empty codeword line");
    Word w;
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(';', start);
        w.push_back(parse_symbol(line.substr(start, end == std::string_view::npos ? end : end - start), k));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return w;
}

std::ostream& operator<<(std::ostream& os, const ProbabilityVector& x) {
    return os << '(' << format_symbol(x) << ')';
}

std::ostream& operator<<(std::ostream& os, const SymbolError& e) {
    os << '(';
    for (int j = 0; j < kLetters; ++j) os << (j ? "," : "") << e.deltas[j];
    return os << ')';
}

}  // namespace lmpe
