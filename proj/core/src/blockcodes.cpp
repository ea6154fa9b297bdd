#include "lmpe/blockcodes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lmpe/error.hpp"

namespace lmpe {

namespace {

using Poly = std::vector<FieldElement>;  // lowest degree first

FieldElement prime_element(const Field& f, int c) {
    std::vector<int> coeffs(static_cast<std::size_t>(f.degree()), 0);
    coeffs.back() = ((c % f.characteristic()) + f.characteristic()) % f.characteristic();
    return f.from_coefficients(coeffs);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == Field::zero()) a.pop_back();
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Field::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Field::zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

FieldElement poly_eval(const Field& f, const Poly& a, FieldElement x) {
    FieldElement acc = Field::zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

Poly poly_derivative(const Field& f, const Poly& a) {
    Poly d;
    for (std::size_t j = 1; j < a.size(); ++j)
        d.push_back(f.mul(prime_element(f, static_cast<int>(j % static_cast<std::size_t>(f.characteristic()))), a[j]));
    trim(d);
    return d;
}

// Remainder of a(x) modulo a monic g(x).
Poly poly_mod_monic(const Field& f, Poly a, const Poly& g) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = a.size(); i-- > dg;) {
        const FieldElement c = a[i];
        if (c == Field::zero()) continue;
        for (std::size_t j = 0; j <= dg; ++j) a[i - dg + j] = f.sub(a[i - dg + j], f.mul(c, g[j]));
    }
    a.resize(std::min(a.size(), dg), Field::zero());
    return a;
}

std::uint64_t pack(const Symbols& s, std::uint32_t q) {
    std::uint64_t key = 0;
    for (const auto& v : s) key = key * q + v.value;
    return key;
}

bool is_zero(const Symbols& s) {
    return std::all_of(s.begin(), s.end(), [](FieldElement v) { return v == Field::zero(); });
}

// All length-r columns whose first nonzero entry is 1, lexicographic.
std::vector<Symbols> major_columns(const Field& f, int r) {
    std::vector<Symbols> out;
    const std::uint32_t q = f.order();
    for (int lead = 0; lead < r; ++lead) {
        const int tail = r - lead - 1;
        std::uint64_t count = 1;
        for (int i = 0; i < tail; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Symbols col(static_cast<std::size_t>(r), Field::zero());
            col[static_cast<std::size_t>(lead)] = Field::one();
            std::uint64_t v = idx;
            for (int i = r - 1; i > lead; --i) {
                col[static_cast<std::size_t>(i)] = FieldElement{static_cast<std::uint32_t>(v % q)};
                v /= q;
            }
            out.push_back(std::move(col));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_unit_column(const Symbols& c) {
    int ones = 0;
    for (auto v : c) {
        if (v == Field::one())
            ++ones;
        else if (v != Field::zero())
            return false;
    }
    return ones == 1;
}

}  // namespace

struct BlockCode::BchData {
    Field big;
    std::vector<FieldElement> to_big;   // small integer -> big element
    std::vector<std::int64_t> from_big; // big integer -> small integer or -1
};

// ---------------------------------------------------------------------------
// Construction

void BlockCode::finish_from_columns(std::vector<Symbols> columns) {
    // non-unit columns lexicographically, then e_1 .. e_r
    std::vector<Symbols> info, units(r_);
    for (auto& c : columns) {
        if (is_unit_column(c)) {
            const auto pos = static_cast<std::size_t>(std::find(c.begin(), c.end(), Field::one()) - c.begin());
            units[pos] = std::move(c);
        } else {
            info.push_back(std::move(c));
        }
    }
    std::sort(info.begin(), info.end());
    n_ = info.size() + r_;
    h_.assign(r_, Symbols(n_, Field::zero()));
    for (std::size_t j = 0; j < info.size(); ++j)
        for (std::size_t i = 0; i < r_; ++i) h_[i][j] = info[j][i];
    for (std::size_t u = 0; u < r_; ++u) h_[u][info.size() + u] = Field::one();
}

void BlockCode::build_syndrome_table(std::span<const FieldElement> values) {
    table_.clear();
    for (std::size_t j = 0; j < n_; ++j)
        for (auto e : values) {
            Symbols s(r_);
            for (std::size_t i = 0; i < r_; ++i) s[i] = field_.mul(h_[i][j], e);
            const auto [it, fresh] = table_.emplace(pack(s, field_.order()), std::make_pair(j, e));
            if (!fresh) fail(ErrorKind::invalid_argument, "single-error syndromes are not distinct");
        }
}

BlockCode BlockCode::hamming(const Field& field, int r) {
    require(r >= 2, "Hamming codes need r >= 2");
    BlockCode code(field);
    code.kind_ = CodeKind::hamming;
    code.r_ = static_cast<std::size_t>(r);
    code.delta_ = 3;
    code.finish_from_columns(major_columns(field, r));
    Symbols nonzero;
    for (std::uint32_t v = 1; v < field.order(); ++v) nonzero.push_back({v});
    code.errors_ = nonzero;
    code.build_syndrome_table(nonzero);
    return code;
}

BlockCode BlockCode::improved_hamming(const Field& field, int r, std::span<const FieldElement> errors) {
    require(r >= 2, "improved Hamming codes need r >= 2");
    require(!errors.empty(), "error set must not be empty");
    std::set<FieldElement> err_set;
    for (auto e : errors) {
        require(field.contains(e) && e != Field::zero(), "error values must be nonzero field elements");
        err_set.insert(e);
    }
    // Greedy scan over scalars alpha^1, alpha^2, ...: accept i when
    // i*e1 != j*e2 for all e1, e2 in the error set and accepted j.
    Symbols scalars{Field::one()};
    std::set<FieldElement> covered(err_set.begin(), err_set.end());
    for (std::uint32_t s = 1; s + 1 < field.order(); ++s) {
        const FieldElement i = field.exp(s);
        bool ok = true;
        for (auto e : err_set)
            if (covered.contains(field.mul(i, e))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        scalars.push_back(i);
        for (auto e : err_set) covered.insert(field.mul(i, e));
    }

    BlockCode code(field);
    code.kind_ = CodeKind::improved_hamming;
    code.r_ = static_cast<std::size_t>(r);
    code.delta_ = 2;
    std::vector<Symbols> columns;
    for (const auto& h : major_columns(field, r))
        for (auto i : scalars) {
            Symbols c(h.size());
            for (std::size_t j = 0; j < h.size(); ++j) c[j] = field.mul(i, h[j]);
            columns.push_back(std::move(c));
        }
    code.finish_from_columns(std::move(columns));
    code.scalars_ = scalars;
    code.errors_.assign(err_set.begin(), err_set.end());
    code.build_syndrome_table(code.errors_);
    return code;
}

BlockCode BlockCode::bch(const Field& field, int w, int t, std::optional<std::size_t> length) {
    require(t >= 0, "t must be non-negative");
    return bch_designed(field, w, 2 * t + 1, length);
}

BlockCode BlockCode::bch_designed(const Field& field, int w, int delta, std::optional<std::size_t> length) {
    require(w >= 1, "BCH extension degree must be at least 1");
    require(delta >= 1, "designed distance must be at least 1");
    const std::uint32_t q = field.order();
    std::uint64_t big_order = 1;
    for (int i = 0; i < w; ++i) big_order *= q;
    require(big_order <= (1u << 16), "BCH extension field too large");
    const auto natural = static_cast<std::size_t>(big_order - 1);
    const std::size_t n = length.value_or(natural);
    require(n >= 1 && n <= natural, "BCH length must be in [1, q^w - 1]");

    auto data = std::make_shared<BchData>(BchData{
        Field::make(field.characteristic(), field.degree() * w), {}, {}});
    const Field& big = data->big;
    const std::uint32_t Q = big.order();

    // Embed GF(q) as the subfield of GF(q^w) via a root of its primitive polynomial.
    const std::uint32_t step = (Q - 1) / (q - 1);
    std::optional<FieldElement> gamma;
    for (std::uint32_t j = 1; j < q - 1 || (q == 2 && j == 1); ++j) {
        if (std::gcd(j, q - 1) != 1) continue;
        const FieldElement cand = big.exp(static_cast<long long>(j) * step);
        FieldElement acc = Field::zero();
        for (int c : field.primitive_poly()) acc = big.add(big.mul(acc, cand), prime_element(big, c));
        if (acc == Field::zero()) {
            gamma = cand;
            break;
        }
        if (q == 2) break;
    }
    if (q == 2) gamma = Field::one();
    require(gamma.has_value(), "failed to embed GF(q) into its extension");
    data->to_big.assign(q, Field::zero());
    data->from_big.assign(Q, -1);
    data->from_big[0] = 0;
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
        const FieldElement img = big.pow(*gamma, e);
        data->to_big[e + 1] = img;
        data->from_big[img.value] = e + 1;
    }

    // Generator: product of (x - beta^c) over the q-cyclotomic cosets of 1..delta-1.
    std::set<std::uint64_t> roots;
    for (int i = 1; i < delta; ++i) {
        std::uint64_t c = static_cast<std::uint64_t>(i) % natural;
        do {
            roots.insert(c);
            c = (c * q) % natural;
        } while (c != static_cast<std::uint64_t>(i) % natural);
    }
    Poly g_big{Field::one()};
    for (auto c : roots) g_big = poly_mul(big, g_big, Poly{big.neg(big.exp(static_cast<long long>(c))), Field::one()});
    Poly g;
    for (auto coef : g_big) {
        const auto back = data->from_big[coef.value];
        require(back >= 0, "BCH generator coefficient outside GF(q)");
        g.push_back(FieldElement{static_cast<std::uint32_t>(back)});
    }
    const std::size_t r = g.size() - 1;
    if (r >= n)
        fail(ErrorKind::invalid_argument, "BCH code has no information symbols (" + std::to_string(r) +
                                              " parities for length " + std::to_string(n) + ")");

    BlockCode code(field);
    code.kind_ = CodeKind::bch;
    code.n_ = n;
    code.r_ = r;
    code.delta_ = delta;
    code.w_ = w;
    code.generator_ = g;
    code.bch_ = data;
    // Systematic parity-check [A | I] with A = -P, where P maps information to parity.
    const std::size_t kdim = n - r;
    code.h_.assign(r, Symbols(n, Field::zero()));
    for (std::size_t i = 0; i < kdim; ++i) {
        // info symbol i sits on x^(n-1-i); parity j sits on x^(r-1-j)
        Poly unit(n, Field::zero());
        unit[n - 1 - i] = Field::one();
        const Poly rem = poly_mod_monic(field, unit, g);
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t deg = r - 1 - j;
            const FieldElement parity = deg < rem.size() ? field.neg(rem[deg]) : Field::zero();
            code.h_[j][i] = field.neg(parity);
        }
    }
    for (std::size_t j = 0; j < r; ++j) code.h_[j][kdim + j] = Field::one();
    return code;
}

// ---------------------------------------------------------------------------
// Encoding

Symbols BlockCode::encode(std::span<const FieldElement> info) const {
    const std::size_t kdim = dimension();
    if (info.size() != kdim)
        fail(ErrorKind::invalid_argument,
             "information length " + std::to_string(info.size()) + " != " + std::to_string(kdim));
    for (auto v : info) require(field_.contains(v), "information symbol outside the field");
    Symbols c(info.begin(), info.end());
    c.resize(n_, Field::zero());
    for (std::size_t j = 0; j < r_; ++j) {
        FieldElement acc = Field::zero();
        for (std::size_t i = 0; i < kdim; ++i) acc = field_.add(acc, field_.mul(h_[j][i], info[i]));
        c[kdim + j] = field_.neg(acc);
    }
    return c;
}

Symbols BlockCode::syndrome(std::span<const FieldElement> word) const {
    require(word.size() == n_, "word length mismatch");
    Symbols s(r_, Field::zero());
    for (std::size_t j = 0; j < r_; ++j)
        for (std::size_t i = 0; i < n_; ++i)
            if (word[i] != Field::zero()) s[j] = field_.add(s[j], field_.mul(h_[j][i], word[i]));
    return s;
}

// ---------------------------------------------------------------------------
// Decoding

DecodeResult BlockCode::decode(std::span<const FieldElement> received, std::span<const std::size_t> erasures) const {
    if (received.size() != n_)
        fail(ErrorKind::invalid_argument,
             "received length " + std::to_string(received.size()) + " != " + std::to_string(n_));
    for (auto v : received) require(field_.contains(v), "received symbol outside the field");
    std::set<std::size_t> distinct(erasures.begin(), erasures.end());
    for (auto pos : distinct) require(pos < n_, "erasure position out of range");
    const std::vector<std::size_t> eras(distinct.begin(), distinct.end());

    if (kind_ == CodeKind::bch) return decode_bch(received, eras);
    if (eras.empty()) return decode_by_table(received);
    return decode_erasures_only(received, eras);
}

DecodeResult BlockCode::decode_by_table(std::span<const FieldElement> received) const {
    DecodeResult res;
    res.codeword.assign(received.begin(), received.end());
    const Symbols s = syndrome(received);
    if (is_zero(s)) {
        res.status = DecodeStatus::ok;
        return res;
    }
    auto it = table_.find(pack(s, field_.order()));
    if (it == table_.end()) {
        res.diagnostic = "syndrome matches no correctable single error";
        return res;
    }
    const auto [pos, value] = it->second;
    res.codeword[pos] = field_.sub(res.codeword[pos], value);
    res.corrected.push_back(pos);
    res.status = DecodeStatus::ok;
    return res;
}

DecodeResult BlockCode::decode_erasures_only(std::span<const FieldElement> received,
                                             std::span<const std::size_t> erasures) const {
    DecodeResult res;
    res.codeword.assign(received.begin(), received.end());
    for (auto pos : erasures) res.codeword[pos] = Field::zero();
    // Solve H_E x = -H y' over GF(q), where y' has the erased symbols zeroed.
    const Symbols s = syndrome(res.codeword);
    const std::size_t cols = erasures.size();
    Matrix aug(r_, Symbols(cols + 1, Field::zero()));
    for (std::size_t j = 0; j < r_; ++j) {
        for (std::size_t c = 0; c < cols; ++c) aug[j][c] = h_[j][erasures[c]];
        aug[j][cols] = field_.neg(s[j]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(cols, r_);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = row;
        while (piv < r_ && aug[piv][c] == Field::zero()) ++piv;
        if (piv == r_) {
            res.diagnostic = "erasure pattern is not recoverable";
            return res;
        }
        std::swap(aug[piv], aug[row]);
        const FieldElement inv = field_.inv(aug[row][c]);
        for (auto& v : aug[row]) v = field_.mul(v, inv);
        for (std::size_t j = 0; j < r_; ++j) {
            if (j == row || aug[j][c] == Field::zero()) continue;
            const FieldElement f = aug[j][c];
            for (std::size_t cc = 0; cc <= cols; ++cc) aug[j][cc] = field_.sub(aug[j][cc], field_.mul(f, aug[row][cc]));
        }
        pivot_row[c] = row++;
    }
    for (std::size_t j = row; j < r_; ++j)
        if (aug[j][cols] != Field::zero()) {
            res.diagnostic = "erasures inconsistent with the remaining symbols";
            return res;
        }
    for (std::size_t c = 0; c < cols; ++c) res.codeword[erasures[c]] = aug[pivot_row[c]][cols];
    res.corrected.assign(erasures.begin(), erasures.end());
    res.status = DecodeStatus::ok;
    return res;
}

DecodeResult BlockCode::decode_bch(std::span<const FieldElement> received, std::span<const std::size_t> erasures) const {
    const Field& big = bch_->big;
    const auto D = static_cast<std::size_t>(delta_ - 1);
    DecodeResult res;
    res.codeword.assign(received.begin(), received.end());
    for (auto pos : erasures) res.codeword[pos] = Field::zero();
    const std::size_t nu = erasures.size();
    if (nu > D) {
        res.diagnostic = "more erasures than the designed distance allows";
        return res;
    }

    auto locator = [&](std::size_t pos) { return big.exp(static_cast<long long>(n_ - 1 - pos)); };

    // S_j = y(beta^j), j = 1..D
    std::vector<FieldElement> S(D + 1, Field::zero());
    bool all_zero = true;
    for (std::size_t j = 1; j <= D; ++j) {
        FieldElement acc = Field::zero();
        for (std::size_t i = 0; i < n_; ++i) {
            const FieldElement y = bch_->to_big[res.codeword[i].value];
            if (y == Field::zero()) continue;
            acc = big.add(acc, big.mul(y, big.pow(locator(i), static_cast<long long>(j))));
        }
        S[j] = acc;
        all_zero = all_zero && acc == Field::zero();
    }
    if (all_zero && nu == 0) {
        res.status = DecodeStatus::ok;
        return res;
    }

    // Erasure locator and errors-and-erasures Berlekamp-Massey.
    Poly gamma{Field::one()};
    for (auto pos : erasures) gamma = poly_mul(big, gamma, Poly{Field::one(), big.neg(locator(pos))});
    Poly lambda = gamma, b = gamma;
    std::size_t L = nu;
    for (std::size_t r = nu + 1; r <= D; ++r) {
        FieldElement delta = Field::zero();
        for (std::size_t j = 0; j < lambda.size() && j < r; ++j) delta = big.add(delta, big.mul(lambda[j], S[r - j]));
        Poly xb(b.size() + 1, Field::zero());
        std::copy(b.begin(), b.end(), xb.begin() + 1);
        if (delta == Field::zero()) {
            b = std::move(xb);
            continue;
        }
        Poly next = lambda;
        next.resize(std::max(next.size(), xb.size()), Field::zero());
        for (std::size_t j = 0; j < xb.size(); ++j) next[j] = big.sub(next[j], big.mul(delta, xb[j]));
        trim(next);
        if (2 * L <= r - 1 + nu) {
            const FieldElement inv = big.inv(delta);
            b = lambda;
            for (auto& v : b) v = big.mul(v, inv);
            L = r + nu - L;
        } else {
            b = std::move(xb);
        }
        lambda = std::move(next);
    }
    trim(lambda);
    const std::size_t degree = lambda.empty() ? 0 : lambda.size() - 1;
    if (degree != L || degree < nu || 2 * (degree - nu) + nu > D) {
        res.diagnostic = "errata locator degree exceeds the correction radius";
        return res;
    }

    // Evaluator Omega = S(x) Lambda(x) mod x^D, then Chien search and Forney.
    Poly syn(S.begin() + 1, S.end());
    Poly omega = poly_mul(big, syn, lambda);
    if (omega.size() > D) omega.resize(D);
    const Poly dlambda = poly_derivative(big, lambda);

    std::size_t roots = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        const FieldElement xinv = big.inv(locator(i));
        if (poly_eval(big, lambda, xinv) != Field::zero()) continue;
        ++roots;
        const FieldElement denom = poly_eval(big, dlambda, xinv);
        if (denom == Field::zero()) {
            res.diagnostic = "repeated errata locator root";
            return res;
        }
        const FieldElement err = big.neg(big.div(poly_eval(big, omega, xinv), denom));
        const auto small = bch_->from_big[err.value];
        if (small < 0) {
            res.diagnostic = "error value outside GF(q)";
            return res;
        }
        const FieldElement e{static_cast<std::uint32_t>(small)};
        const bool erased = std::binary_search(erasures.begin(), erasures.end(), i);
        if (e != Field::zero() || erased) {
            res.codeword[i] = field_.sub(res.codeword[i], e);
            res.corrected.push_back(i);
        }
    }
    if (roots != degree) {
        res.diagnostic = "errata locator does not split over the code positions";
        return res;
    }
    if (!is_zero(syndrome(res.codeword))) {
        res.diagnostic = "corrected word is not a codeword";
        return res;
    }
    res.status = DecodeStatus::ok;
    return res;
}

std::string BlockCode::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case CodeKind::hamming: os << "hamming"; break;
        case CodeKind::bch: os << "bch(w=" << w_ << ",delta=" << delta_ << ")"; break;
        case CodeKind::improved_hamming: os << "improved_hamming(|I|=" << scalars_.size() << ")"; break;
    }
    os << " (" << n_ << "," << dimension() << ") over GF(" << field_.order() << ")";
    return os.str();
}

int i_max(int l, std::uint32_t q) {
    require(l >= 1 && q >= 2, "i_max needs l >= 1 and q >= 2");
    // |E| = (10 l^3 + 15 l^2 + 11 l) / 3
    const long long e3 = 10LL * l * l * l + 15LL * l * l + 11LL * l;
    return static_cast<int>(3LL * (static_cast<long long>(q) - 1) / e3);
}

Symbols optimal_error_embedding(const Field& field, std::size_t count, int scalars) {
    require(scalars >= 1, "need at least one scalar");
    require(count * static_cast<std::size_t>(scalars) <= field.order() - 1, "embedding does not fit in the field");
    Symbols out;
    for (std::size_t j = 0; j < count; ++j) out.push_back(field.exp(static_cast<long long>(scalars) * static_cast<long long>(j)));
    return out;
}

std::string parity_check_csv(const BlockCode& code) {
    std::ostringstream os;
    for (const auto& row : code.parity_check()) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].value;
        os << '\n';
    }
    return os.str();
}

}  // namespace lmpe
