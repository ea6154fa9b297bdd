#include "lmpe/field.hpp"

#include <sstream>

#include "lmpe/error.hpp"

namespace lmpe {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    int m = 0;
    std::uint64_t rest = n;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{static_cast<int>(p), m, static_cast<std::uint32_t>(n)};
}

PrimePower largest_prime_power_at_most(std::uint64_t n) {
    require(n >= 2, "no prime power below 2");
    for (std::uint64_t v = n;; --v)
        if (auto pp = as_prime_power(v)) return *pp;
}

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

std::uint32_t ipow(std::uint32_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > kMaxOrder) return kMaxOrder + 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Walks alpha^0, alpha^1, ... in packed form.  Returns an empty vector when
// alpha does not have multiplicative order exactly q - 1.
std::vector<std::uint32_t> power_walk(int p, int m, std::uint32_t q, const std::vector<int>& poly) {
    std::vector<std::uint32_t> seq;
    seq.reserve(q - 1);
    std::vector<bool> seen(q, false);
    std::vector<int> c(m, 0);  // c[i] is the coefficient of x^i
    c[0] = 1;
    auto pack = [&] {
        std::uint32_t w = 0;
        for (int i = m - 1; i >= 0; --i) w = w * p + static_cast<std::uint32_t>(c[i]);
        return w;
    };
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
        const std::uint32_t w = pack();
        if (w == 0 || seen[w]) return {};
        seen[w] = true;
        seq.push_back(w);
        // multiply by x and reduce with x^m = -sum a_i x^i
        const int top = c[m - 1];
        for (int i = m - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        for (int i = 0; i < m; ++i) {
            const int a_i = poly[m - i];  // poly is highest first
            c[i] = ((c[i] - top * a_i) % p + p) % p;
        }
    }
    if (pack() != 1) return {};
    return seq;
}

}  // namespace

std::vector<int> Field::default_primitive_poly(int p, int m) {
    require(is_prime(p), "field characteristic must be prime");
    require(m >= 1, "extension degree must be at least 1");
    if (p == 3 && m == 3) return {1, 0, 2, 1};
    const std::uint32_t q = ipow(static_cast<std::uint32_t>(p), m);
    require(q <= kMaxOrder, "field order exceeds 2^16");
    std::vector<int> poly(m + 1, 0);
    poly[0] = 1;
    // lexicographic over (a_{m-1}, ..., a_0)
    std::vector<int> digits(m, 0);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        std::uint64_t v = idx;
        for (int i = m - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(v % p);
            v /= p;
        }
        for (int i = 0; i < m; ++i) poly[i + 1] = digits[i];
        if (poly[m] == 0) continue;
        if (!power_walk(p, m, q, poly).empty()) return poly;
    }
    fail(ErrorKind::search_failure, "no primitive polynomial found");
}

Field Field::make(int p, int m, std::optional<std::vector<int>> primitive_poly) {
    require(is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
    require(m >= 1, "extension degree must be at least 1");
    const std::uint32_t q = ipow(static_cast<std::uint32_t>(p), m);
    require(q <= kMaxOrder, "field order exceeds 2^16");

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;
    f.poly_ = primitive_poly ? *primitive_poly : default_primitive_poly(p, m);
    require(static_cast<int>(f.poly_.size()) == m + 1, "primitive polynomial must have degree m");
    require(f.poly_[0] == 1, "primitive polynomial must be monic");
    for (int c : f.poly_) require(c >= 0 && c < p, "polynomial coefficient outside GF(p)");

    auto walk = power_walk(p, m, q, f.poly_);
    require(!walk.empty(), "polynomial is not primitive over GF(" + std::to_string(p) + ")");

    f.packed_.assign(q, 0);
    f.element_of_.assign(q, 0);
    for (std::uint32_t j = 0; j < walk.size(); ++j) {
        f.packed_[j + 1] = walk[j];
        f.element_of_[walk[j]] = j + 1;
    }
    return f;
}

FieldElement Field::element(std::uint32_t integer) const {
    require(integer < q_, "integer " + std::to_string(integer) + " outside GF(" + std::to_string(q_) + ")");
    return {integer};
}

std::uint32_t Field::poly_add(std::uint32_t u, std::uint32_t v) const {
    if (p_ == 2) return u ^ v;
    std::uint32_t out = 0, scale = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        out += ((u % p + v % p) % p) * scale;
        u /= p;
        v /= p;
        scale *= p;
    }
    return out;
}

std::uint32_t Field::poly_neg(std::uint32_t u) const {
    if (p_ == 2) return u;
    std::uint32_t out = 0, scale = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        out += ((p - u % p) % p) * scale;
        u /= p;
        scale *= p;
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    return {element_of_[poly_add(packed_[a.value], packed_[b.value])]};
}

FieldElement Field::neg(FieldElement a) const { return {element_of_[poly_neg(packed_[a.value])]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    const std::uint32_t e = (a.value - 1 + b.value - 1) % (q_ - 1);
    return {e + 1};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) fail(ErrorKind::invalid_argument, "inverse of zero");
    const std::uint32_t e = (q_ - 1 - (a.value - 1)) % (q_ - 1);
    return {e + 1};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
    if (b.value == 0) fail(ErrorKind::invalid_argument, "division by zero");
    return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, long long e) const {
    if (a.value == 0) {
        if (e == 0) return one();
        require(e > 0, "zero raised to a negative power");
        return zero();
    }
    const long long n = q_ - 1;
    long long r = (static_cast<long long>(a.value - 1) * (e % n)) % n;
    if (r < 0) r += n;
    return {static_cast<std::uint32_t>(r) + 1};
}

FieldElement Field::arith(ArithOp op, FieldElement a, FieldElement b) const {
    switch (op) {
        case ArithOp::add: return add(a, b);
        case ArithOp::sub: return sub(a, b);
        case ArithOp::mul: return mul(a, b);
        case ArithOp::div: return div(a, b);
    }
    fail(ErrorKind::invalid_argument, "unknown arithmetic op");
}

FieldElement Field::exp(long long power) const {
    const long long n = q_ - 1;
    long long r = power % n;
    if (r < 0) r += n;
    return {static_cast<std::uint32_t>(r) + 1};
}

std::uint32_t Field::log(FieldElement a) const {
    if (a.value == 0) fail(ErrorKind::invalid_argument, "log of zero");
    return a.value - 1;
}

std::vector<int> Field::coefficients(FieldElement a) const {
    std::vector<int> c(m_, 0);
    std::uint32_t w = packed_[a.value];
    for (int i = m_ - 1; i >= 0; --i) {
        c[i] = static_cast<int>(w % p_);
        w /= p_;
    }
    return c;
}

FieldElement Field::from_coefficients(std::span<const int> coeffs) const {
    require(static_cast<int>(coeffs.size()) == m_, "coefficient vector must have length m");
    std::uint32_t w = 0;
    for (int c : coeffs) {
        const int r = ((c % p_) + p_) % p_;
        w = w * p_ + static_cast<std::uint32_t>(r);
    }
    return {element_of_[w]};
}

std::uint32_t Field::multiplicative_order(FieldElement a) const {
    require(a.value != 0, "zero has no multiplicative order");
    std::uint32_t ord = 1;
    FieldElement x = a;
    while (x != one()) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")=GF(" << p_ << "^" << m_ << ") poly=[";
    for (std::size_t i = 0; i < poly_.size(); ++i) os << (i ? "," : "") << poly_[i];
    os << "]";
    return os.str();
}

}  // namespace lmpe
