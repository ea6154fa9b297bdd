// One line per acceptance criterion, PASS or FAIL, with the measured values.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lmpe/blockcodes.hpp"
#include "lmpe/bounds.hpp"
#include "lmpe/classify.hpp"
#include "lmpe/constructions.hpp"
#include "lmpe/error.hpp"
#include "lmpe/gray.hpp"
#include "lmpe/prob.hpp"

using namespace lmpe;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string failed;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failed += " [failed: " + what + "]";
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        o.pass = false;
        o.detail << " [over time budget " << budget_seconds << " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d  %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title,
                (o.detail.str() + o.failed).c_str(), seconds);
    std::fflush(stdout);
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

// Symbol of resolution k with remainder b (mod 3) and the smallest quotient.
ProbabilityVector with_remainder(const RemainderVector& b, int k) {
    const int s = (k - (b[0] + b[1] + b[2] + b[3])) / 3;
    return combine({quotient_unrank(0, s), b}, 1, k);
}

void hamming_k12(Outcome& o) {
    LmpeCodeSpec spec;
    spec.k = 12;
    spec.q = 27;
    spec.r = 2;
    spec.n = 28;
    const auto code = LmpeCode::build(spec);
    const auto& map = *code.class_map();
    const auto& hamming = code.first_layer();

    // Information: varied symbols, the second one (3,3,3,3); the last two
    // information classes are chosen so that both parities are 0.
    Message msg = code.random_message(2024);
    msg.info_symbols[1] = ProbabilityVector{{3, 3, 3, 3}};
    Symbols classes;
    for (const auto& x : msg.info_symbols) classes.push_back(*map.class_index(split(x, 1).remainder));
    bool solved = false;
    for (std::uint32_t a = 0; a < 27 && !solved; ++a)
        for (std::uint32_t b = 0; b < 27 && !solved; ++b) {
            classes[24] = FieldElement{a};
            classes[25] = FieldElement{b};
            const auto cw = hamming.encode(classes);
            solved = cw[26] == Field::zero() && cw[27] == Field::zero();
        }
    o.check(solved, "no information completion gives zero parities");
    msg.info_symbols[24] = with_remainder(map.remainder_of(classes[24]), 12);
    msg.info_symbols[25] = with_remainder(map.remainder_of(classes[25]), 12);
    msg.parity_quotient_indices = {3, 8};

    const Word x = code.encode(msg);
    const auto parity0 = map.class_index(split(x[26], 1).remainder);
    const auto parity1 = map.class_index(split(x[27], 1).remainder);
    o.check(parity0 && parity1 && *parity0 == Field::zero() && *parity1 == Field::zero(), "parities are not (0,0)");
    o.detail << "parities (" << parity0->value << "," << parity1->value << ")";

    Word y = x;
    y[1] = ProbabilityVector{{2, 4, 3, 3}};
    const auto received_class = map.class_index(split(y[1], 1).remainder);
    o.check(received_class && received_class->value == 17, "(2,4,3,3) does not map to 17");
    o.detail << ", received class " << received_class->value;

    Symbols received;
    for (const auto& s : y) received.push_back(*map.class_index(split(s, 1).remainder));
    const auto layer = hamming.decode(received);
    o.check(layer.ok() && layer.codeword[1] == Field::zero(), "Hamming layer did not restore class 0");

    const auto report = code.decode(y);
    o.check(report.codeword == x, "decoded word differs from the transmitted word");
    o.check(report.message == msg, "decoded message differs");
    o.check(report.corrected == std::vector<std::size_t>{1}, "correction not at position 2");
    o.detail << ", corrected position " << (report.corrected.empty() ? 0 : report.corrected[0] + 1)
             << ", transmitted word recovered";
}

void rates(Outcome& o) {
    LmpeCodeSpec spec;
    spec.k = 12;
    spec.q = 27;
    spec.r = 2;
    spec.n = 28;
    const double rate = LmpeCode::build(spec).rate();
    const double spb = sphere_packing(28, 12, 1, 1).rate;
    const double gv1 = gv_bound(28, 12, 1, 1).rate;
    const double gv2 = gv_bound(28, 12, 1, 1).rate;
    o.check(std::abs(rate - 0.955) <= 0.001, "code rate");
    o.check(std::abs(spb - 0.991) <= 0.001, "sphere-packing rate");
    o.check(std::abs(gv1 - gv2) <= 1e-6, "GV value not stable");
    o.detail << "code rate " << rate << ", sphere packing " << spb << ", closed-form GV " << gv1
             << " (0.921 not gated)";
}

void bound_gaps(Outcome& o) {
    const double g10 = 100 * (sphere_packing(1023, 100, 15, 10).rate - gv_bound(1023, 100, 15, 10).rate);
    const double g20 = 100 * (sphere_packing(1023, 100, 15, 20).rate - gv_bound(1023, 100, 15, 20).rate);
    o.check(std::abs(g10 - 1.95) <= 0.5, "gap at l=10");
    o.check(std::abs(g20 - 2.23) <= 0.5, "gap at l=20");
    o.detail << "gap l=10 " << g10 << " pp (target 1.95), l=20 " << g20 << " pp (target 2.23)";
}

void error_counts(Outcome& o) {
    auto brute = [](const ProbabilityVector& x, int k, int l) {
        std::size_t count = 0;
        for (const auto& y : enumerate_alphabet(k)) {
            const auto e = y - x;
            int abs_sum = 0;
            for (int d : e.deltas) abs_sum += std::abs(d);
            count += abs_sum <= 2 * l ? 1 : 0;
        }
        return count;
    };
    for (int l = 1; l <= 3; ++l) {
        const int k = 4 * l + 4;
        const auto corner = brute(ProbabilityVector{{0, 0, 0, k}}, k, l);
        const auto inner = brute(ProbabilityVector{{l + 1, l + 1, l + 1, l + 1}}, k, l);
        o.check(corner == e_min(l), "E_min at l=" + std::to_string(l));
        o.check(inner == e_count(l), "E at l=" + std::to_string(l));
        o.detail << (l > 1 ? "; " : "") << "l=" << l << ": corner " << corner << "/" << e_min(l) << ", interior " << inner
                 << "/" << e_count(l);
    }
}

void critical(Outcome& o) {
    const RemainderVector reference[] = {{1, 1, 1, 0}, {1, 1, 2, 1}, {1, 2, 3, 1}, {1, 4, 6, 7}};
    for (int l = 1; l <= 4; ++l) {
        const auto found = find_critical_vectors(l);
        const bool has = std::find(found.begin(), found.end(), reference[l - 1]) != found.end();
        o.check(has, "reference vector missing for l=" + std::to_string(l));
        bool all_valid = true;
        for (const auto& b : found)
            all_valid = all_valid && validate_classification(ReducedClassTable::build(l, 4 * divisor(l), b), l);
        o.check(all_valid, "invalid classification for l=" + std::to_string(l));
        o.detail << "l=" << l << ": " << found.size() << " found; ";
    }
    const auto five = find_critical_vectors(5);
    o.check(five.empty(), "l=5 not empty");
    o.detail << "l=5: " << five.size();
}

void improved(Outcome& o) {
    const Field f = Field::make(3, 3);
    o.check(f.primitive_poly() == std::vector<int>{1, 0, 2, 1}, "primitive polynomial");
    Symbols errors;
    for (const auto& d : remainder_error_patterns(1)) {
        const int c[3] = {d[0], d[1], d[2]};
        errors.push_back(f.from_coefficients(c));
    }
    std::set<std::uint32_t> values;
    for (auto e : errors) values.insert(e.value);
    o.check(values == std::set<std::uint32_t>{1, 2, 3, 4, 5, 13, 14, 15, 16, 17, 18, 26}, "error value set");
    const auto code = BlockCode::improved_hamming(f, 2, errors);
    o.check(code.length() == 56, "length");
    o.check(code.scalars() == Symbols{FieldElement{1}, FieldElement{7}}, "scalars");
    Symbols info(code.dimension());
    for (std::size_t i = 0; i < info.size(); ++i) info[i] = FieldElement{static_cast<std::uint32_t>((7 * i + 3) % 27)};
    const auto c = code.encode(info);
    std::size_t ok = 0, total = 0;
    for (std::size_t pos = 0; pos < code.length(); ++pos)
        for (auto e : errors) {
            Symbols y = c;
            y[pos] = f.add(y[pos], e);
            const auto r = code.decode(y);
            ++total;
            ok += r.ok() && r.codeword == c ? 1 : 0;
        }
    o.check(ok == total && total == 56 * 12, "single-error decoding");
    o.check(i_max(1, 27) == 2, "i_max");
    o.detail << "n=" << code.length() << ", scalars {" << code.scalars()[0].value << "," << code.scalars()[1].value
             << "}, " << ok << "/" << total << " single errors decoded, i_max(1,27)=" << i_max(1, 27);
}

void reduced(Outcome& o) {
    LmpeCodeSpec spec;
    spec.variant = Variant::reduced;
    spec.k = 12;
    spec.n = 10;
    const auto code = LmpeCode::build(spec);
    std::size_t ok = 0, total = 0, full_balls = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto msg = code.random_message(seed);
        const Word x = code.encode(msg);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const auto ball = symbol_error_ball(x[i], 12, 1);
            full_balls += ball.size() == 13 ? 1 : 0;
            for (const auto& e : ball) {
                if (e.is_zero()) continue;
                Word y = x;
                y[i] = x[i] + e;
                ++total;
                try {
                    const auto r = code.decode(y);
                    ok += r.codeword == x && r.message == msg ? 1 : 0;
                } catch (const Error&) {
                }
            }
        }
    }
    o.check(ok == total, "single-error decoding");
    o.check(full_balls > 0, "no symbol with all 12 patterns");
    o.detail << code.first_layer().describe() << " + " << code.second_layer()->describe() << "; " << ok << "/" << total
             << " single errors over 20 codewords decoded";
}

void gray(Outcome& o) {
    const auto strict = gray_search(19, 1, 27, 2);
    const bool strict_ok = strict && strict->size() == 729 && gray_validate(*strict);
    o.check(strict_ok, "no mapping at k=19 satisfying the 2l-neighbour condition");
    const auto eff = gray_efficiency(27, 2, 19);
    o.check(eff.numerator == 729 && eff.denominator == 1540, "efficiency");
    o.detail << "efficiency " << eff.numerator << "/" << eff.denominator;

    int smallest_2l = 0;
    for (int k = 19; k <= 40 && !smallest_2l; ++k)
        if (auto m = gray_search(k, 1, 27, 2); m && gray_validate(*m)) smallest_2l = k;
    GraySearchOptions loose;
    loose.ball_radius = 1;
    int smallest_l = 0;
    for (int k = 15; k <= 40 && !smallest_l; ++k)
        if (gray_search(k, 1, 27, 2, loose)) smallest_l = k;
    o.detail << "; smallest k: " << smallest_2l << " with the 2l neighbourhood, " << smallest_l
             << " with the l neighbourhood (target 19, soft)";

    if (strict_ok) {
        bool ext = true;
        for (int k2 = 20; k2 <= 25; ++k2) ext = ext && gray_validate(gray_extend(*strict, k2));
        o.check(ext, "extension");
    }
    if (auto m = gray_search(19, 1, 27, 2, loose)) {
        bool ext = true;
        for (int k2 = 20; k2 <= 25; ++k2) ext = ext && gray_validate(gray_extend(*m, k2), 1);
        o.detail << "; k=19 l-neighbourhood mapping extended to k=20..25 " << (ext ? "stays valid" : "breaks");
        o.check(ext, "extension of the l-neighbourhood mapping");
    }
    if (smallest_2l) {
        const auto m = gray_search(smallest_2l, 1, 27, 2);
        bool ext = true;
        for (int k2 = smallest_2l + 1; k2 <= smallest_2l + 6; ++k2) ext = ext && gray_validate(gray_extend(*m, k2));
        o.detail << "; k=" << smallest_2l << " mapping extended by 1..6 " << (ext ? "stays valid" : "breaks");
        o.check(ext, "extension of the 2l-neighbourhood mapping");
    }
}

void systematic(Outcome& o) {
    LmpeCodeSpec spec;
    spec.variant = Variant::systematic;
    spec.k = 19;
    spec.t = 3;
    spec.q = 27;
    spec.w = 2;
    spec.n = 31;
    spec.m = 16;
    spec.g = 2;
    spec.gray_radius = 1;
    const auto code = LmpeCode::build(spec);
    std::size_t ok = 0;
    const std::size_t trials = 10000;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto msg = code.random_message(i);
        const Word x = code.encode(msg);
        const auto e = sample_lmpe(x, 19, 1, 3, 1'000'003 + i, WeightPolicy::exactly_t);
        try {
            const auto r = code.decode(apply_errors(x, e));
            ok += r.codeword == x && r.message == msg ? 1 : 0;
        } catch (const Error&) {
        }
    }
    o.check(ok == trials, "random trials");
    o.check(round3(code.rate()) == 0.667, "rate");

    // push a parity column to a vector that is not a Gray image
    const auto& mapping = *code.gray_mapping();
    std::size_t off = 0, off_ok = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto msg = code.random_message(seed + 777);
        const Word x = code.encode(msg);
        for (std::size_t p = 16; p < code.length(); ++p)
            for (const auto& e : symbol_error_ball(x[p], 19, 1)) {
                Word y = x;
                y[p] = x[p] + e;
                if (mapping.preimage(y[p])) continue;
                ++off;
                try {
                    const auto r = code.decode(y);
                    off_ok += r.codeword == x ? 1 : 0;
                } catch (const Error&) {
                }
            }
    }
    o.check(off > 0 && off_ok == off, "non-image parity column");
    o.detail << ok << "/" << trials << " trials decoded, rate " << round3(code.rate()) << ", " << off_ok << "/" << off
             << " off-mapping parity columns decoded (Gray mapping searched with the l neighbourhood)";
}

void table_six(Outcome& o) {
    struct Entry {
        int k, l, g;
        long long n, m;
        double sys, nonsys;
    };
    const Entry entries[] = {
        {19, 1, 2, 31, 16, 0.667, 0.750},  {19, 1, 2, 31, 21, 0.808, 0.834},  {19, 1, 2, 63, 51, 0.895, 0.902},
        {19, 1, 2, 63, 57, 0.950, 0.951},  {65, 1, 3, 31, 16, 0.762, 0.844},  {65, 1, 3, 31, 21, 0.840, 0.896},
        {65, 1, 3, 63, 51, 0.927, 0.939},  {65, 1, 3, 63, 57, 0.966, 0.969},  {28, 2, 2, 31, 16, 0.667, 0.688},
        {28, 2, 2, 31, 21, 0.808, 0.792},  {28, 2, 2, 63, 51, 0.895, 0.877},  {28, 2, 2, 63, 57, 0.950, 0.939},
        {100, 2, 3, 31, 16, 0.762, 0.798}, {100, 2, 3, 31, 21, 0.840, 0.902}, {100, 2, 3, 63, 51, 0.927, 0.942},
        {100, 2, 3, 63, 57, 0.966, 0.960},
    };
    int sys_ok = 0, non_ok = 0;
    for (const auto& e : entries) {
        const double s = rate_systematic(e.n, e.m, e.g);
        const long long r = (e.n - e.m + e.g - 1) / e.g;
        const bool s_exact = s == static_cast<double>(e.m) / static_cast<double>(e.m + r) && round3(s) == e.sys;
        sys_ok += s_exact ? 1 : 0;
        const double ns = rate_nonsystematic(e.n, e.m, e.k, e.l);
        const bool ns_ok = std::abs(ns - e.nonsys) <= 0.001;
        non_ok += ns_ok ? 1 : 0;
        if (!s_exact || !ns_ok)
            o.detail << " mismatch k=" << e.k << " l=" << e.l << " (" << e.n << "," << e.m << "): systematic " << round3(s)
                     << " vs " << e.sys << ", non-systematic " << round3(ns) << " vs " << e.nonsys << ";";
    }
    o.check(sys_ok == 16 && non_ok == 16, "table entries");
    o.detail << " systematic " << sys_ok << "/16, non-systematic " << non_ok << "/16 within 0.001";
}

void table_four(Outcome& o) {
    bool all = true;
    for (long long n : {28LL, 56LL}) {
        const double nn = static_cast<double>(n);
        const double expect[] = {std::log2(454 * nn + 1), std::log2(26 * nn + 1), std::log2(13 * nn + 1),
                                 std::log2(8 * nn + 1) + std::log2(3.0)};
        const RedundancyMethod methods[] = {RedundancyMethod::naive_hamming, RedundancyMethod::hamming_remainder,
                                            RedundancyMethod::improved_hamming, RedundancyMethod::hamming_reduced};
        for (int i = 0; i < 4; ++i) all = all && std::abs(redundancy_bits(methods[i], n, 12, 1, 1) - expect[i]) < 1e-9;
        for (int t = 1; t <= 4; ++t) {
            all = all && std::abs(redundancy_bits(RedundancyMethod::bch_remainder, n, 12, 1, t) - 2 * t * std::log2(nn + 1)) < 1e-9;
            all = all && std::abs(redundancy_bits(RedundancyMethod::bch_reduced, n, 12, 1, t) - 3 * t * std::log2(nn + 1)) < 1e-9;
        }
    }
    o.check(all, "formula mismatch");
    o.detail << "hamming_remainder(28)=" << redundancy_bits(RedundancyMethod::hamming_remainder, 28, 12, 1, 1)
             << ", improved_hamming(56)=" << redundancy_bits(RedundancyMethod::improved_hamming, 56, 12, 1, 1)
             << ", all six rows at n=28 and n=56";
}

void geodesic(Outcome& o) {
    std::size_t words = 0;
    bool all = true;
    for (int k = 0; k <= 12; ++k) {
        const auto alphabet = enumerate_alphabet(k);
        auto lmpe_ball = [&](const Word& x) {
            std::set<Word> out{x};
            for (std::size_t i = 0; i < x.size(); ++i)
                for (const auto& e : symbol_error_ball(x[i], k, 1)) {
                    Word y = x;
                    y[i] = x[i] + e;
                    out.insert(y);
                }
            return out;
        };
        for (const auto& a : alphabet) {
            const Word x{a};
            const auto g = geodesic_ball(x, k, 1, 1);
            all = all && std::set<Word>(g.begin(), g.end()) == lmpe_ball(x);
            ++words;
            for (const auto& b : alphabet) {
                const Word xy{a, b};
                const auto g2 = geodesic_ball(xy, k, 1, 1);
                all = all && std::set<Word>(g2.begin(), g2.end()) == lmpe_ball(xy);
                ++words;
            }
        }
    }
    o.check(all, "ball mismatch");
    o.detail << words << " words (n=1,2; k=0..12) compared";
}

}  // namespace

int main() {
    criterion(1, "k=12 Hamming code end to end", 1, hamming_k12);
    criterion(2, "k=12 code rates", 1, rates);
    criterion(3, "bound gaps at n=1023", 1, bound_gaps);
    criterion(4, "error-count oracles", 10, error_counts);
    criterion(5, "critical vectors", 30, critical);
    criterion(6, "improved Hamming code", 5, improved);
    criterion(7, "reduced-class codec", 30, reduced);
    criterion(8, "Gray mapping k=19", 60, gray);
    criterion(9, "systematic codec", 60, systematic);
    criterion(10, "code-rate table", 1, table_six);
    criterion(11, "redundancy table", 1, table_four);
    criterion(12, "geodesic vs LMPE balls", 10, geodesic);
    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
