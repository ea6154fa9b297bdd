#include "lmpe_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lmpe/bounds.hpp"
#include "lmpe/classify.hpp"
#include "lmpe/constructions.hpp"
#include "lmpe/error.hpp"
#include "lmpe/gray.hpp"
#include "lmpe/spec_io.hpp"

namespace lmpe::cli {

namespace {

struct Options {
    std::string spec;
    std::string in;
    std::string out;
    std::optional<std::uint64_t> seed;

    // build
    std::string parity_csv;
    std::string gray_out;

    // encode / decode
    std::size_t random = 0;
    std::string messages_out;
    bool words = false;

    // simulate
    std::size_t trials = 1000;
    std::string policy = "up_to_t";
    unsigned threads = 1;
    bool exhaustive = false;
    std::size_t limit = 2'000'000;
    bool timing = false;

    // bounds
    long long n = 0;
    int k = 0;
    std::string t_range = "1";
    std::vector<int> ls{1};
    std::string spb = "relaxed";
    bool csv = false;

    // search-gray
    std::string k_range;
    int l = 1;
    std::optional<std::uint32_t> q;
    int g = 2;
    std::optional<int> radius;

    // tables
    std::string table = "I";
    std::optional<int> table_k;
    std::string critical;
    std::vector<long long> table_n{28, 56};
};

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text, const std::string& what) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
            fail(ErrorKind::invalid_argument, what + " must be N or A..B, got '" + text + "'");
        return std::stoi(s);
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi) fail(ErrorKind::invalid_argument, what + " range is empty: '" + text + "'");
    return r;
}

Quad parse_quad(const std::string& text) {
    Quad v{};
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= kLetters || item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::invalid_argument, "expected four comma-separated integers, got '" + text + "'");
        v[i++] = std::stoi(item);
    }
    if (i != kLetters) fail(ErrorKind::invalid_argument, "expected four comma-separated integers, got '" + text + "'");
    return v;
}

std::string show(const Quad& v) {
    return std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," + std::to_string(v[3]);
}

// Independent seed per (trial, purpose) derived from the master seed.
std::uint64_t substream(std::uint64_t seed, std::uint64_t index, std::uint64_t purpose) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (2 * index + purpose + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int exit_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument:
        case ErrorKind::limit_exceeded: return exit_usage;
        case ErrorKind::data_format: return exit_data_format;
        case ErrorKind::decode_failure: return exit_decode_failure;
        case ErrorKind::search_failure: return exit_search_failure;
    }
    return 1;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) fail(ErrorKind::data_format, "cannot write " + path);
        stream_ = &file_;
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

class Source {
public:
    Source(const std::string& path, std::istream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) fail(ErrorKind::data_format, "cannot open " + path);
        stream_ = &file_;
    }
    std::istream& operator*() { return *stream_; }

private:
    std::ifstream file_;
    std::istream* stream_;
};

bool skip_line(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::string trimmed(const std::string& line) {
    const auto a = line.find_first_not_of(" \t\r");
    const auto b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

[[noreturn]] void rethrow_at(const Error& e, std::size_t line, ErrorKind as) {
    fail(as, "line " + std::to_string(line) + ": " + e.what());
}

std::uint32_t default_q(int l) {
    const auto p = static_cast<std::uint64_t>(divisor(l));
    return largest_prime_power_at_most(p * p * p).q;
}

// ---------------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out) {
    const auto code = LmpeCode::build(load_code_spec(o.spec));
    Sink sink(o.out, out);
    *sink << code.describe() << "\n";
    if (!o.parity_csv.empty()) {
        Sink csv(o.parity_csv, out);
        *csv << parity_check_csv(code.first_layer());
    }
    if (!o.gray_out.empty()) {
        if (!code.gray_mapping()) fail(ErrorKind::invalid_argument, "--gray-out needs a systematic code");
        Sink g(o.gray_out, out);
        write_gray_mapping(*g, *code.gray_mapping());
    }
    return exit_ok;
}

int cmd_encode(const Options& o, std::istream& in, std::ostream& out) {
    const auto spec = load_code_spec(o.spec);
    const auto code = LmpeCode::build(spec);
    Sink sink(o.out, out);
    if (o.random > 0) {
        const std::uint64_t seed = o.seed.value_or(spec.seed.value_or(0));
        std::optional<Sink> messages;
        if (!o.messages_out.empty()) messages.emplace(o.messages_out, out);
        for (std::size_t i = 0; i < o.random; ++i) {
            const auto msg = code.random_message(substream(seed, i, 0));
            if (messages) **messages << format_message(msg) << "\n";
            *sink << format_word(code.encode(msg)) << "\n";
        }
        return exit_ok;
    }
    Source source(o.in, in);
    std::string line;
    std::size_t number = 0;
    while (std::getline(*source, line)) {
        ++number;
        if (skip_line(line)) continue;
        try {
            *sink << format_word(code.encode(parse_message(trimmed(line), spec.k))) << "\n";
        } catch (const Error& e) {
            rethrow_at(e, number, e.kind() == ErrorKind::invalid_argument ? ErrorKind::data_format : e.kind());
        }
    }
    return exit_ok;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
    const auto spec = load_code_spec(o.spec);
    const auto code = LmpeCode::build(spec);
    Sink sink(o.out, out);
    Source source(o.in, in);
    std::string line;
    std::size_t number = 0;
    while (std::getline(*source, line)) {
        ++number;
        if (skip_line(line)) continue;
        try {
            const auto report = code.decode(parse_word(trimmed(line), spec.k));
            *sink << (o.words ? format_word(report.codeword) : format_message(report.message)) << "\n";
        } catch (const Error& e) {
            rethrow_at(e, number, e.kind());
        }
    }
    return exit_ok;
}

struct Tally {
    std::size_t trials = 0;
    std::size_t success = 0;
    std::size_t miscorrections = 0;
    std::size_t failures = 0;
    std::size_t erasures = 0;

    void add(const Tally& other) {
        trials += other.trials;
        success += other.success;
        miscorrections += other.miscorrections;
        failures += other.failures;
        erasures += other.erasures;
    }
};

void attempt(const LmpeCode& code, const Message& msg, const Word& x, const Word& y, Tally& tally) {
    ++tally.trials;
    try {
        const auto report = code.decode(y);
        tally.erasures += report.erasures;
        if (report.codeword == x && report.message == msg)
            ++tally.success;
        else
            ++tally.miscorrections;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::decode_failure) throw;
        ++tally.failures;
    }
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const auto spec = load_code_spec(o.spec);
    const auto code = LmpeCode::build(spec);
    const std::uint64_t seed = o.seed.value_or(spec.seed.value_or(0));
    WeightPolicy policy = WeightPolicy::up_to_t;
    if (o.policy == "exactly_t")
        policy = WeightPolicy::exactly_t;
    else if (o.policy != "up_to_t")
        fail(ErrorKind::invalid_argument, "--policy must be up_to_t or exactly_t");

    const auto start = std::chrono::steady_clock::now();
    Tally total;
    if (o.exhaustive) {
        const auto msg = code.random_message(substream(seed, 0, 0));
        const Word x = code.encode(msg);
        std::vector<std::vector<SymbolError>> balls;
        std::size_t singles = 0;
        for (const auto& sym : x) {
            balls.push_back({});
            for (const auto& e : symbol_error_ball(sym, spec.k, spec.l))
                if (!e.is_zero()) balls.back().push_back(e);
            singles += balls.back().size();
        }
        const bool pairs = spec.t >= 2;
        const double count = pairs ? static_cast<double>(singles) * static_cast<double>(singles) / 2 : singles;
        if (count > static_cast<double>(o.limit))
            fail(ErrorKind::limit_exceeded, "exhaustive injection needs about " + std::to_string(count) +
                                                " decodes, above --limit " + std::to_string(o.limit));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (const auto& e : balls[i]) {
                Word y = x;
                y[i] = x[i] + e;
                attempt(code, msg, x, y, total);
                if (!pairs) continue;
                for (std::size_t j = i + 1; j < x.size(); ++j)
                    for (const auto& f : balls[j]) {
                        Word z = y;
                        z[j] = x[j] + f;
                        attempt(code, msg, x, z, total);
                    }
            }
    } else {
        const unsigned workers = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(o.trials ? o.trials : 1)));
        std::vector<Tally> parts(workers);
        std::vector<std::exception_ptr> errors(workers);
        auto work = [&](unsigned w) {
            try {
                for (std::size_t i = w; i < o.trials; i += workers) {
                    const auto msg = code.random_message(substream(seed, i, 0));
                    const Word x = code.encode(msg);
                    const auto e = sample_lmpe(x, spec.k, spec.l, spec.t, substream(seed, i, 1), policy);
                    attempt(code, msg, x, apply_errors(x, e), parts[w]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& p : parts) total.add(p);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Sink sink(o.out, out);
    *sink << "variant=" << to_string(spec.variant) << "\n"
          << "trials=" << total.trials << "\n"
          << "decode_success=" << total.success << "\n"
          << "miscorrections=" << total.miscorrections << "\n"
          << "decode_failures=" << total.failures << "\n"
          << "erasures_seen=" << total.erasures << "\n"
          << "seed=" << seed << "\n";
    if (o.timing) *sink << "wall_time=" << std::fixed << std::setprecision(3) << seconds << "\n";
    return total.success == total.trials ? exit_ok : exit_decode_failure;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const Range t = parse_range(o.t_range, "--t");
    SpbVariant variant = SpbVariant::relaxed;
    if (o.spb == "exact")
        variant = SpbVariant::exact;
    else if (o.spb != "relaxed")
        fail(ErrorKind::invalid_argument, "--spb must be relaxed or exact");
    Sink sink(o.out, out);
    auto& os = *sink;
    os << std::fixed << std::setprecision(6);
    if (o.csv)
        os << "t,l,spb_rate,gvb_rate,gap_pp,gv_condition\n";
    else
        os << std::setw(4) << "t" << std::setw(5) << "l" << std::setw(12) << "SPB" << std::setw(12) << "GVB"
           << std::setw(10) << "gap(pp)" << "  GV condition\n";
    for (int l : o.ls)
        for (int tt = t.lo; tt <= t.hi; ++tt) {
            const auto spb = sphere_packing(o.n, o.k, tt, l, variant);
            const auto gv = gv_bound(o.n, o.k, tt, l);
            const double gap = 100.0 * (spb.rate - gv.rate);
            if (o.csv)
                os << tt << "," << l << "," << spb.rate << "," << gv.rate << "," << gap << ","
                   << (gv.condition_met ? 1 : 0) << "\n";
            else
                os << std::setw(4) << tt << std::setw(5) << l << std::setw(12) << spb.rate << std::setw(12) << gv.rate
                   << std::setw(10) << std::setprecision(3) << gap << std::setprecision(6) << "  "
                   << (gv.condition_met ? "met" : "not met") << "\n";
        }
    return exit_ok;
}

int cmd_search_gray(const Options& o, std::ostream& out) {
    const Range ks = parse_range(o.k_range, "--k");
    const std::uint32_t q = o.q.value_or(default_q(o.l));
    GraySearchOptions options;
    options.ball_radius = o.radius;
    const int radius = o.radius.value_or(2 * o.l);
    Sink sink(o.out.empty() || ks.lo == ks.hi ? std::string{} : o.out, out);
    auto& os = *sink;
    auto ratio_text = [](const Ratio& r) {
        std::ostringstream s;
        s << r.numerator << "/" << r.denominator << " (" << std::setprecision(6) << r.value() << ")";
        return s.str();
    };

    if (ks.lo == ks.hi) {
        const auto mapping = gray_search(ks.lo, o.l, q, o.g, options);
        if (!mapping)
            fail(ErrorKind::search_failure, "no Gray mapping found for k=" + std::to_string(ks.lo) + " l=" +
                                                std::to_string(o.l) + " q=" + std::to_string(q) +
                                                " g=" + std::to_string(o.g) + " radius=" + std::to_string(radius));
        if (!o.out.empty()) {
            Sink file(o.out, out);
            write_gray_mapping(*file, *mapping);
        }
        os << "k=" << ks.lo << " l=" << o.l << " q=" << q << " g=" << o.g << " radius=" << radius << "\n"
           << "size=" << mapping->size() << "\n"
           << "valid_2l=" << (gray_validate(*mapping) ? "yes" : "no") << "\n"
           << "valid_l=" << (gray_validate(*mapping, o.l) ? "yes" : "no") << "\n"
           << "efficiency=" << ratio_text(gray_efficiency(q, o.g, ks.lo)) << "\n"
           << "existence_k=" << gray_existence_k(o.l, q, o.g) << "\n";
        return exit_ok;
    }

    std::optional<int> smallest;
    os << "k,found,valid_2l,valid_l,efficiency\n";
    for (int k = ks.lo; k <= ks.hi; ++k) {
        std::optional<GrayMapping> mapping;
        if (alphabet_size(k) >= static_cast<std::uint64_t>(std::pow(static_cast<double>(q), o.g)))
            mapping = gray_search(k, o.l, q, o.g, options);
        const bool v2 = mapping && gray_validate(*mapping);
        const bool v1 = mapping && gray_validate(*mapping, o.l);
        if (mapping && !smallest) smallest = k;
        os << k << "," << (mapping ? 1 : 0) << "," << (v2 ? 1 : 0) << "," << (v1 ? 1 : 0) << ","
           << std::setprecision(6) << gray_efficiency(q, o.g, k).value() << "\n";
    }
    if (!smallest) fail(ErrorKind::search_failure, "no Gray mapping found in k=" + o.k_range);
    os << "# smallest k=" << *smallest << "\n";
    return exit_ok;
}

int cmd_search_critical(const Options& o, std::ostream& out) {
    const auto found = find_critical_vectors(o.l);
    const int k = o.table_k.value_or(4 * divisor(o.l));
    Sink sink(o.out, out);
    if (o.csv) *sink << "vector,valid\n";
    for (const auto& b : found) {
        const bool ok = validate_classification(ReducedClassTable::build(o.l, k, b), o.l);
        if (o.csv)
            *sink << "\"" << show(b) << "\"," << (ok ? 1 : 0) << "\n";
        else
            *sink << show(b) << (ok ? "" : "  invalid") << "\n";
    }
    return exit_ok;
}

std::string polynomial_text(const std::vector<int>& coeffs) {
    std::string s;
    const auto m = coeffs.size();
    for (std::size_t i = 0; i < m; ++i) {
        const int c = coeffs[i];
        const auto power = m - 1 - i;
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (c != 1 || power == 0) s += std::to_string(c);
        if (power >= 1) s += "a";
        if (power >= 2) s += "^" + std::to_string(power);
    }
    return s.empty() ? "0" : s;
}

int cmd_tables(const Options& o, std::ostream& out) {
    Sink sink(o.out, out);
    auto& os = *sink;
    const char sep = o.csv ? ',' : ' ';
    std::string which = o.table;
    std::transform(which.begin(), which.end(), which.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

    if (which == "I") {
        const auto map = RemainderClassMap::table_one();
        os << (o.csv ? "remainder,element\n" : "remainder  element\n");
        for (const auto& [b, e] : map.entries())
            os << (o.csv ? "\"" + show(b) + "\"" : show(b)) << (o.csv ? "," : "    ") << e.value << "\n";
    } else if (which == "III") {
        os << (o.csv ? "l,critical_vector\n" : "l  critical vectors\n");
        for (int l = 1; l <= 4; ++l) {
            const auto found = find_critical_vectors(l);
            if (o.csv) {
                for (const auto& b : found) os << l << ",\"" << show(b) << "\"\n";
            } else {
                os << l << " ";
                for (const auto& b : found) os << " (" << show(b) << ")";
                os << "\n";
            }
        }
    } else if (which == "IV") {
        const int k = o.table_k.value_or(12);
        os << "method" << sep << "field_size";
        for (auto n : o.table_n) os << sep << "bits_n" << n;
        os << "\n" << std::fixed << std::setprecision(4);
        const RedundancyMethod methods[] = {RedundancyMethod::naive_hamming,  RedundancyMethod::hamming_remainder,
                                            RedundancyMethod::improved_hamming, RedundancyMethod::hamming_reduced,
                                            RedundancyMethod::bch_remainder,  RedundancyMethod::bch_reduced};
        for (auto m : methods) {
            std::uint64_t field = 27;
            if (m == RedundancyMethod::naive_hamming) field = alphabet_size(k);
            if (m == RedundancyMethod::hamming_reduced) field = 9;
            os << to_string(m) << sep << field;
            for (auto n : o.table_n) os << sep << redundancy_bits(m, n, k, 1, 1);
            os << "\n";
        }
    } else if (which == "V") {
        const int p = divisor(o.l);
        require(is_prime(p), "table V needs 2l+1 prime");
        const Field field = Field::make(p, 3);
        std::vector<std::pair<std::uint32_t, RemainderVector>> rows;
        for (const auto& d : remainder_error_patterns(o.l)) {
            const int coeffs[3] = {d[0], d[1], d[2]};
            rows.emplace_back(field.from_coefficients(coeffs).value, d);
        }
        std::sort(rows.begin(), rows.end());
        os << (o.csv ? "pattern,power,polynomial,integer\n" : "pattern   power  polynomial  integer\n");
        for (const auto& [v, d] : rows) {
            const FieldElement e{v};
            const std::string power = "a^" + std::to_string(field.log(e));
            if (o.csv)
                os << "\"" << show(d) << "\"," << power << "," << polynomial_text(field.coefficients(e)) << "," << v << "\n";
            else
                os << std::left << std::setw(10) << show(d) << std::setw(7) << power << std::setw(12)
                   << polynomial_text(field.coefficients(e)) << v << std::right << "\n";
        }
    } else if (which == "VI") {
        struct Row {
            int k, l, g;
        };
        const Row rows[] = {{19, 1, 2}, {65, 1, 3}, {28, 2, 2}, {100, 2, 3}};
        const std::pair<long long, long long> cols[] = {{31, 16}, {31, 21}, {63, 51}, {63, 57}};
        os << "k,l,g,n,m,systematic,nonsystematic\n" << std::fixed << std::setprecision(3);
        for (const auto& r : rows)
            for (const auto& [n, m] : cols)
                os << r.k << "," << r.l << "," << r.g << "," << n << "," << m << "," << rate_systematic(n, m, r.g)
                   << "," << rate_nonsystematic(n, m, r.k, r.l) << "\n";
    } else if (which == "REDUCED") {
        const int k = o.table_k.value_or(4 * divisor(o.l));
        RemainderVector critical{};
        if (!o.critical.empty()) {
            critical = parse_quad(o.critical);
        } else {
            const auto found = find_critical_vectors(o.l);
            if (found.empty()) fail(ErrorKind::search_failure, "no critical vector for l=" + std::to_string(o.l));
            critical = found.front();
        }
        const auto table = ReducedClassTable::build(o.l, k, critical);
        os << "row";
        for (int c = 0; c < table.column_count(); ++c) os << sep << "col" << c;
        os << "\n";
        for (std::size_t r = 0; r < table.row_count(); ++r) {
            os << r;
            for (int c = 0; c < table.column_count(); ++c)
                os << sep << (o.csv ? "\"" + show(table.at(r, c)) + "\"" : "(" + show(table.at(r, c)) + ")");
            os << "\n";
        }
    } else {
        fail(ErrorKind::invalid_argument, "--table must be one of I, III, IV, V, VI, reduced");
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Limited-magnitude probability-error correction codes for composite DNA symbols", "lmpe"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    auto* build = app.add_subcommand("build", "Build a code from a JSON spec and describe it");
    build->add_option("--spec", o.spec, "Code spec (JSON)")->required();
    build->add_option("--out", o.out, "Write the description here instead of stdout");
    build->add_option("--parity-check", o.parity_csv, "Write the first-layer parity-check matrix as CSV");
    build->add_option("--gray-out", o.gray_out, "Write the Gray mapping of a systematic code");

    auto* encode = app.add_subcommand("encode", "Encode message lines (symbols 'a,b,c,d;...|i1,i2') into codeword lines");
    encode->add_option("--spec", o.spec, "Code spec (JSON)")->required();
    encode->add_option("--in", o.in, "Message file (default stdin)");
    encode->add_option("--out", o.out, "Codeword file (default stdout)");
    encode->add_option("--random", o.random, "Encode N random messages instead of reading input");
    encode->add_option("--messages", o.messages_out, "With --random: also write the messages here");
    encode->add_option("--seed", o.seed, "Master seed for --random");

    auto* decode = app.add_subcommand("decode", "Decode received codeword lines into message lines");
    decode->add_option("--spec", o.spec, "Code spec (JSON)")->required();
    decode->add_option("--in", o.in, "Received words (default stdin)");
    decode->add_option("--out", o.out, "Output file (default stdout)");
    decode->add_flag("--words", o.words, "Print corrected codewords instead of messages");

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo (l,t) LMPE channel simulation");
    simulate->add_option("--spec", o.spec, "Code spec (JSON)")->required();
    simulate->add_option("--trials", o.trials, "Number of random trials");
    simulate->add_option("--seed", o.seed, "Master seed (default: spec seed or 0)");
    simulate->add_option("--policy", o.policy, "Corrupted-symbol count: up_to_t or exactly_t");
    simulate->add_option("--threads", o.threads, "Worker threads");
    simulate->add_flag("--exhaustive", o.exhaustive, "Inject every error word of weight <= min(t,2) into one codeword");
    simulate->add_option("--limit", o.limit, "Guard on the number of exhaustive decodes");
    simulate->add_flag("--timing", o.timing, "Append wall_time to the report");
    simulate->add_option("--out", o.out, "Report file (default stdout)");
    simulate->footer("Report lines: variant, trials, decode_success, miscorrections, decode_failures, erasures_seen, seed.");

    auto* bounds = app.add_subcommand("bounds", "Sphere-packing and Gilbert-Varshamov rate bounds");
    bounds->add_option("--n", o.n, "Code length")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--k", o.k, "Resolution")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--t", o.t_range, "Error count N or range A..B");
    bounds->add_option("--l", o.ls, "Error magnitude(s), comma separated")->delimiter(',');
    bounds->add_option("--spb", o.spb, "Sphere-packing variant: relaxed or exact");
    bounds->add_flag("--csv", o.csv, "CSV output");
    bounds->add_option("--out", o.out, "Output file (default stdout)");
    bounds->footer("CSV columns: t, l, spb_rate, gvb_rate, gap_pp (percentage points), gv_condition (1 if met).");

    auto* gray = app.add_subcommand("search-gray", "Greedy Gray mapping search");
    gray->add_option("--k", o.k_range, "Resolution N, or range A..B to scan")->required();
    gray->add_option("--l", o.l, "Error magnitude")->check(CLI::PositiveNumber);
    gray->add_option("--q", o.q, "Field order (default: largest prime power <= (2l+1)^3)");
    gray->add_option("--g", o.g, "Digits per Gray word")->check(CLI::PositiveNumber);
    gray->add_option("--radius", o.radius, "LMPE magnitude of the Gray neighbourhood (default 2l)");
    gray->add_option("--out", o.out, "Single k: write the mapping here");
    gray->footer("Range CSV columns: k, found, valid_2l, valid_l, efficiency (q^g / C(k+3,3)).");

    auto* critical = app.add_subcommand("search-critical", "List the critical vectors for l");
    critical->add_option("--l", o.l, "Error magnitude")->required()->check(CLI::PositiveNumber);
    critical->add_option("--k", o.table_k, "Resolution used to validate each classification (default 4(2l+1))");
    critical->add_flag("--csv", o.csv, "CSV output (columns: vector, valid)");
    critical->add_option("--out", o.out, "Output file (default stdout)");

    auto* tables = app.add_subcommand("tables", "Print reference tables");
    tables->add_option("--table", o.table, "I, III, IV, V, VI or reduced");
    tables->add_option("--l", o.l, "Error magnitude (V, reduced)")->check(CLI::PositiveNumber);
    tables->add_option("--k", o.table_k, "Resolution (IV, reduced)");
    tables->add_option("--critical", o.critical, "Critical vector 'a,b,c,d' (reduced)");
    tables->add_option("--n", o.table_n, "Code lengths (IV)")->delimiter(',');
    tables->add_flag("--csv", o.csv, "CSV output");
    tables->add_option("--out", o.out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (build->parsed()) return cmd_build(o, out);
        if (encode->parsed()) return cmd_encode(o, in, out);
        if (decode->parsed()) return cmd_decode(o, in, out);
        if (simulate->parsed()) return cmd_simulate(o, out);
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (gray->parsed()) return cmd_search_gray(o, out);
        if (critical->parsed()) return cmd_search_critical(o, out);
        if (tables->parsed()) return cmd_tables(o, out);
    } catch (const Error& e) {
        err << "lmpe: " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        err << "lmpe: internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}

}  // namespace lmpe::cli
