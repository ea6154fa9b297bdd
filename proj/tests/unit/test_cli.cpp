#include <doctest.h>

#include <sstream>

#include "lmpe/constructions.hpp"
#include "lmpe/spec_io.hpp"
#include "lmpe_cli/cli.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Result r;
    r.code = lmpe::cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string spec(const char* name) { return std::string(LMPE_SPEC_DIR) + "/" + name; }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors") {
        CHECK(call({}).code == 2);
        CHECK(call({"frobnicate"}).code == 2);
        CHECK(call({"bounds", "--n", "28"}).code == 2);
        CHECK(call({"bounds", "--n", "28", "--k", "12", "--bogus"}).code == 2);
        CHECK(call({"bounds", "--n", "28", "--k", "12", "--t", "5..1"}).code == 2);
        CHECK(call({"--help"}).code == 0);
    }

    TEST_CASE("build") {
        const auto r = call({"build", "--spec", spec("example1.json")});
        CHECK(r.code == 0);
        CHECK(r.out.find("n=28") != std::string::npos);
        CHECK(call({"build", "--spec", "/nonexistent.json"}).code == 3);
    }

    TEST_CASE("encode and decode round trip") {
        const auto enc = call({"encode", "--spec", spec("example1.json"), "--random", "5", "--seed", "3"});
        REQUIRE(enc.code == 0);
        CHECK(lines(enc.out) == 5);
        const auto dec = call({"decode", "--spec", spec("example1.json")}, enc.out);
        REQUIRE(dec.code == 0);
        const auto again = call({"encode", "--spec", spec("example1.json")}, dec.out);
        REQUIRE(again.code == 0);
        CHECK(again.out == enc.out);
        const auto words = call({"decode", "--spec", spec("example1.json"), "--words"}, "# comment\n\n" + enc.out);
        CHECK(words.out == enc.out);
    }

    TEST_CASE("decode reports malformed input and failures") {
        CHECK(call({"decode", "--spec", spec("example1.json")}, "1,2,3\n").code == 3);
        const auto code = lmpe::LmpeCode::build(lmpe::load_code_spec(spec("example1.json")));
        auto x = code.encode(code.random_message(0));
        const auto b = lmpe::split(x[27], 1).remainder;
        const int sum = (12 - (b[0] + b[1] + b[2] + b[3])) / 3;
        x[27] = lmpe::combine({lmpe::QuotientVector{sum, 0, 0, 0}, b}, 1, 12);
        const auto r = call({"decode", "--spec", spec("example1.json")}, lmpe::format_word(x) + "\n");
        CHECK(r.code == 4);
        CHECK(r.err.find("line 1") != std::string::npos);
    }

    TEST_CASE("simulate is deterministic") {
        const std::vector<std::string> args{"simulate", "--spec", spec("example1.json"), "--trials", "300", "--seed", "7"};
        const auto a = call(args);
        REQUIRE(a.code == 0);
        CHECK(a.out.find("decode_success=300") != std::string::npos);
        CHECK(call(args).out == a.out);
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "4"});
        CHECK(call(threaded).out == a.out);
        auto other = args;
        other[6] = "8";
        CHECK(call(other).code == 0);
        const auto ex = call({"simulate", "--spec", spec("reduced_small.json"), "--exhaustive"});
        CHECK(ex.code == 0);
        CHECK(ex.out.find("miscorrections=0") != std::string::npos);
    }

    TEST_CASE("bounds") {
        const auto r = call({"bounds", "--n", "1023", "--k", "100", "--t", "1..15", "--l", "10", "--csv"});
        CHECK(r.code == 0);
        CHECK(lines(r.out) == 16);
        CHECK(r.out.rfind("t,l,spb_rate,gvb_rate,gap_pp,gv_condition\n", 0) == 0);
        const auto two = call({"bounds", "--n", "1023", "--k", "100", "--t", "15", "--l", "10,20", "--csv"});
        CHECK(lines(two.out) == 3);
    }

    TEST_CASE("searches") {
        const auto none = call({"search-critical", "--l", "5"});
        CHECK(none.code == 0);
        CHECK(none.out.empty());
        const auto one = call({"search-critical", "--l", "1"});
        CHECK(one.out.find("1,1,1,0") != std::string::npos);
        CHECK(call({"search-gray", "--k", "15", "--l", "1", "--g", "2"}).code == 5);
        const auto found = call({"search-gray", "--k", "19", "--l", "1", "--g", "2", "--radius", "1"});
        CHECK(found.code == 0);
        CHECK(found.out.find("efficiency=729/1540") != std::string::npos);
        const auto scan = call({"search-gray", "--k", "17..20", "--l", "1", "--g", "2", "--radius", "1"});
        CHECK(scan.out.find("# smallest k=19") != std::string::npos);
    }

    TEST_CASE("tables") {
        CHECK(lines(call({"tables", "--table", "I", "--csv"}).out) == 28);
        CHECK(lines(call({"tables", "--table", "V", "--csv"}).out) == 13);
        CHECK(lines(call({"tables", "--table", "VI"}).out) == 17);
        CHECK(lines(call({"tables", "--table", "IV"}).out) == 7);
        CHECK(lines(call({"tables", "--table", "reduced", "--l", "1", "--k", "12"}).out) == 10);
        CHECK(call({"tables", "--table", "VII"}).code == 2);
        const auto v = call({"tables", "--table", "V", "--csv"}).out;
        CHECK(v.find("\"0,1,2,0\",a^3,a+2,4") != std::string::npos);
    }
}
