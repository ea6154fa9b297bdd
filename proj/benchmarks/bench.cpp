#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "lmpe/blockcodes.hpp"
#include "lmpe/constructions.hpp"
#include "lmpe/field.hpp"
#include "lmpe/gray.hpp"
#include "lmpe/prob.hpp"

using namespace lmpe;

namespace {

LmpeCodeSpec remainder_spec() {
    LmpeCodeSpec spec;
    spec.k = 12;
    spec.q = 27;
    spec.r = 2;
    spec.n = 28;
    return spec;
}

void BM_FieldMul(benchmark::State& state) {
    const Field f = Field::make(3, static_cast<int>(state.range(0)));
    std::uint32_t a = 1, b = 2;
    for (auto _ : state) {
        const auto c = f.mul(FieldElement{a}, FieldElement{b});
        benchmark::DoNotOptimize(c);
        a = c.value == 0 ? 1 : c.value;
        b = b + 1 == f.order() ? 1 : b + 1;
    }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(6);

void BM_BchDecode(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    const Field f = Field::make(3, 3);
    const auto code = BlockCode::bch(f, 2, t, 100);
    Symbols info(code.dimension());
    for (std::size_t i = 0; i < info.size(); ++i) info[i] = FieldElement{static_cast<std::uint32_t>((5 * i + 1) % 27)};
    auto y = code.encode(info);
    for (int i = 0; i < t; ++i) y[static_cast<std::size_t>(11 * i + 3)] = f.add(y[static_cast<std::size_t>(11 * i + 3)], FieldElement{7});
    for (auto _ : state) benchmark::DoNotOptimize(code.decode(y));
}
BENCHMARK(BM_BchDecode)->Arg(1)->Arg(2)->Arg(4);

void BM_LmpeEncode(benchmark::State& state) {
    const auto code = LmpeCode::build(remainder_spec());
    const auto msg = code.random_message(1);
    for (auto _ : state) benchmark::DoNotOptimize(code.encode(msg));
}
BENCHMARK(BM_LmpeEncode);

void BM_LmpeDecode(benchmark::State& state) {
    const auto code = LmpeCode::build(remainder_spec());
    const auto x = code.encode(code.random_message(1));
    const auto y = apply_errors(x, sample_lmpe(x, 12, 1, 1, 9, WeightPolicy::exactly_t));
    for (auto _ : state) benchmark::DoNotOptimize(code.decode(y));
}
BENCHMARK(BM_LmpeDecode);

void BM_GraySearch(benchmark::State& state) {
    GraySearchOptions options;
    options.ball_radius = 1;
    for (auto _ : state) benchmark::DoNotOptimize(gray_search(static_cast<int>(state.range(0)), 1, 27, 2, options));
}
BENCHMARK(BM_GraySearch)->Arg(19)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
