#include <benchmark/benchmark.h>

#include <random>

#include "gheights/heights.hpp"
#include "gheights/maximal_order.hpp"
#include "gheights/molien.hpp"

using namespace gheights;

namespace {

FieldPtr zeta7_plus() { return NumberField::create({Int(-1), Int(-2), Int(1), Int(1)}); }

GAlgebra zeta7_algebra() {
    auto f = zeta7_plus();
    FieldElement t = FieldElement::generator(f);
    FieldElement s1 = t * t - FieldElement::from_rational(f, 2);
    FieldElement s2 = s1 * s1 - FieldElement::from_rational(f, 2);
    return GAlgebra::galois_field(f, GaloisAction(FiniteGroup::cyclic(3), {t, s1, s2}));
}

ZMat random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> entry(-100, 100);
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

void BM_hnf_8x8(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<ZMat> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(8, rng));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(row_hnf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_hnf_8x8);

void BM_colon_cubic(benchmark::State& state) {
    auto f = zeta7_plus();
    Order o = maximal_order(f);
    KLattice seven = o.lattice().scale(Rat(7));
    for (auto _ : state) benchmark::DoNotOptimize(colon(o.lattice(), seven));
}
BENCHMARK(BM_colon_cubic);

void BM_maximal_order_dedekind(benchmark::State& state) {
    for (auto _ : state) {
        auto f = NumberField::create({Int(-8), Int(-2), Int(-1), Int(1)});
        benchmark::DoNotOptimize(maximal_order(f, maximal_order(f).lattice().rational_basis()));
    }
}
BENCHMARK(BM_maximal_order_dedekind);

void BM_height_cubic_pair(benchmark::State& state) {
    GAlgebra alg = zeta7_algebra();
    Pair p(alg, {Rat(0), Rat(-1), Rat(0)});
    for (auto _ : state) benchmark::DoNotOptimize(height(p));
}
BENCHMARK(BM_height_cubic_pair);

void BM_molien_s3(benchmark::State& state) {
    auto s3 = FiniteGroup::symmetric(3);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_dimension_bruteforce(*s3));
}
BENCHMARK(BM_molien_s3);

void BM_enumerate_c3(benchmark::State& state) {
    auto c3 = FiniteGroup::cyclic(3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_split_points(c3, Rat(8)));
}
BENCHMARK(BM_enumerate_c3);

}  // namespace

BENCHMARK_MAIN();
