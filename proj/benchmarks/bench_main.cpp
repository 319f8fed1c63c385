#include <benchmark/benchmark.h>

#include "disep/classify.hpp"
#include "disep/pencil.hpp"
#include "disep/quad.hpp"

using namespace disep;

namespace {

void BM_FieldMultiply(benchmark::State& state) {
  const ExtensionDescriptor ext{2, 3};
  const FieldElement a(std::vector<Rational>{1, Rational(2, 3), Rational(-5, 7), 4}, ext);
  FieldElement x = FieldElement::one(ext);
  for (auto _ : state) {
    x = x * a;
    if (x.coord(0).numerator().get_str().size() > 200) x = FieldElement::one(ext);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMultiply);

void BM_VerifyCase(benchmark::State& state) {
  const CaseTag tag = theorem1_tags()[static_cast<std::size_t>(state.range(0))];
  Rng rng(1);
  const CanonicalCase c = random_case(tag, rng);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1_case(c));
  state.SetLabel(to_string(tag));
}
BENCHMARK(BM_VerifyCase)->DenseRange(0, 10)->Unit(benchmark::kMillisecond);

void BM_SymbolicPencil(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tangential_pencil_equation(TangentialConic::symbolic()));
}
BENCHMARK(BM_SymbolicPencil)->Unit(benchmark::kMillisecond);

void BM_QuadSynthesis(benchmark::State& state) {
  const CanonicalCase b(CaseTag::B, {{"e", FieldElement(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(quad_for_case(b, Rational(5, 4), Rational(13, 12)));
}
BENCHMARK(BM_QuadSynthesis)->Unit(benchmark::kMillisecond);

void BM_CubeConsistency(benchmark::State& state) {
  const CanonicalCase b(CaseTag::B, {{"e", FieldElement(1)}});
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_3d_consistency(b, Rational(5, 4), Rational(13, 12), Rational(5, 3), 100, 7,
                             EdgeSignConvention::alternating, threads));
  }
}
BENCHMARK(BM_CubeConsistency)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
