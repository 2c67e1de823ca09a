#include <benchmark/benchmark.h>
#include "ainfb/relations.hpp"

using namespace ainfb;

static void bm_verify_example(benchmark::State &state) {
	HopfAlgebra h = make_z2_type23_example();
	for (auto _ : state)
		benchmark::DoNotOptimize(verify(h));
}
BENCHMARK(bm_verify_example);

static void bm_verify_family_3_4(benchmark::State &state) {
	HopfAlgebra h = make_exterior_family(3, 4, 1, 3);
	for (auto _ : state)
		benchmark::DoNotOptimize(verify(h));
}
BENCHMARK(bm_verify_family_3_4);

static void bm_verify_family_4_2(benchmark::State &state) {
	HopfAlgebra h = make_exterior_family(4, 2, 5, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(verify(h));
}
BENCHMARK(bm_verify_family_4_2);

// the compatibility relation's right side is the deepest composite the
// verifier evaluates, so its per-word cost dominates verification time
static void bm_relation1_rhs(benchmark::State &state) {
	HopfAlgebra h = make_exterior_family(3, 4, 1, 3);
	RelationSides r1 = build_relation1(h);
	std::vector<Word> words = all_words(*h.module, 3);
	for (auto _ : state)
		for (const Word &w : words)
			benchmark::DoNotOptimize(r1.rhs.apply_word(w));
}
BENCHMARK(bm_relation1_rhs);

static void bm_cobar_apply(benchmark::State &state) {
	HopfAlgebra h = make_z2_type23_example();
	MultiOp d3 = cobar_component(h.coproduct, 3);
	char y = (char)h.module->generators.index_of("y");
	Element cube = Element::monomial(h.module, Word(3, y), Scalar::one(h.module->ring));
	for (auto _ : state)
		benchmark::DoNotOptimize(d3.apply(cube));
}
BENCHMARK(bm_cobar_apply);

static void bm_enumerate(benchmark::State &state) {
	for (auto _ : state)
		benchmark::DoNotOptimize(enumerate_types(6, 6, 8));
}
BENCHMARK(bm_enumerate);

BENCHMARK_MAIN();
