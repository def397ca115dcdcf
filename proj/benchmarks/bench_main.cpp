#include <benchmark/benchmark.h>

#include <isokit/cube.hpp>
#include <isokit/designs.hpp>
#include <isokit/gen.hpp>
#include <isokit/isotopy.hpp>
#include <isokit/recover.hpp>
#include <isokit/refine.hpp>

using namespace isokit;

namespace {

void BM_find_cube_sequence(benchmark::State& state) {
  auto l = gen::random_latin_square(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto s = cube::find_cube_sequence(l, 1);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_find_cube_sequence)->Arg(8)->Arg(12)->Arg(16);

void BM_isotopy_normal(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto l1 = gen::random_latin_square(n, 11);
  auto l2 = gen::random_latin_square(n, 12);
  for (auto _ : state) {
    auto r = iso::isotopy_normal_form(l1, l2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_isotopy_normal)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_isotopy_cube(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto l1 = gen::random_latin_square(n, 11);
  auto l2 = gen::random_latin_square(n, 12);
  for (auto _ : state) {
    auto r = iso::isotopy_cube(l1, l2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_isotopy_cube)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_recover_latin_square(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = recover::latin_square_graph(gen::random_latin_square(n, 5));
  for (auto _ : state) {
    auto l = recover::recover_latin_square(g);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_recover_latin_square)->Arg(5)->Arg(7)->Arg(10);

void BM_recover_steiner2(benchmark::State& state) {
  int v = static_cast<int>(state.range(0));
  auto g = recover::block_graph(gen::sts(v));
  for (auto _ : state) {
    auto d = recover::recover_steiner2(g, v, 3);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_recover_steiner2)->Arg(15)->Arg(19)->Arg(25);

void BM_color_refine_stable(benchmark::State& state) {
  auto g = gen::paley_conference(static_cast<int>(state.range(0)));
  auto init = refine::uniform_coloring(g);
  for (auto _ : state) {
    auto c = refine::color_refine(g, init, refine::kStable, true);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_color_refine_stable)->Arg(13)->Arg(29)->Arg(61);

void BM_conference_iso(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  auto g = gen::paley_conference(q);
  // A fixed vertex relabeling is the isomorphic partner.
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = (i * 2 + 3) % q;
  Graph h(q);
  for (auto [u, v] : g.edges())
    h.add_edge(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  for (auto _ : state) {
    auto r = refine::conference_iso(g, h);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_conference_iso)->Arg(13)->Arg(17)->Arg(29);

}  // namespace

BENCHMARK_MAIN();
