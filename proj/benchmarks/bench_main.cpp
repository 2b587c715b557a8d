#include <benchmark/benchmark.h>

#include <random>

#include "sfcurve/elastic.hpp"
#include "sfcurve/family.hpp"

namespace {

using namespace sfc;

std::mt19937 rng(1234u);
double unif(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

DiscreteCurve make_elastic(SpaceForm form, int n, double delta) {
  const double eta = form == SpaceForm::Hyperbolic ? 3.0 / n : 0.4;
  const ElasticParams params = ElasticParams::make(form, 1.9, delta, eta);
  const auto kappa = kappa_recursion(params, 0.5, 0.6, n - 2);
  return integrate_curvature(form, eta, kappa);
}

void bm_integrate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> kappa(n - 2);
  for (auto& k : kappa) k = unif(-1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_curvature(SpaceForm::Spherical, 0.4, kappa));
  }
}
BENCHMARK(bm_integrate)->Arg(50)->Arg(200);

void bm_curvature(benchmark::State& state) {
  const DiscreteCurve c = make_elastic(SpaceForm::Euclidean, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature(c));
  }
}
BENCHMARK(bm_curvature)->Arg(50)->Arg(200);

void bm_factor_special(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  std::normal_distribution<double> g(0.0, 1.0);
  QuatPoly p({quaternion_from_coords(1.0, g(rng), g(rng), g(rng))});
  for (int i = 0; i < deg; ++i) {
    p = poly_mul(p, linear_factor(quaternion_from_coords(0, g(rng), g(rng), 0)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_factor_special(p, deg));
  }
}
BENCHMARK(bm_factor_special)->Arg(2)->Arg(4);

void bm_backlund_transform(benchmark::State& state) {
  const DiscreteCurve line = integrate_curvature(
      SpaceForm::Euclidean, 0.5, std::vector<double>(state.range(0) - 2, 0.0));
  const Mat2C seed = plane_point(0.05, 0.35);
  for (auto _ : state) {
    benchmark::DoNotOptimize(backlund_transform(line, seed));
  }
}
BENCHMARK(bm_backlund_transform)->Arg(50)->Arg(200);

void bm_associated_transform(benchmark::State& state) {
  const DiscreteCurve c = make_elastic(SpaceForm::Euclidean, static_cast<int>(state.range(0)), 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(associated_transform(c, Complex(1.0)));
  }
}
BENCHMARK(bm_associated_transform)->Arg(50)->Arg(200);

void bm_certify_euclidean(benchmark::State& state) {
  const DiscreteCurve c = make_elastic(SpaceForm::Euclidean, static_cast<int>(state.range(0)),
                                       state.range(1) == 0 ? 0.0 : 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_euclidean(c));
  }
}
BENCHMARK(bm_certify_euclidean)->Args({40, 0})->Args({40, 1})->Args({120, 1});

void bm_certify_transfer(benchmark::State& state) {
  const DiscreteCurve c = make_elastic(SpaceForm::Spherical, 40, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_invariance(c));
  }
}
BENCHMARK(bm_certify_transfer);

}  // namespace

BENCHMARK_MAIN();
