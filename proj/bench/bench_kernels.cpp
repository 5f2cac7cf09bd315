// Serial reference kernels against their OpenMP counterparts. Both versions
// return bitwise-identical results; only wall time differs.
#include <benchmark/benchmark.h>

#include "gnts/crealnvp.hpp"
#include "gnts/gnts.hpp"
#include "gnts/ks2d.hpp"
#include "gnts/subts.hpp"
#include "gnts/training.hpp"

namespace {

gnts::GNTSParams example_process() {
  gnts::GNTSParams p;
  p.alpha = {1.25, 1.75};
  p.theta = {3.0, 5.0};
  p.beta = {0.5, -0.8};
  p.mu = {0.0, 0.0};
  p.sigma = {1.0, 1.0};
  p.R = gnts::correlation_2d(-0.7);
  return p;
}

gnts::FlowModel random_flow() {
  auto m = gnts::FlowModel::create({}, 5);
  std::uint64_t k = 0;
  for (int j = 0; j < m.layers(); ++j) {
    for (double& p : m.scale_net(j).params()) p += 1e-3 * static_cast<double>(k++ % 11) - 5e-3;
    for (double& p : m.translate_net(j).params()) p += 1e-3 * static_cast<double>(k++ % 13) - 6e-3;
  }
  return m;
}

gnts::ConditionVector example_condition() {
  gnts::ConditionVector c;
  c.alpha1 = 1.25;
  c.alpha2 = 1.75;
  c.theta1 = 3.0;
  c.theta2 = 5.0;
  c.beta1 = 2.64;
  c.beta2 = -4.49;
  c.rho = -0.7;
  return c;
}

template <bool Parallel>
void BM_SampleSubTS(benchmark::State& st) {
  const gnts::SubTSParams p{1.25, 1.0, 3.0};
  for (auto _ : st) {
    auto v = Parallel ? gnts::sample_subts(p, 1.0, 100000, 1) : gnts::serial::sample_subts(p, 1.0, 100000, 1);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_SampleGNTS(benchmark::State& st) {
  const auto p = example_process();
  for (auto _ : st) {
    auto x = Parallel ? gnts::sample_gnts(p, 1.0, 100000, 2) : gnts::serial::sample_gnts(p, 1.0, 100000, 2);
    benchmark::DoNotOptimize(x.data());
  }
}

template <bool Parallel>
void BM_BuildTrainingSet(benchmark::State& st) {
  gnts::TrainingConfig cfg;
  cfg.n_param_sets = 64;
  cfg.n_per_set = 1024;
  for (auto _ : st) {
    auto s = Parallel ? gnts::build_training_set(cfg) : gnts::serial::build_training_set(cfg);
    benchmark::DoNotOptimize(s.size());
  }
}

template <bool Parallel>
void BM_LogDensity(benchmark::State& st) {
  const auto m = random_flow();
  const auto c = example_condition();
  const Eigen::MatrixXd y = gnts::sample_flow(m, c, 20000, 3);
  for (auto _ : st) {
    auto v = Parallel ? gnts::log_density(m, y, c) : gnts::serial::log_density(m, y, c);
    benchmark::DoNotOptimize(v.data());
  }
}

template <bool Parallel>
void BM_SampleFlow(benchmark::State& st) {
  const auto m = random_flow();
  const auto c = example_condition();
  for (auto _ : st) {
    auto x = Parallel ? gnts::sample_flow(m, c, 20000, 4) : gnts::serial::sample_flow(m, c, 20000, 4);
    benchmark::DoNotOptimize(x.data());
  }
}

void BM_Ks2dSweep(benchmark::State& st) {
  const auto p = example_process();
  const Eigen::MatrixXd a = gnts::sample_gnts(p, 1.0, 1000, 5), b = gnts::sample_gnts(p, 1.0, 20000, 6);
  for (auto _ : st) benchmark::DoNotOptimize(gnts::ks2d_two_sample(a, b).stat);
}

void BM_Ks2dBruteForce(benchmark::State& st) {
  const auto p = example_process();
  const Eigen::MatrixXd a = gnts::sample_gnts(p, 1.0, 1000, 5), b = gnts::sample_gnts(p, 1.0, 20000, 6);
  for (auto _ : st) benchmark::DoNotOptimize(gnts::serial::ks2d_two_sample(a, b).stat);
}

}  // namespace

BENCHMARK(BM_SampleSubTS<false>)->Name("sample_subts/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSubTS<true>)->Name("sample_subts/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleGNTS<false>)->Name("sample_gnts/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleGNTS<true>)->Name("sample_gnts/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTrainingSet<false>)->Name("build_training_set/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildTrainingSet<true>)->Name("build_training_set/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogDensity<false>)->Name("log_density/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogDensity<true>)->Name("log_density/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleFlow<false>)->Name("sample_flow/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleFlow<true>)->Name("sample_flow/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ks2dBruteForce)->Name("ks2d/serial_brute_force")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ks2dSweep)->Name("ks2d/parallel_sweep")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
