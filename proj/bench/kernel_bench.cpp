#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fedu/arch.hpp"
#include "fedu/data.hpp"
#include "fedu/federation.hpp"
#include "fedu/kernels.hpp"
#include "fedu/model.hpp"

namespace {

using namespace fedu;

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

template <auto Kernel>
void BM_dense_forward(benchmark::State& state) {
  const std::size_t batch = static_cast<std::size_t>(state.range(0)), in = 128, out = 64;
  const auto x = random_values(batch * in, 1), w = random_values(in * out, 2), b = random_values(out, 3);
  std::vector<double> y(batch * out);
  for (auto _ : state) {
    Kernel(x.data(), batch, in, w.data(), b.data(), out, y.data());
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch));
}

template <auto Kernel>
void BM_dense_backward_params(benchmark::State& state) {
  const std::size_t batch = static_cast<std::size_t>(state.range(0)), in = 128, out = 64;
  const auto x = random_values(batch * in, 1), dy = random_values(batch * out, 2);
  std::vector<double> dw(in * out), db(out);
  for (auto _ : state) {
    Kernel(x.data(), dy.data(), batch, in, out, dw.data(), db.data());
    benchmark::DoNotOptimize(dw.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch));
}

template <auto Kernel>
void BM_conv_forward(benchmark::State& state) {
  kernels::ConvGeometry g;
  g.batch = static_cast<std::size_t>(state.range(0));
  g.in_channels = 3;
  g.height = g.width = 32;
  g.out_channels = 6;
  g.kernel = 5;
  const auto x = random_values(g.batch * 3 * 32 * 32, 1);
  const auto w = random_values(6 * 3 * 25, 2), b = random_values(6, 3);
  std::vector<double> y(g.batch * 6 * g.out_height() * g.out_width());
  for (auto _ : state) {
    Kernel(x.data(), g, w.data(), b.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.batch));
}

template <auto Kernel>
void BM_conv_backward_params(benchmark::State& state) {
  kernels::ConvGeometry g;
  g.batch = static_cast<std::size_t>(state.range(0));
  g.in_channels = 3;
  g.height = g.width = 32;
  g.out_channels = 6;
  g.kernel = 5;
  const auto x = random_values(g.batch * 3 * 32 * 32, 1);
  const auto dy = random_values(g.batch * 6 * g.out_height() * g.out_width(), 2);
  std::vector<double> dw(6 * 3 * 25), db(6);
  for (auto _ : state) {
    Kernel(x.data(), dy.data(), g, dw.data(), db.data());
    benchmark::DoNotOptimize(dw.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.batch));
}

void BM_local_train_epoch(benchmark::State& state) {
  const Backend backend = state.range(0) == 0 ? Backend::serial : Backend::parallel;
  SyntheticSpec spec;
  spec.samples = 1024;
  spec.features = 64;
  const Dataset ds = make_synthetic(spec, 7);
  const ClientShard shard{1, ds, {}};
  const ArchSpec arch = make_preset(Preset::adult, ds.feature_shape(), 2, 64);
  const ParamSet model = build_model(arch, 1);
  LocalTrainOptions opt;
  opt.epochs = 1;
  opt.lr = 0.05;
  opt.batch_size = 64;
  opt.seed = 1;
  opt.backend = backend;
  for (auto _ : state) benchmark::DoNotOptimize(local_train(shard, model, arch, opt));
  state.SetLabel(backend == Backend::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_dense_forward<fedu::kernels::serial::dense_forward>)->Name("dense_forward/serial")->Arg(64)->Arg(1024);
BENCHMARK(BM_dense_forward<fedu::kernels::parallel::dense_forward>)->Name("dense_forward/parallel")->Arg(64)->Arg(1024);
BENCHMARK(BM_dense_backward_params<fedu::kernels::serial::dense_backward_params>)
    ->Name("dense_backward_params/serial")->Arg(64)->Arg(1024);
BENCHMARK(BM_dense_backward_params<fedu::kernels::parallel::dense_backward_params>)
    ->Name("dense_backward_params/parallel")->Arg(64)->Arg(1024);
BENCHMARK(BM_conv_forward<fedu::kernels::serial::conv2d_forward>)->Name("conv2d_forward/serial")->Arg(16);
BENCHMARK(BM_conv_forward<fedu::kernels::parallel::conv2d_forward>)->Name("conv2d_forward/parallel")->Arg(16);
BENCHMARK(BM_conv_backward_params<fedu::kernels::serial::conv2d_backward_params>)
    ->Name("conv2d_backward_params/serial")->Arg(16);
BENCHMARK(BM_conv_backward_params<fedu::kernels::parallel::conv2d_backward_params>)
    ->Name("conv2d_backward_params/parallel")->Arg(16);
BENCHMARK(BM_local_train_epoch)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
