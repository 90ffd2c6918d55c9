#pragma once

#include <string_view>
#include <vector>

#include "fedu/federation.hpp"
#include "fedu/retention.hpp"

namespace fedu {

enum class Method { eraser, accum, retrain };

Method method_from_name(std::string_view name);
std::string_view method_name(Method method);

struct UnlearnResult {
  Method method = Method::eraser;
  ParamSet model;
  std::vector<double> step_ms;       // one per model update
  double total_ms = 0.0;
  int calibration_rounds = 0;        // T (rounds for retrain)
  int calibration_trainings = 0;     // client-side training runs performed
  // Model after each update step when hooks.keep_snapshots is set.
  std::vector<ParamSet> trajectory;
};

// Retained magnitude along the fresh direction, per tensor (layer mode) or
// over the whole set (global mode). Where the fresh norm is <= epsilon the
// retained update is kept as is.
ParamSet calibrate_update(const ParamSet& retained, const ParamSet& fresh, double epsilon = 1e-12,
                          NormMode mode = NormMode::layer);

// Rebuilds the global model without the target client from the retained
// updates. The first retained round is applied without calibration; every
// later one runs calibration training on each non-target client from the
// current unlearned model. Target-client blobs and shards are never read.
UnlearnResult fed_eraser(const FedConfig& config, const RetentionStore& store,
                         const ShardSource& shards, const ArchSpec& arch, const ParamSet& initial,
                         const TrainHooks& hooks = {});

// Replays the retained non-target updates without calibration.
UnlearnResult fed_accum(const FedConfig& config, const RetentionStore& store, const ArchSpec& arch,
                        const ParamSet& initial, const TrainHooks& hooks = {});

// FedAvg from build_model(arch, config.seed) with the target client excluded.
UnlearnResult fed_retrain(const FedConfig& config, const ShardSource& shards, const ArchSpec& arch,
                          const TrainHooks& hooks = {});

// interval / ratio.
double expected_speedup(double ratio, int interval);

}  // namespace fedu
