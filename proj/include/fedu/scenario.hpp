#pragma once

// Experiment orchestration: config files, the train -> unlearn -> attack ->
// report pipeline, and parameter sweeps.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fedu/data.hpp"
#include "fedu/eval.hpp"
#include "fedu/federation.hpp"
#include "fedu/unlearning.hpp"

namespace fedu {

enum class AngleMode { flattened, per_neuron };

struct DataSettings {
  std::filesystem::path path;       // dataset file or directory; unused for synthetic
  std::size_t max_train = 0;        // 0 = no cap
  std::size_t max_test = 0;
  double test_fraction = 0.2;
  SyntheticSpec synthetic;
  std::size_t hidden = 64;          // width of the first FC layer
};

struct Scenario {
  FedConfig fed;
  DataSettings data;
  std::filesystem::path out_dir = "runs/default";
  std::vector<std::string> methods = {"fedavg", "eraser", "accum", "retrain"};
  bool attack = true;
  bool angles = true;
  AngleMode angle_mode = AngleMode::flattened;
  AttackTrainOptions attack_options;
  std::filesystem::path config_dir;  // relative data paths resolve against this

  bool runs(std::string_view method) const;
  std::vector<std::string> problems() const;
};

// INI-style file with [federation], [data], [run] and [attack] sections.
// Relative data and output paths resolve against the config file directory.
// Throws ConfigError listing every unknown key and invalid value.
Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const std::string& text, const std::filesystem::path& config_dir = {});
std::string scenario_to_ini(const Scenario& scenario);

// Data for one run: splits, shards and the two disjoint held-out halves used
// by the membership attack.
struct Workspace {
  ArchSpec arch;
  Dataset train;
  Dataset test;
  std::vector<ClientShard> shards;
  Dataset attack_nonmembers;  // first half of test: attack training negatives
  Dataset attack_holdout;     // second half of test: attack evaluation negatives
};

Workspace prepare_workspace(const Scenario& scenario);

// Pipeline steps. Each reads and writes artifacts under scenario.out_dir.
void run_train(const Scenario& scenario, const Workspace& ws, bool resume = false);
UnlearnResult run_unlearn(const Scenario& scenario, const Workspace& ws, Method method);
void run_attack(const Scenario& scenario, const Workspace& ws);

struct ModelReport {
  std::string name;
  Metrics test;
  Metrics target;
  std::optional<double> prediction_difference;  // against the FedAvg model
  std::optional<AttackScore> attack;
  std::optional<double> wall_ms;
  std::optional<double> measured_speedup;       // retrain wall-clock / this method's
};

struct AngleReport {
  std::string pair;  // "eraser_vs_retrain", "accum_vs_retrain"
  std::vector<double> values;
  double mean = 0.0;
  std::vector<std::size_t> histogram;  // 5-degree bins over [0, 180]
};

struct EvalReport {
  std::vector<ModelReport> models;
  std::vector<AngleReport> angles;
  double expected_speedup = 0.0;
  int retained_rounds = 0;
  std::size_t retained_bytes = 0;
  std::size_t target_samples = 0;

  const ModelReport* model(std::string_view name) const;
  const AngleReport* angle(std::string_view pair) const;
};

// Evaluates whatever models exist in the run directory and writes
// report.json, metrics.csv and timings.csv.
EvalReport build_report(const std::filesystem::path& run_dir);
EvalReport build_report(const Scenario& scenario, const Workspace& ws);

// Train, every requested method, attack, report.
EvalReport run_scenario(const Scenario& scenario, bool resume = false);

enum class SweepParam { ratio, interval, clients };
SweepParam sweep_param_from_name(std::string_view name);

struct SweepRow {
  double value = 0.0;
  double target_accuracy = 0.0;
  double test_accuracy = 0.0;
  double eraser_ms = 0.0;
  double retrain_ms = 0.0;
  double measured_speedup = 0.0;
  double expected_speedup = 0.0;
  bool degenerate = false;  // r = 1: calibration is full retraining
  std::string error;
};

// One scenario per value under <out>/sweep_<param>/<value>; failures are
// recorded in the row and the sweep continues. Writes sweep_<param>.csv.
std::vector<SweepRow> run_sweep(const Scenario& scenario, SweepParam param,
                                const std::vector<double>& values);

}  // namespace fedu
