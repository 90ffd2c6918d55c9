#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fedu/arch.hpp"
#include "fedu/data.hpp"
#include "fedu/model.hpp"

namespace fedu {

class RetentionStore;

enum class AggregationMode {
  standard,     // sum N_k U_k / sum N_k
  literal_eq2,  // standard / (number of contributing clients)
};

enum class NormMode { layer, global };

AggregationMode aggregation_mode_from_name(std::string_view name);
std::string_view aggregation_mode_name(AggregationMode mode);
NormMode norm_mode_from_name(std::string_view name);
std::string_view norm_mode_name(NormMode mode);

struct FedConfig {
  std::string dataset = "synthetic";
  int clients = 20;        // K
  int rounds = 20;         // E
  int local_epochs = 4;    // E_local
  int interval = 2;        // retaining interval
  double ratio = 0.5;      // calibration ratio r = E_cali / E_local
  double lr = 0.05;
  std::size_t batch_size = 32;
  std::uint64_t seed = 1;
  int target_client = 1;   // k_u, 1-based
  AggregationMode aggregation = AggregationMode::standard;
  NormMode norm = NormMode::layer;
  double epsilon = 1e-12;  // degenerate-direction threshold for calibration

  // ceil(ratio * local_epochs), at least 1.
  int calibration_epochs() const;
  // Every violated constraint, empty when valid.
  std::vector<std::string> problems() const;
  // Throws ConfigError listing problems().
  void validate() const;
};

struct ClientUpdate {
  int client_id = 0;
  int round = 0;
  ParamSet delta;  // trained - downloaded
  std::size_t sample_count = 0;
  double mean_loss = 0.0;       // mean mini-batch loss over the local run
  bool batch_clamped = false;   // batch size exceeded the shard and was clamped
};

// Access to client shards by id. Every lookup is reported to the observer,
// which lets tests prove that a procedure never touched a given client.
class ShardSource {
 public:
  ShardSource(std::span<const ClientShard> shards,
              std::function<void(int client)> observer = {});

  const ClientShard& get(int client_id) const;
  std::vector<int> client_ids() const;
  std::size_t size() const noexcept { return shards_.size(); }

 private:
  std::span<const ClientShard> shards_;
  std::function<void(int)> observer_;
};

struct TrainHooks {
  // Called once per local training run (including calibration training).
  // May be invoked concurrently.
  std::function<void(int client, int round)> on_local_train;
  std::ostream* log = nullptr;
  bool keep_snapshots = false;
  Backend backend = Backend::parallel;
};

// Identifies the random stream of a local run.
enum class TrainStream : std::uint64_t { federated = 1, calibration = 2 };

struct LocalTrainOptions {
  int epochs = 1;
  double lr = 0.05;
  std::size_t batch_size = 32;
  std::uint64_t seed = 1;
  int round = 1;
  TrainStream stream = TrainStream::federated;
  Backend backend = Backend::parallel;
};

// Mini-batch SGD from `global` on the shard; the per-epoch shuffle is seeded
// from (seed, client, round, stream).
ClientUpdate local_train(const ClientShard& shard, const ParamSet& global, const ArchSpec& arch,
                         const LocalTrainOptions& options);

// Order-insensitive: updates are reduced in client-id order.
ParamSet aggregate(std::span<const ClientUpdate> updates,
                   AggregationMode mode = AggregationMode::standard);

struct RoundHistory {
  std::vector<ParamSet> snapshots;  // snapshots[i] = global model after round i+1
  std::vector<double> round_ms;
  std::vector<double> mean_client_loss;
};

struct FedAvgResult {
  ParamSet model;
  RoundHistory history;
  double total_ms = 0.0;
};

// FedAvg for config.rounds rounds starting from `initial`. Clients in
// `exclude` never train. If `sink` is given, every retained round's updates
// are stored there.
FedAvgResult run_fedavg(const FedConfig& config, const ShardSource& shards, const ArchSpec& arch,
                        const ParamSet& initial, RetentionStore* sink = nullptr,
                        const std::set<int>& exclude = {}, const TrainHooks& hooks = {});

}  // namespace fedu
