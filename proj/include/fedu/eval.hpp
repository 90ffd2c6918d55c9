#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedu/arch.hpp"
#include "fedu/data.hpp"
#include "fedu/model.hpp"

namespace fedu {

struct Metrics {
  double accuracy = 0.0;
  double loss = 0.0;
};

// Argmax accuracy (ties to the lowest class) and mean cross-entropy.
Metrics evaluate(const ArchSpec& arch, const ParamSet& params, const Dataset& data);

// Mean over samples of the L2 distance between the two models' probability
// vectors.
double prediction_difference(const ArchSpec& arch, const ParamSet& original,
                             const ParamSet& unlearned, const Dataset& target);

// Angle in degrees between two tensors viewed as flat vectors. Throws
// DomainError if either is all zero.
double angle_deviation(const Tensor& a, const Tensor& b);
// One angle per leading-axis row (per output neuron for a Dense weight).
std::vector<double> angle_deviation_rows(const Tensor& a, const Tensor& b);

// Per sample: posterior sorted descending, one-hot true class, cross-entropy.
// Width 2C + 1.
Tensor build_membership_features(const ArchSpec& arch, const ParamSet& model,
                                 const Dataset& samples);

// Binary member / non-member classifier over membership features.
struct AttackModel {
  ArchSpec arch;
  ParamSet params;
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;

  // Membership probability of each row.
  std::vector<double> predict(const Tensor& rows) const;
  static constexpr double kThreshold = 0.5;
};

struct AttackTrainOptions {
  std::size_t hidden = 16;
  int epochs = 60;
  double lr = 0.01;  // larger steps make the weak membership signal seed-dependent
  std::size_t batch_size = 64;
};

// Trains on the union of both row sets. The larger class is subsampled to the
// size of the smaller one so the classifier sees balanced data.
AttackModel train_attack(const Tensor& member_rows, const Tensor& nonmember_rows,
                         std::uint64_t seed, const AttackTrainOptions& options = {});

struct AttackScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::size_t true_positive = 0, false_positive = 0, true_negative = 0, false_negative = 0;
};

// Member-class precision/recall/F1; F1 is 0 when precision + recall is 0.
AttackScore score_membership(std::span<const int> truth, std::span<const int> predicted);

// Target rows (members) against an equal-size seeded sample of `holdout`
// (non-members), featurised with the victim model.
AttackScore attack_metrics(const AttackModel& attack, const ArchSpec& arch, const ParamSet& victim,
                           const Dataset& target, const Dataset& holdout, std::uint64_t seed);

}  // namespace fedu
