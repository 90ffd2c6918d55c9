#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fedu/arch.hpp"
#include "fedu/kernels.hpp"
#include "fedu/tensor.hpp"

namespace fedu {

// Inputs carry a leading batch dimension followed by the per-sample shape.
struct Batch {
  Tensor inputs;
  std::vector<int> labels;

  std::size_t size() const noexcept { return labels.size(); }
};

// Glorot-uniform weights, zero biases. Bit-identical for equal (arch, seed).
ParamSet build_model(const ArchSpec& arch, std::uint64_t seed);

// Softmax class probabilities, one row per sample.
Tensor forward(const ArchSpec& arch, const ParamSet& params, const Batch& batch,
               Backend backend = Backend::parallel);

struct LossAndGrad {
  double loss = 0.0;  // mean cross-entropy
  ParamSet grads;
};

LossAndGrad loss_and_grad(const ArchSpec& arch, const ParamSet& params,
                          const Batch& batch,
                          Backend backend = Backend::parallel);

// Pre-softmax scores, one row per sample.
Tensor forward_logits(const ArchSpec& arch, const ParamSet& params, const Batch& batch,
                      Backend backend = Backend::parallel);

// Row-wise softmax with the row maximum subtracted first.
Tensor softmax_rows(const Tensor& logits);

// Per-sample cross-entropy computed from logits through a stable log-softmax.
// Throws DomainError for labels outside [0, classes).
std::vector<double> sample_losses(const Tensor& logits, std::span<const int> labels);

ParamSet sgd_step(const ParamSet& params, const ParamSet& grads, double lr);

// a*x + b*y, element-wise.
ParamSet param_linear(double a, const ParamSet& x, double b, const ParamSet& y);

std::vector<std::pair<std::string, double>> layer_norms(const ParamSet& delta);
double global_norm(const ParamSet& delta);

// Index of the largest entry; ties go to the lowest index.
std::size_t argmax(std::span<const double> row);

// Checks that `params` has exactly the tensors `arch` calls for.
void require_params_match(const ArchSpec& arch, const ParamSet& params);

}  // namespace fedu
