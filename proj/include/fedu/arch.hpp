#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fedu/tensor.hpp"

namespace fedu {

enum class Activation { none, relu };

struct Dense {
  std::size_t in = 0;
  std::size_t out = 0;
  Activation activation = Activation::none;
};

// Square kernel, stride 1, no padding.
struct Conv2d {
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::size_t kernel = 0;
  Activation activation = Activation::none;
};

// Non-overlapping pooling: stride equals the window.
struct MaxPool2d {
  std::size_t window = 2;
};

struct Flatten {};

using Layer = std::variant<Dense, Conv2d, MaxPool2d, Flatten>;

// A feed-forward network description. Softmax on the final layer is implied
// by the loss and by `forward`.
struct ArchSpec {
  Shape input_shape;
  std::vector<Layer> layers;

  // Per-sample shapes: [input, after layer 0, ..., after layer n-1].
  // Throws ArchError if adjacent dimensions disagree.
  std::vector<Shape> layer_shapes() const;
  void validate() const { (void)layer_shapes(); }

  std::size_t num_classes() const;
  std::size_t input_size() const { return shape_size(input_shape); }

  // Canonical one-line description; stable across runs.
  std::string describe() const;
  // FNV-1a over describe().
  std::uint64_t fingerprint() const;

  // Name of the weight tensor of the last Dense layer.
  std::string last_dense_weight_name() const;
};

enum class Preset { adult, purchase, mnist, cifar10 };

Preset preset_from_name(std::string_view name);
std::string_view preset_name(Preset preset);

// The four model families: Adult (2 FC), Purchase (3 FC), MNIST (2 conv +
// 2 FC) and CIFAR-10 (2 conv + 2 pool + 2 FC). `input_shape` is the
// per-sample feature shape; `hidden` sizes the first FC layer.
ArchSpec make_preset(Preset preset, const Shape& input_shape,
                     std::size_t num_classes, std::size_t hidden = 64);

std::string weight_name(std::size_t layer);
std::string bias_name(std::size_t layer);

}  // namespace fedu
