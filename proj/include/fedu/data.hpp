#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fedu/model.hpp"
#include "fedu/tensor.hpp"

namespace fedu {

struct Dataset {
  std::string name;
  Tensor inputs;  // (samples, feature shape...)
  std::vector<int> labels;
  int num_classes = 0;
  // Records seen in the source before any filtering.
  std::size_t source_records = 0;

  std::size_t size() const noexcept { return labels.size(); }
  Shape feature_shape() const;
  std::size_t feature_size() const;

  Dataset subset(std::span<const std::size_t> indices) const;
  Batch batch(std::span<const std::size_t> indices) const;
  Batch all() const;

  // Throws IngestionError when labels fall outside [0, num_classes) or a
  // feature is not finite.
  void validate() const;
};

struct ClientShard {
  int client_id = 0;  // 1-based
  Dataset data;
  std::vector<std::size_t> source_indices;  // rows of the partitioned dataset

  std::size_t sample_count() const noexcept { return data.size(); }
};

struct SyntheticSpec {
  std::size_t samples = 1000;
  std::size_t features = 20;
  int classes = 2;
  // Standard deviation of the class centres; samples have unit noise.
  double separation = 1.0;
};

// Gaussian blobs, one centre per class.
Dataset make_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

// UCI Adult. `path` is either a single file or a directory holding
// adult.data and/or adult.test. Records with missing values are dropped,
// numeric columns are z-scored and categoricals one-hot encoded.
Dataset load_adult(const std::filesystem::path& path);

// IDX files (images magic 0x00000803, labels 0x00000801). Pixels scaled to
// [0,1]; output is (n, 1, rows, cols).
Dataset load_mnist_idx(const std::filesystem::path& images, const std::filesystem::path& labels);
// Directory with the four standard MNIST files; train followed by test.
Dataset load_mnist(const std::filesystem::path& dir);

// CIFAR-10 binary batches of 3073-byte records. Output is (n, 3, 32, 32).
Dataset load_cifar10_batches(const std::vector<std::filesystem::path>& files);
// Directory with data_batch_1..5.bin then test_batch.bin.
Dataset load_cifar10(const std::filesystem::path& dir);

struct PurchaseOptions {
  std::string customer_column = "id";
  std::string item_column = "category";
  std::size_t top_items = 600;
  int classes = 2;
};

// Transaction log -> one binary row per customer over the most frequent
// items, labelled by k-means.
Dataset load_purchase(const std::filesystem::path& path, const PurchaseOptions& options,
                      std::uint64_t seed);

struct KMeansResult {
  std::vector<int> labels;
  std::vector<std::vector<double>> centroids;
  int iterations = 0;
  bool converged = false;
};

// Lloyd iterations from a seeded k-means++ start, at most `max_iterations`.
KMeansResult kmeans(const Tensor& records, int k, std::uint64_t seed, int max_iterations = 100);
std::vector<int> assign_purchase_labels(const Tensor& records, int k, std::uint64_t seed);

// Dispatch by name: adult | purchase | mnist | cifar10 | synthetic.
Dataset load_dataset(const std::string& name, const std::filesystem::path& path,
                     std::uint64_t seed, const SyntheticSpec& synthetic = {});

// Seeded shuffle then contiguous split; sizes differ by at most one.
std::vector<ClientShard> partition_iid(const Dataset& train, int clients, std::uint64_t seed);

struct Split {
  Dataset train;
  Dataset test;
};

Split train_test_split(const Dataset& ds, double test_fraction, std::uint64_t seed);

// At most `max_samples` rows, drawn without replacement; order of the kept
// rows follows the source.
Dataset subsample(const Dataset& ds, std::size_t max_samples, std::uint64_t seed);

// Mixes a base seed with stream identifiers (SplitMix64 finaliser).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace fedu
