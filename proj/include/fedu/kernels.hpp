#pragma once

// Batch kernels behind the network engine. `parallel::` spreads the outer
// loop over OpenMP threads; `serial::` is a plain reference kept for tests
// and benchmarks. Every output element is produced by exactly one thread with
// a fixed summation order, so the two agree to rounding and the parallel
// version is deterministic for any thread count.

#include <cstddef>
#include <cstdint>

namespace fedu {

enum class Backend { parallel, serial };

namespace kernels {

struct ConvGeometry {
  std::size_t batch = 0;
  std::size_t in_channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t out_channels = 0;
  std::size_t kernel = 0;

  std::size_t out_height() const { return height - kernel + 1; }
  std::size_t out_width() const { return width - kernel + 1; }
};

struct PoolGeometry {
  std::size_t batch = 0;
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t window = 2;

  std::size_t out_height() const { return height / window; }
  std::size_t out_width() const { return width / window; }
};

#define FEDU_KERNEL_DECLS                                                     \
  /* y[n,o] = b[o] + sum_i w[o,i] x[n,i] */                                   \
  void dense_forward(const double* x, std::size_t batch, std::size_t in,      \
                     const double* w, const double* b, std::size_t out,       \
                     double* y);                                              \
  /* dw[o,i] = sum_n dy[n,o] x[n,i];  db[o] = sum_n dy[n,o] */                \
  void dense_backward_params(const double* x, const double* dy,               \
                             std::size_t batch, std::size_t in,               \
                             std::size_t out, double* dw, double* db);        \
  /* dx[n,i] = sum_o dy[n,o] w[o,i] */                                        \
  void dense_backward_input(const double* dy, const double* w,                \
                            std::size_t batch, std::size_t in,                \
                            std::size_t out, double* dx);                     \
  void conv2d_forward(const double* x, const ConvGeometry& g, const double* w, \
                      const double* b, double* y);                            \
  void conv2d_backward_params(const double* x, const double* dy,              \
                              const ConvGeometry& g, double* dw, double* db); \
  void conv2d_backward_input(const double* dy, const double* w,               \
                             const ConvGeometry& g, double* dx);              \
  void maxpool_forward(const double* x, const PoolGeometry& g, double* y,     \
                       std::uint32_t* argmax);                                \
  void maxpool_backward(const double* dy, const std::uint32_t* argmax,        \
                        const PoolGeometry& g, double* dx);                   \
  void relu_forward(double* x, std::size_t n);                                \
  /* dx *= (y > 0) where y is the post-activation output */                   \
  void relu_backward(const double* y, double* dx, std::size_t n);

namespace parallel {
FEDU_KERNEL_DECLS
}  // namespace parallel

namespace serial {
FEDU_KERNEL_DECLS
}  // namespace serial

#undef FEDU_KERNEL_DECLS

}  // namespace kernels
}  // namespace fedu
