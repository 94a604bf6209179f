#ifndef DWT_TYPES_HPP
#define DWT_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dwt {

// How samples outside the signal are treated: mirrored about the edge sample
// (whole-sample symmetric, the default) or read as zero at every stage.
enum class BoundaryPolicy { Symmetric, ZeroPadding };

// Real: plain floating-point lifting. ReversibleInteger: integer-to-integer
// lifting with floored update/predict terms, exactly invertible.
enum class ArithmeticMode { Real, ReversibleInteger };

struct CoreConfig {
  double alpha = -0.5;  // predict weight, d = x_odd + alpha*(x_left + x_right)
  double beta = 0.25;   // update weight,  a = x_even + beta*(d_left + d_right)
  double zeta = 1.4142135623730951;  // subband gain used when scaling is on
  BoundaryPolicy boundary = BoundaryPolicy::Symmetric;
  ArithmeticMode mode = ArithmeticMode::Real;
  bool scaling = false;  // emit (a*zeta, d/zeta); ignored in integer mode

  void validate() const {
    if (alpha == 0.0 || beta == 0.0)
      throw std::invalid_argument("lifting constants must be nonzero");
    if (zeta == 0.0 || !std::isfinite(zeta))
      throw std::invalid_argument("scaling factor must be finite and nonzero");
  }
};

// Subband lengths for a signal of n samples: evens carry the approximation.
constexpr std::size_t approx_length(std::size_t n) { return (n + 1) / 2; }
constexpr std::size_t detail_length(std::size_t n) { return n / 2; }

// Single-level subband pair.
struct Subbands {
  std::vector<double> a, d;
};

// Row-major image buffer.
struct Plane {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> data;

  Plane() = default;
  Plane(std::size_t w, std::size_t h) : width(w), height(h), data(w * h) {}

  double& at(std::size_t x, std::size_t y) { return data[y * width + x]; }
  double at(std::size_t x, std::size_t y) const { return data[y * width + x]; }
};

// J-level 1-D decomposition: details[j] holds level j+1 (length n / 2^(j+1)),
// approx holds the deepest approximation (length n / 2^J).
struct Pyramid1d {
  std::vector<std::vector<double>> details;
  std::vector<double> approx;

  std::size_t depth() const { return details.size(); }
};

// J-level 2-D decomposition. For each level, h is low-vertical/high-horizontal,
// v is high-vertical/low-horizontal, d is high/high.
struct Pyramid2d {
  struct Band {
    Plane h, v, d;
  };
  std::vector<Band> levels;
  Plane approx;

  std::size_t depth() const { return levels.size(); }
};

}  // namespace dwt

#endif
