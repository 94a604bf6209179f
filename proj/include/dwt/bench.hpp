#ifndef DWT_BENCH_HPP
#define DWT_BENCH_HPP

#include <cstddef>
#include <span>

#include "dwt/types.hpp"

namespace dwt {

// Compares the single-pass streaming transform against the conventional
// two-pass strategy (materialize the boundary extension, then lift). Outputs
// are checked for agreement before anything is timed; times are the best of
// `repeats` runs.
struct BenchResult {
  std::size_t samples = 0;
  std::size_t repeats = 0;
  double streaming_seconds = 0.0;
  double twopass_seconds = 0.0;
  double max_abs_diff = 0.0;

  double streaming_rate() const { return samples / streaming_seconds; }
  double twopass_rate() const { return samples / twopass_seconds; }
};

BenchResult run_bench_1d(std::span<const double> x, const CoreConfig& config,
                         std::size_t repeats);

BenchResult run_bench_2d(const Plane& image, const CoreConfig& config,
                         std::size_t repeats);

}  // namespace dwt

#endif
