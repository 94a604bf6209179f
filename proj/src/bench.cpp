#include "dwt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dwt/core1d.hpp"
#include "dwt/core2d.hpp"
#include "dwt/oracle.hpp"

namespace dwt {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double best_of(std::size_t repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    fn();
    const std::chrono::duration<double> dt = Clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

double band_diff(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

BenchResult run_bench_1d(std::span<const double> x, const CoreConfig& config,
                         std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("need at least one repeat");

  BenchResult r;
  r.samples = x.size();
  r.repeats = repeats;

  const Subbands streamed = forward_1d(x, config);
  const Subbands twopass = oracle_forward(x, config);
  r.max_abs_diff = std::max(band_diff(streamed.a, twopass.a),
                            band_diff(streamed.d, twopass.d));

  r.streaming_seconds = best_of(repeats, [&] {
    volatile double sink = forward_1d(x, config).a.back();
    (void)sink;
  });
  r.twopass_seconds = best_of(repeats, [&] {
    volatile double sink = oracle_forward(x, config).a.back();
    (void)sink;
  });
  return r;
}

BenchResult run_bench_2d(const Plane& image, const CoreConfig& config,
                         std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("need at least one repeat");

  BenchResult r;
  r.samples = image.width * image.height;
  r.repeats = repeats;

  const Pyramid2d streamed = forward_2d(image, 1, config);
  const Pyramid2d twopass = oracle_forward_2d(image, 1, config);
  r.max_abs_diff = std::max(
      {band_diff(streamed.approx.data, twopass.approx.data),
       band_diff(streamed.levels[0].h.data, twopass.levels[0].h.data),
       band_diff(streamed.levels[0].v.data, twopass.levels[0].v.data),
       band_diff(streamed.levels[0].d.data, twopass.levels[0].d.data)});

  r.streaming_seconds = best_of(repeats, [&] {
    volatile double sink = forward_2d(image, 1, config).approx.data.back();
    (void)sink;
  });
  r.twopass_seconds = best_of(repeats, [&] {
    volatile double sink = oracle_forward_2d(image, 1, config).approx.data.back();
    (void)sink;
  });
  return r;
}

}  // namespace dwt
