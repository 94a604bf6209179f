#ifndef DWT_MULTISCALE_HPP
#define DWT_MULTISCALE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dwt/core1d.hpp"
#include "dwt/types.hpp"

namespace dwt {

// One coefficient finalized by the cascade, tagged with where it belongs.
// level is 1-based; the approximation band only exists at the deepest level.
struct TaggedCoefficient {
  std::size_t level = 0;
  bool is_detail = true;
  std::size_t index = 0;
  double value = 0.0;
};

// J chained forward cores. Level j+1 consumes the approximation stream of
// level j, two coefficients at a time, so the whole pyramid advances in one
// pass while each input sample is read exactly once. Coefficients come out
// in arrival order: shallow details first, deeper bands as their input pairs
// complete, the deepest approximation values interleaved at the end.
class Cascade {
 public:
  // n is the input length; requires n divisible by 2^levels and a deepest
  // level of at least 4 samples.
  Cascade(std::size_t n, std::size_t levels, const CoreConfig& config);

  std::vector<TaggedCoefficient> push(double even, double odd);
  std::vector<TaggedCoefficient> flush();

  std::size_t depth() const { return levels_.size(); }
  std::size_t input_length() const { return n_; }

 private:
  struct Level {
    ForwardCore core;
    std::optional<double> pending_a;
  };

  void feed(std::size_t lv, double even, double odd,
            std::vector<TaggedCoefficient>& out);
  void route_approx(std::size_t lv, const OutputPair& pair,
                    std::vector<TaggedCoefficient>& out);

  std::size_t n_ = 0;
  bool flushed_ = false;
  std::vector<Level> levels_;
};

// Drives a Cascade over the whole signal and sorts the tagged stream into a
// pyramid. The source form calls next() exactly n times.
Pyramid1d cascade_forward(std::span<const double> x, std::size_t levels,
                          const CoreConfig& config);

template <typename NextFn>
Pyramid1d cascade_forward_stream(NextFn&& next, std::size_t n,
                                 std::size_t levels,
                                 const CoreConfig& config) {
  Cascade cascade(n, levels, config);
  Pyramid1d p;
  p.details.resize(levels);
  for (std::size_t j = 0; j < levels; ++j)
    p.details[j].resize(n >> (j + 1));
  p.approx.resize(n >> levels);

  auto store = [&](const std::vector<TaggedCoefficient>& coeffs) {
    for (const TaggedCoefficient& c : coeffs) {
      if (c.is_detail)
        p.details[c.level - 1][c.index] = c.value;
      else
        p.approx[c.index] = c.value;
    }
  };
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double even = next();
    const double odd = next();
    store(cascade.push(even, odd));
  }
  store(cascade.flush());
  return p;
}

// Deepest level first: each round merges the current approximation with one
// detail band through the streaming inverse core.
std::vector<double> cascade_inverse(const Pyramid1d& pyramid,
                                    const CoreConfig& config);

}  // namespace dwt

#endif
