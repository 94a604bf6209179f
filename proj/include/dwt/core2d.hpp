#ifndef DWT_CORE2D_HPP
#define DWT_CORE2D_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dwt/core1d.hpp"
#include "dwt/types.hpp"

namespace dwt {

// One output sample per subband, at fragment coordinates (fx, fy).
struct SubbandQuad {
  double a = 0.0;  // low/low
  double h = 0.0;  // low vertical, high horizontal
  double v = 0.0;  // high vertical, low horizontal
  double d = 0.0;  // high/high
  std::size_t fx = 0;
  std::size_t fy = 0;
};

struct SubbandPlanes {
  Plane a, h, v, d;
};

// Single-level 2-D analysis fed 2x2 fragments in raster order. One forward
// core runs down every column; their emitted rows feed one core pair running
// across the current output row. The schedule visits (W/2+1)*(H/2+1)
// positions: the extra rightmost column and bottom row carry no input and
// exist to flush the row pair and the column cores. Every position with
// fx >= 1 and fy >= 1 emits exactly one quad, giving (W/2)*(H/2) in total.
class Core2d {
 public:
  Core2d(std::size_t width, std::size_t height, const CoreConfig& config);

  // True while the current schedule position needs a data fragment.
  bool expects_data() const {
    return fx_ < half_w_ && fy_ < half_h_ && !done();
  }
  bool done() const { return fy_ > half_h_; }

  // Fragment values row-major: {x(2fx,2fy), x(2fx+1,2fy),
  //                             x(2fx,2fy+1), x(2fx+1,2fy+1)}.
  std::optional<SubbandQuad> push(const std::array<double, 4>& fragment);

  // Advances through a flush position (fx == W/2 or fy == H/2).
  std::optional<SubbandQuad> push_flush();

  std::size_t width() const { return 2 * half_w_; }
  std::size_t height() const { return 2 * half_h_; }

 private:
  std::optional<SubbandQuad> advance(const std::array<double, 4>* fragment);
  std::optional<SubbandQuad> feed_rows(const OutputPair& left,
                                       const OutputPair& right);

  std::size_t half_w_ = 0, half_h_ = 0;
  std::size_t fx_ = 0, fy_ = 0;
  std::vector<ForwardCore> columns_;
  ForwardCore row_low_, row_high_;
};

// Single-level analysis over a fetch(x, y) source; fetches each of the
// width*height pixels exactly once, in fragment raster order.
template <typename FetchFn>
SubbandPlanes forward_2d_stream(FetchFn&& fetch, std::size_t width,
                                std::size_t height, const CoreConfig& config) {
  Core2d core(width, height, config);
  SubbandPlanes out;
  out.a = Plane(width / 2, height / 2);
  out.h = Plane(width / 2, height / 2);
  out.v = Plane(width / 2, height / 2);
  out.d = Plane(width / 2, height / 2);

  auto store = [&](const std::optional<SubbandQuad>& q) {
    if (!q) return;
    out.a.at(q->fx, q->fy) = q->a;
    out.h.at(q->fx, q->fy) = q->h;
    out.v.at(q->fx, q->fy) = q->v;
    out.d.at(q->fx, q->fy) = q->d;
  };

  for (std::size_t fy = 0; fy <= height / 2; ++fy) {
    for (std::size_t fx = 0; fx <= width / 2; ++fx) {
      if (core.expects_data()) {
        const std::size_t x = 2 * fx, y = 2 * fy;
        store(core.push({fetch(x, y), fetch(x + 1, y), fetch(x, y + 1),
                         fetch(x + 1, y + 1)}));
      } else {
        store(core.push_flush());
      }
    }
  }
  return out;
}

// J-level decomposition: the streaming core runs over the image, then again
// over each successive low/low plane.
Pyramid2d forward_2d(const Plane& image, std::size_t levels,
                     const CoreConfig& config);

Plane inverse_2d(const Pyramid2d& pyramid, const CoreConfig& config);

}  // namespace dwt

#endif
