#include "dwt/core2d.hpp"

#include <stdexcept>

namespace dwt {

namespace {

void check_dims(std::size_t width, std::size_t height) {
  if (width % 2 != 0 || height % 2 != 0)
    throw std::invalid_argument("image dimensions must be even");
  if (width < 4 || height < 4)
    throw std::invalid_argument("streaming core needs at least 4x4 pixels");
}

}  // namespace

Core2d::Core2d(std::size_t width, std::size_t height, const CoreConfig& config)
    : row_low_(ForwardCore(std::max<std::size_t>(width / 2, 2), config)),
      row_high_(row_low_) {
  check_dims(width, height);
  half_w_ = width / 2;
  half_h_ = height / 2;
  columns_.reserve(width);
  ForwardCore column(half_h_, config);
  for (std::size_t x = 0; x < width; ++x) columns_.push_back(column);
}

std::optional<SubbandQuad> Core2d::push(const std::array<double, 4>& fragment) {
  if (done()) throw std::logic_error("2-D core already finished");
  if (!expects_data())
    throw std::logic_error("fragment pushed at a flush position");
  return advance(&fragment);
}

std::optional<SubbandQuad> Core2d::push_flush() {
  if (done()) throw std::logic_error("2-D core already finished");
  if (expects_data())
    throw std::logic_error("flush pushed at a data position");
  return advance(nullptr);
}

std::optional<SubbandQuad> Core2d::advance(
    const std::array<double, 4>* fragment) {
  // A fresh output row starts here; the row pair is reused across rows.
  if (fx_ == 0 && fy_ >= 1) {
    row_low_.reset();
    row_high_.reset();
  }

  std::optional<SubbandQuad> quad;
  const bool data_row = fy_ < half_h_;
  const bool data_col = fx_ < half_w_;

  if (data_col) {
    // Feed (or flush) the two columns under this fragment; from the second
    // fragment row on they emit one intermediate value pair each.
    ForwardCore& c0 = columns_[2 * fx_];
    ForwardCore& c1 = columns_[2 * fx_ + 1];
    std::optional<OutputPair> p0, p1;
    if (data_row) {
      p0 = c0.push((*fragment)[0], (*fragment)[2]);
      p1 = c1.push((*fragment)[1], (*fragment)[3]);
    } else {
      p0 = c0.flush();
      p1 = c1.flush();
    }
    if (p0) quad = feed_rows(*p0, *p1);
  } else if (fy_ >= 1) {
    // Rightmost schedule column: the row pair has seen the whole
    // intermediate row and can emit its last quad.
    const OutputPair low = row_low_.flush();
    const OutputPair high = row_high_.flush();
    quad = SubbandQuad{low.a, low.d, high.a, high.d, low.index, fy_ - 1};
  }

  if (++fx_ > half_w_) {
    fx_ = 0;
    ++fy_;
  }
  return quad;
}

std::optional<SubbandQuad> Core2d::feed_rows(const OutputPair& left,
                                             const OutputPair& right) {
  const std::optional<OutputPair> low = row_low_.push(left.a, right.a);
  const std::optional<OutputPair> high = row_high_.push(left.d, right.d);
  if (!low) return std::nullopt;
  return SubbandQuad{low->a, low->d, high->a, high->d, low->index, fy_ - 1};
}

Pyramid2d forward_2d(const Plane& image, std::size_t levels,
                     const CoreConfig& config) {
  config.validate();
  if (levels == 0) throw std::invalid_argument("need at least one level");
  check_dims(image.width, image.height);
  if (image.width % (std::size_t{1} << levels) != 0 ||
      image.height % (std::size_t{1} << levels) != 0)
    throw std::invalid_argument("image dimensions must divide by 2^levels");
  if ((image.width >> levels) < 2 || (image.height >> levels) < 2)
    throw std::invalid_argument("deepest level needs at least 4x4 pixels");

  Pyramid2d p;
  Plane cur = image;
  for (std::size_t j = 0; j < levels; ++j) {
    SubbandPlanes sp = forward_2d_stream(
        [&](std::size_t x, std::size_t y) { return cur.at(x, y); }, cur.width,
        cur.height, config);
    p.levels.push_back({std::move(sp.h), std::move(sp.v), std::move(sp.d)});
    cur = std::move(sp.a);
  }
  p.approx = std::move(cur);
  return p;
}

Plane inverse_2d(const Pyramid2d& pyramid, const CoreConfig& config) {
  config.validate();
  if (pyramid.depth() == 0)
    throw std::invalid_argument("pyramid has no levels");

  Plane cur = pyramid.approx;
  for (std::size_t j = pyramid.depth(); j-- > 0;) {
    const Pyramid2d::Band& band = pyramid.levels[j];
    if (band.h.width != cur.width || band.h.height != cur.height ||
        band.v.width != cur.width || band.d.width != cur.width ||
        band.v.height != band.d.height)
      throw std::invalid_argument("subband plane shapes are inconsistent");
    const std::size_t w = 2 * cur.width;
    const std::size_t h = cur.height + band.v.height;

    // Undo the horizontal pass along every intermediate row, then the
    // vertical pass down every column.
    Plane low(w, cur.height), high(w, band.v.height);
    std::vector<double> a_row(cur.width), d_row(cur.width);
    for (std::size_t y = 0; y < cur.height; ++y) {
      for (std::size_t x = 0; x < cur.width; ++x) {
        a_row[x] = cur.at(x, y);
        d_row[x] = band.h.at(x, y);
      }
      std::vector<double> row = inverse_1d(a_row, d_row, config);
      for (std::size_t x = 0; x < w; ++x) low.at(x, y) = row[x];
    }
    for (std::size_t y = 0; y < band.v.height; ++y) {
      for (std::size_t x = 0; x < band.v.width; ++x) {
        a_row[x] = band.v.at(x, y);
        d_row[x] = band.d.at(x, y);
      }
      std::vector<double> row = inverse_1d(a_row, d_row, config);
      for (std::size_t x = 0; x < w; ++x) high.at(x, y) = row[x];
    }

    Plane out(w, h);
    std::vector<double> a_col(cur.height), d_col(band.v.height);
    for (std::size_t x = 0; x < w; ++x) {
      for (std::size_t y = 0; y < cur.height; ++y) a_col[y] = low.at(x, y);
      for (std::size_t y = 0; y < band.v.height; ++y)
        d_col[y] = high.at(x, y);
      std::vector<double> col = inverse_1d(a_col, d_col, config);
      for (std::size_t y = 0; y < h; ++y) out.at(x, y) = col[y];
    }
    cur = std::move(out);
  }
  return cur;
}

}  // namespace dwt
