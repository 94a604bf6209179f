#include "dwt/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace dwt {

namespace {

// Mirror an arbitrary index into [0, n) about the edge samples (period
// 2(n-1); a single sample reflects onto itself).
std::size_t mirror_index(long long i, std::size_t n) {
  if (n == 1) return 0;
  const long long period = 2 * (static_cast<long long>(n) - 1);
  long long r = i % period;
  if (r < 0) r += period;
  return static_cast<std::size_t>(r < static_cast<long long>(n) ? r
                                                                : period - r);
}

double predict_term(double left, double right, const CoreConfig& c) {
  if (c.mode == ArithmeticMode::ReversibleInteger)
    return -std::floor((left + right) / 2.0);
  return c.alpha * (left + right);
}

double update_term(double left, double right, const CoreConfig& c) {
  if (c.mode == ArithmeticMode::ReversibleInteger)
    return std::floor((left + right + 2.0) / 4.0);
  return c.beta * (left + right);
}

}  // namespace

std::vector<double> extend(std::span<const double> x, std::size_t margin,
                           BoundaryPolicy policy) {
  if (x.empty()) throw std::invalid_argument("cannot extend an empty signal");
  const long long n = static_cast<long long>(x.size());
  std::vector<double> out(x.size() + 2 * margin, 0.0);
  for (long long j = 0; j < static_cast<long long>(out.size()); ++j) {
    const long long i = j - static_cast<long long>(margin);
    if (policy == BoundaryPolicy::Symmetric)
      out[j] = x[mirror_index(i, x.size())];
    else if (i >= 0 && i < n)
      out[j] = x[i];
  }
  return out;
}

Subbands oracle_forward(std::span<const double> x, const CoreConfig& config) {
  config.validate();
  if (x.empty()) throw std::invalid_argument("cannot transform empty signal");
  const long long n = static_cast<long long>(x.size());
  constexpr std::size_t margin = 2;

  std::vector<double> ext = extend(x, margin, config.boundary);

  // First pass: every odd slot becomes a detail.
  for (std::size_t j = 1; j + 1 < ext.size(); j += 2)
    ext[j] += predict_term(ext[j - 1], ext[j + 1], config);

  // Under zero padding, details that fall outside the signal read as zero in
  // the update pass. (Mirrored margins already agree with their in-signal
  // twins, so the symmetric case needs nothing here.)
  if (config.boundary == BoundaryPolicy::ZeroPadding) {
    for (std::size_t j = 1; j + 1 < ext.size(); j += 2) {
      const long long i = static_cast<long long>(j) - margin;
      if (i < 0 || i >= n) ext[j] = 0.0;
    }
  }

  // Second pass: every even slot becomes an approximation value.
  for (std::size_t j = 2; j + 1 < ext.size(); j += 2)
    ext[j] += update_term(ext[j - 1], ext[j + 1], config);

  Subbands out;
  out.a.resize(approx_length(x.size()));
  out.d.resize(detail_length(x.size()));
  for (std::size_t m = 0; m < out.a.size(); ++m) out.a[m] = ext[2 * m + margin];
  for (std::size_t m = 0; m < out.d.size(); ++m)
    out.d[m] = ext[2 * m + 1 + margin];

  if (config.scaling && config.mode == ArithmeticMode::Real) {
    for (double& v : out.a) v *= config.zeta;
    for (double& v : out.d) v /= config.zeta;
  }
  return out;
}

std::vector<double> oracle_inverse(std::span<const double> a,
                                   std::span<const double> d,
                                   const CoreConfig& config) {
  config.validate();
  const long long na = static_cast<long long>(a.size());
  const long long nd = static_cast<long long>(d.size());
  const long long n = na + nd;
  if (n < 2 || (na != nd && na != nd + 1))
    throw std::invalid_argument("subband lengths do not form a valid signal");

  std::vector<double> av(a.begin(), a.end());
  std::vector<double> dv(d.begin(), d.end());
  if (config.scaling && config.mode == ArithmeticMode::Real) {
    for (double& v : av) v /= config.zeta;
    for (double& v : dv) v *= config.zeta;
  }

  const bool zero = config.boundary == BoundaryPolicy::ZeroPadding;
  const bool even_n = n % 2 == 0;

  // Out-of-range details: zero under zero padding, otherwise folded back with
  // the symmetry the mirrored signal induces on the detail sequence
  // (half-sample at the left edge, edge parity decides the right).
  auto held_d = [&](long long m) -> double {
    if (zero && (m < 0 || m >= nd)) return 0.0;
    while (m < 0 || m >= nd) {
      if (m < 0)
        m = -m - 1;
      else
        m = (even_n ? 2 * nd - 2 : 2 * nd - 1) - m;
    }
    return dv[m];
  };

  std::vector<double> evens(a.size());
  for (long long m = 0; m < na; ++m)
    evens[m] = av[m] - update_term(held_d(m - 1), held_d(m), config);

  auto held_e = [&](long long m) -> double {
    if (zero && (m < 0 || m >= na)) return 0.0;
    while (m < 0 || m >= na) {
      if (m < 0)
        m = -m;
      else
        m = (even_n ? 2 * na - 1 : 2 * na - 2) - m;
    }
    return evens[m];
  };

  std::vector<double> x(n);
  for (long long m = 0; m < na; ++m) x[2 * m] = evens[m];
  for (long long m = 0; m < nd; ++m)
    x[2 * m + 1] = dv[m] - predict_term(held_e(m), held_e(m + 1), config);
  return x;
}

Pyramid1d oracle_forward_multi(std::span<const double> x, std::size_t levels,
                               const CoreConfig& config) {
  if (levels == 0) throw std::invalid_argument("need at least one level");
  Pyramid1d p;
  std::vector<double> cur(x.begin(), x.end());
  for (std::size_t j = 0; j < levels; ++j) {
    Subbands sb = oracle_forward(cur, config);
    p.details.push_back(std::move(sb.d));
    cur = std::move(sb.a);
  }
  p.approx = std::move(cur);
  return p;
}

std::vector<double> oracle_inverse_multi(const Pyramid1d& pyramid,
                                         const CoreConfig& config) {
  if (pyramid.depth() == 0)
    throw std::invalid_argument("pyramid has no levels");
  std::vector<double> cur = pyramid.approx;
  for (std::size_t j = pyramid.depth(); j-- > 0;)
    cur = oracle_inverse(cur, pyramid.details[j], config);
  return cur;
}

namespace {

std::vector<double> get_column(const Plane& p, std::size_t x) {
  std::vector<double> col(p.height);
  for (std::size_t y = 0; y < p.height; ++y) col[y] = p.at(x, y);
  return col;
}

std::vector<double> get_row(const Plane& p, std::size_t y) {
  return {p.data.begin() + y * p.width, p.data.begin() + (y + 1) * p.width};
}

// One analysis level: columns first, then rows, same order as the streaming
// 2-D core (the order is observable in integer mode).
void separable_level(const Plane& in, Plane& ll, Pyramid2d::Band& band,
                     const CoreConfig& config) {
  const std::size_t w = in.width, h = in.height;
  const std::size_t hw = approx_length(w), hh = approx_length(h);

  Plane low(w, hh), high(w, h - hh);
  for (std::size_t x = 0; x < w; ++x) {
    Subbands sb = oracle_forward(get_column(in, x), config);
    for (std::size_t y = 0; y < sb.a.size(); ++y) low.at(x, y) = sb.a[y];
    for (std::size_t y = 0; y < sb.d.size(); ++y) high.at(x, y) = sb.d[y];
  }

  ll = Plane(hw, hh);
  band.h = Plane(w - hw, hh);
  band.v = Plane(hw, h - hh);
  band.d = Plane(w - hw, h - hh);
  for (std::size_t y = 0; y < hh; ++y) {
    Subbands sb = oracle_forward(get_row(low, y), config);
    for (std::size_t x = 0; x < sb.a.size(); ++x) ll.at(x, y) = sb.a[x];
    for (std::size_t x = 0; x < sb.d.size(); ++x) band.h.at(x, y) = sb.d[x];
  }
  for (std::size_t y = 0; y < h - hh; ++y) {
    Subbands sb = oracle_forward(get_row(high, y), config);
    for (std::size_t x = 0; x < sb.a.size(); ++x) band.v.at(x, y) = sb.a[x];
    for (std::size_t x = 0; x < sb.d.size(); ++x) band.d.at(x, y) = sb.d[x];
  }
}

}  // namespace

Pyramid2d oracle_forward_2d(const Plane& image, std::size_t levels,
                            const CoreConfig& config) {
  if (levels == 0) throw std::invalid_argument("need at least one level");
  if (image.width == 0 || image.height == 0)
    throw std::invalid_argument("cannot transform empty image");
  Pyramid2d p;
  Plane cur = image;
  for (std::size_t j = 0; j < levels; ++j) {
    Pyramid2d::Band band;
    Plane ll;
    separable_level(cur, ll, band, config);
    p.levels.push_back(std::move(band));
    cur = std::move(ll);
  }
  p.approx = std::move(cur);
  return p;
}

Plane oracle_inverse_2d(const Pyramid2d& pyramid, const CoreConfig& config) {
  if (pyramid.depth() == 0)
    throw std::invalid_argument("pyramid has no levels");
  Plane cur = pyramid.approx;
  for (std::size_t j = pyramid.depth(); j-- > 0;) {
    const Pyramid2d::Band& band = pyramid.levels[j];
    if (band.h.height != cur.height || band.v.width != cur.width ||
        band.d.width != band.h.width || band.d.height != band.v.height)
      throw std::invalid_argument("subband plane shapes are inconsistent");
    const std::size_t w = cur.width + band.h.width;
    const std::size_t h = cur.height + band.v.height;

    // Rows first (undoing the second analysis pass), then columns.
    Plane low(w, cur.height), high(w, band.v.height);
    for (std::size_t y = 0; y < cur.height; ++y) {
      std::vector<double> row =
          oracle_inverse(get_row(cur, y), get_row(band.h, y), config);
      for (std::size_t x = 0; x < w; ++x) low.at(x, y) = row[x];
    }
    for (std::size_t y = 0; y < band.v.height; ++y) {
      std::vector<double> row =
          oracle_inverse(get_row(band.v, y), get_row(band.d, y), config);
      for (std::size_t x = 0; x < w; ++x) high.at(x, y) = row[x];
    }

    Plane out(w, h);
    for (std::size_t x = 0; x < w; ++x) {
      std::vector<double> col =
          oracle_inverse(get_column(low, x), get_column(high, x), config);
      for (std::size_t y = 0; y < h; ++y) out.at(x, y) = col[y];
    }
    cur = std::move(out);
  }
  return cur;
}

}  // namespace dwt
