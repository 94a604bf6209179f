#include "dwt/multiscale.hpp"

#include <stdexcept>

namespace dwt {

Cascade::Cascade(std::size_t n, std::size_t levels, const CoreConfig& config)
    : n_(n) {
  config.validate();
  if (levels == 0) throw std::invalid_argument("need at least one level");
  if (n % (std::size_t{1} << levels) != 0)
    throw std::invalid_argument("signal length must divide by 2^levels");
  if ((n >> levels) < 2)
    throw std::invalid_argument("deepest level needs at least 4 samples");

  levels_.reserve(levels);
  for (std::size_t j = 0; j < levels; ++j)
    levels_.push_back({ForwardCore(n >> (j + 1), config), std::nullopt});
}

std::vector<TaggedCoefficient> Cascade::push(double even, double odd) {
  if (flushed_) throw std::logic_error("push after flush");
  std::vector<TaggedCoefficient> out;
  feed(0, even, odd, out);
  return out;
}

std::vector<TaggedCoefficient> Cascade::flush() {
  if (flushed_) throw std::logic_error("cascade already flushed");
  flushed_ = true;
  std::vector<TaggedCoefficient> out;
  // Flushing level j hands level j+1 its final pair, so by the time the loop
  // reaches a level it has consumed everything it will ever see.
  for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
    const OutputPair last = levels_[lv].core.flush();
    out.push_back({lv + 1, true, last.index, last.d});
    route_approx(lv, last, out);
  }
  return out;
}

void Cascade::feed(std::size_t lv, double even, double odd,
                   std::vector<TaggedCoefficient>& out) {
  if (auto p = levels_[lv].core.push(even, odd)) {
    out.push_back({lv + 1, true, p->index, p->d});
    route_approx(lv, *p, out);
  }
}

void Cascade::route_approx(std::size_t lv, const OutputPair& pair,
                           std::vector<TaggedCoefficient>& out) {
  if (lv + 1 == levels_.size()) {
    out.push_back({lv + 1, false, pair.index, pair.a});
    return;
  }
  Level& next = levels_[lv + 1];
  if (!next.pending_a) {
    next.pending_a = pair.a;
    return;
  }
  const double even = *next.pending_a;
  next.pending_a.reset();
  feed(lv + 1, even, pair.a, out);
}

Pyramid1d cascade_forward(std::span<const double> x, std::size_t levels,
                          const CoreConfig& config) {
  std::size_t i = 0;
  return cascade_forward_stream([&] { return x[i++]; }, x.size(), levels,
                                config);
}

std::vector<double> cascade_inverse(const Pyramid1d& pyramid,
                                    const CoreConfig& config) {
  const std::size_t depth = pyramid.depth();
  if (depth == 0) throw std::invalid_argument("pyramid has no levels");
  if (pyramid.approx.size() != pyramid.details[depth - 1].size())
    throw std::invalid_argument("approximation and deepest detail differ");
  for (std::size_t j = 0; j + 1 < depth; ++j)
    if (pyramid.details[j].size() != 2 * pyramid.details[j + 1].size())
      throw std::invalid_argument("detail band lengths are inconsistent");

  std::vector<double> cur = pyramid.approx;
  for (std::size_t j = depth; j-- > 0;)
    cur = inverse_1d(cur, pyramid.details[j], config);
  return cur;
}

}  // namespace dwt
