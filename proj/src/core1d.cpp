#include "dwt/core1d.hpp"

namespace dwt {

Subbands forward_1d(std::span<const double> x, const CoreConfig& config) {
  std::size_t i = 0;
  return forward_1d_stream([&] { return x[i++]; }, x.size(), config);
}

std::vector<double> inverse_1d(std::span<const double> a,
                               std::span<const double> d,
                               const CoreConfig& config) {
  config.validate();
  if (a.size() != d.size())
    throw std::invalid_argument("subband lengths must match for even signals");
  if (a.size() < 2)
    throw std::invalid_argument("streaming core needs at least 4 samples");

  const std::size_t n_half = a.size();
  InverseCore core(n_half, config);
  std::vector<double> x(2 * n_half);
  auto store = [&](const SamplePair& p) {
    x[2 * p.index] = p.even;
    x[2 * p.index + 1] = p.odd;
  };
  for (std::size_t j = 0; j < n_half; ++j)
    if (auto p = core.push(a[j], d[j])) store(*p);
  store(core.flush());
  return x;
}

}  // namespace dwt
