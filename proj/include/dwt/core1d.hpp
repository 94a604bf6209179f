#ifndef DWT_CORE1D_HPP
#define DWT_CORE1D_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dwt/stage.hpp"
#include "dwt/types.hpp"

namespace dwt {

enum class Direction { Forward, Inverse };

// Everything one running transform needs to remember between invocations:
// two held lanes, the invocation counter and the schedule length. lag is the
// one-invocation delay between consuming a pair and emitting one; kappa the
// number of held lanes.
struct CoreState {
  double buffer_a = 0.0;
  double buffer_d = 0.0;
  std::size_t invocation = 0;
  std::size_t n_half = 0;
  static constexpr std::size_t lag = 1;
  static constexpr std::size_t kappa = 2;
};

// Subband pair emitted by a forward invocation; index in [0, n/2).
struct OutputPair {
  double a = 0.0;
  double d = 0.0;
  std::size_t index = 0;
};

// Reconstructed sample pair (x[2i], x[2i+1]) emitted by an inverse invocation.
struct SamplePair {
  double even = 0.0;
  double odd = 0.0;
  std::size_t index = 0;
};

// The two stage matrices one invocation applies, first then second.
struct StagePair {
  StageMatrix first;
  StageMatrix second;
};

namespace detail {

inline std::array<double, 4> apply(const Mat4& m,
                                   const std::array<double, 4>& x) {
  std::array<double, 4> y{};
  for (std::size_t r = 0; r < 4; ++r)
    y[r] = m[r][0] * x[0] + m[r][1] * x[1] + m[r][2] * x[2] + m[r][3] * x[3];
  return y;
}

}  // namespace detail

// Runs one invocation: builds the lane vector [B_a, B_d, in1, in0], applies
// both stages, stores lanes 0/1 back into the state and hands out lanes 2/3.
// Returns nothing for the very first invocation (its output lanes predate the
// signal). In integer mode the matrices' mixing rows are evaluated as floored
// lifting terms (taps give the operand multiplicities); the floor sits inside
// the term so an inverse core subtracts bit-for-bit what the forward added.
inline std::optional<OutputPair> core_step(CoreState& state, double in0,
                                           double in1, const StagePair& stages,
                                           ArithmeticMode mode,
                                           Direction direction) {
  if (state.invocation > state.n_half)
    throw std::logic_error("core stepped past its flush invocation");

  const std::array<double, 4> x{state.buffer_a, state.buffer_d, in1, in0};
  std::array<double, 4> y;
  if (mode == ArithmeticMode::Real) {
    y = detail::apply(stages.second.m, detail::apply(stages.first.m, x));
  } else {
    // Fixed lane moves shared by every variant, plus the two floored terms.
    const double p = stages.first.tap_state * x[0] + stages.first.tap_fresh * x[2];
    const double t1 = direction == Direction::Forward
                          ? x[3] - std::floor(p * 0.5)
                          : x[3] - std::floor((p + 2.0) * 0.25);
    const double t2 = x[0], t3 = x[1];
    const double u = stages.second.tap_fresh * t1 + stages.second.tap_state * t3;
    const double y2 = direction == Direction::Forward
                          ? t2 + std::floor((u + 2.0) * 0.25)
                          : t2 + std::floor(u * 0.5);
    y = {x[2], t1, y2, t1};
  }

  state.buffer_a = y[0];
  state.buffer_d = y[1];
  const std::size_t done = state.invocation++;
  if (done == 0) return std::nullopt;
  return OutputPair{y[2], y[3], done - 1};
}

namespace detail {

using StageTable = std::array<StagePair, 5>;

constexpr std::size_t variant_slot(PositionVariant v) {
  return static_cast<std::size_t>(v);
}

// Which stage shapes a direction consumes. The forward core needs the flush
// modification in its predict stage and the second-invocation modification in
// its update stage, which is exactly the InvPredictT/InvUpdateS pairing; the
// inverse core takes the other pairing with the constants swapped and negated
// so each stage subtracts what its forward counterpart added. The oracle
// sweeps in tests/test_core1d.cpp pin this assignment down.
inline std::shared_ptr<const StageTable> build_stage_table(
    Direction direction, const CoreConfig& config) {
  CoreConfig c = config;
  StageKind first = StageKind::InvPredictT;
  StageKind second = StageKind::InvUpdateS;
  if (direction == Direction::Inverse) {
    first = StageKind::PredictT;
    second = StageKind::UpdateS;
    c.alpha = -config.beta;
    c.beta = -config.alpha;
  }
  auto table = std::make_shared<StageTable>();
  for (PositionVariant v :
       {PositionVariant::Begin0, PositionVariant::Begin1,
        PositionVariant::Interior, PositionVariant::End_Nminus2,
        PositionVariant::Flush_N}) {
    (*table)[variant_slot(v)] = {make_stage_matrix(first, v, c),
                                 make_stage_matrix(second, v, c)};
  }
  return table;
}

}  // namespace detail

// Streaming single-level analysis over 2*n_half samples, fed two at a time.
// push k consumes (x[2k], x[2k+1]); the first push emits nothing, every later
// push emits one subband pair, and flush() emits the last one. Internally the
// invocation that emits pair k-1 works on the straddled pair
// (x[2k-1], x[2k]), so one sample is always held back between pushes.
class ForwardCore {
 public:
  ForwardCore(std::size_t n_half, const CoreConfig& config)
      : config_(config), table_(detail::build_stage_table(Direction::Forward,
                                                          config)) {
    if (n_half < 2)
      throw std::invalid_argument("streaming core needs at least 4 samples");
    state_.n_half = n_half;
  }

  std::optional<OutputPair> push(double even, double odd) {
    if (state_.invocation >= state_.n_half)
      throw std::logic_error("push after all sample pairs were consumed");
    auto out = step(stash_, even);
    stash_ = odd;
    return scale(out);
  }

  OutputPair flush() {
    if (state_.invocation != state_.n_half)
      throw std::logic_error("flush before all sample pairs were consumed");
    auto out = step(stash_, 0.0);
    return *scale(out);
  }

  void reset() {
    const std::size_t n = state_.n_half;
    state_ = CoreState{};
    state_.n_half = n;
    stash_ = 0.0;
  }

  const CoreState& state() const { return state_; }
  std::size_t n_half() const { return state_.n_half; }

 private:
  std::optional<OutputPair> step(double in0, double in1) {
    const VariantPair v = select_variant(state_.invocation, state_.n_half);
    return core_step(state_, in0, in1,
                     (*table_)[detail::variant_slot(v.predict)], config_.mode,
                     Direction::Forward);
  }

  std::optional<OutputPair> scale(std::optional<OutputPair> out) const {
    if (out && config_.scaling && config_.mode == ArithmeticMode::Real) {
      out->a *= config_.zeta;
      out->d /= config_.zeta;
    }
    return out;
  }

  CoreState state_;
  CoreConfig config_;
  double stash_ = 0.0;
  std::shared_ptr<const detail::StageTable> table_;
};

// Streaming single-level synthesis: push j consumes (a[j], d[j]) and emits
// the reconstructed pair (x[2j-2], x[2j-1]) from the second push on; flush()
// consumes zeros and emits the final pair. Mirrors ForwardCore's cadence, but
// the held-back sample sits on the output side instead of the input side.
class InverseCore {
 public:
  InverseCore(std::size_t n_half, const CoreConfig& config)
      : config_(config), table_(detail::build_stage_table(Direction::Inverse,
                                                          config)) {
    if (n_half < 2)
      throw std::invalid_argument("streaming core needs at least 4 samples");
    state_.n_half = n_half;
  }

  std::optional<SamplePair> push(double a, double d) {
    if (state_.invocation >= state_.n_half)
      throw std::logic_error("push after all coefficient pairs were consumed");
    if (config_.scaling && config_.mode == ArithmeticMode::Real) {
      a /= config_.zeta;
      d *= config_.zeta;
    }
    auto out = step(a, d);
    if (!out) {  // first invocation: x[0] appears on the held detail lane
      pending_even_ = state_.buffer_d;
      return std::nullopt;
    }
    SamplePair pair{pending_even_, out->a, out->index};
    pending_even_ = out->d;
    return pair;
  }

  SamplePair flush() {
    if (state_.invocation != state_.n_half)
      throw std::logic_error("flush before all coefficient pairs were consumed");
    auto out = step(0.0, 0.0);
    return SamplePair{pending_even_, out->a, out->index};
  }

  void reset() {
    const std::size_t n = state_.n_half;
    state_ = CoreState{};
    state_.n_half = n;
    pending_even_ = 0.0;
  }

  const CoreState& state() const { return state_; }
  std::size_t n_half() const { return state_.n_half; }

 private:
  std::optional<OutputPair> step(double a, double d) {
    const VariantPair v = select_variant(state_.invocation, state_.n_half);
    return core_step(state_, /*in0=*/a, /*in1=*/d,
                     (*table_)[detail::variant_slot(v.predict)], config_.mode,
                     Direction::Inverse);
  }

  CoreState state_;
  CoreConfig config_;
  double pending_even_ = 0.0;
  std::shared_ptr<const detail::StageTable> table_;
};

// Source-driven analysis: next() is called exactly n times, in order.
template <typename NextFn>
Subbands forward_1d_stream(NextFn&& next, std::size_t n,
                           const CoreConfig& config) {
  config.validate();
  if (n % 2 != 0) throw std::invalid_argument("signal length must be even");
  if (n < 4) throw std::invalid_argument("streaming core needs at least 4 samples");

  ForwardCore core(n / 2, config);
  Subbands out;
  out.a.resize(n / 2);
  out.d.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double even = next();
    const double odd = next();
    if (auto p = core.push(even, odd)) {
      out.a[p->index] = p->a;
      out.d[p->index] = p->d;
    }
  }
  const OutputPair last = core.flush();
  out.a[last.index] = last.a;
  out.d[last.index] = last.d;
  return out;
}

Subbands forward_1d(std::span<const double> x, const CoreConfig& config);

std::vector<double> inverse_1d(std::span<const double> a,
                               std::span<const double> d,
                               const CoreConfig& config);

}  // namespace dwt

#endif
