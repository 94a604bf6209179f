#ifndef DWT_STAGE_HPP
#define DWT_STAGE_HPP

#include <array>
#include <cstddef>

#include "dwt/types.hpp"

namespace dwt {

// The four stage shapes of the lifting pipeline. PredictT/UpdateS are the
// analysis-labeled shapes, InvPredictT/InvUpdateS the synthesis-labeled ones.
// Each carries its boundary modification at a different position variant;
// which direction actually consumes which shape is decided in core1d.
enum class StageKind { PredictT, UpdateS, InvPredictT, InvUpdateS };

// Where the current invocation sits relative to the signal ends. End_Nminus2
// uses interior-shaped matrices; it is named so the schedule is total.
enum class PositionVariant { Begin0, Begin1, Interior, End_Nminus2, Flush_N };

using Mat4 = std::array<std::array<double, 4>, 4>;

// One 4x4 stage applied to the lane vector [B_a, B_d, in1, in0]. Every kind
// has exactly one row that mixes lanes: row 1 for the predict shapes (operands
// lane 0 = held value, lane 2 = incoming sample) and row 2 for the update
// shapes (operands lane 3 = held detail, lane 1 = fresh detail). tap_state and
// tap_fresh record that row's integer multiplicities on the held and fresh
// operand so the reversible-integer path can rebuild its floored lifting term.
struct StageMatrix {
  Mat4 m{};
  StageKind kind{};
  PositionVariant variant{};
  int tap_state = 0;
  int tap_fresh = 0;
};

// Index bookkeeping used throughout: theta maps an invocation to the signal
// row it finalizes (lag F), omega halves a signal index, rounding up.
constexpr long long theta(long long n, long long lag = 1) { return n + lag; }

constexpr long long omega(long long n) {
  return (n >= 0) ? (n + 1) / 2 : -((-n) / 2);
}

struct VariantPair {
  PositionVariant predict;
  PositionVariant update;
};

// Maps invocation index to the position variant both stages use. Requires
// n_half >= 2 and invocation <= n_half; Begin1 wins the n_half == 2 collision
// with End_Nminus2.
VariantPair select_variant(std::size_t invocation, std::size_t n_half);

// Builds the stage matrix for (kind, variant) under the given boundary
// policy and lifting constants. Entries are exact products of the constants.
StageMatrix make_stage_matrix(StageKind kind, PositionVariant variant,
                              const CoreConfig& config);

}  // namespace dwt

#endif
