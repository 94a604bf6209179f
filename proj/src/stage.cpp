#include "dwt/stage.hpp"

#include <stdexcept>

namespace dwt {

VariantPair select_variant(std::size_t invocation, std::size_t n_half) {
  if (n_half < 2)
    throw std::invalid_argument("core schedule needs at least 4 samples");
  if (invocation > n_half)
    throw std::invalid_argument("invocation past end of schedule");

  PositionVariant v = PositionVariant::Interior;
  if (invocation == 0)
    v = PositionVariant::Begin0;
  else if (invocation == 1)
    v = PositionVariant::Begin1;
  else if (invocation == n_half)
    v = PositionVariant::Flush_N;
  else if (invocation == n_half - 1)
    v = PositionVariant::End_Nminus2;
  return {v, v};
}

namespace {

// Interior shapes. Lanes are [B_a, B_d, in1, in0]; the predict shape forms a
// detail on row 1 and rotates the fresh samples into the buffer lanes, the
// update shape corrects lane 2 with the neighbouring details.
Mat4 predict_shape(double a) {
  return {{{0, 0, 1, 0},
           {a, 0, a, 1},
           {1, 0, 0, 0},
           {0, 1, 0, 0}}};
}

Mat4 update_shape(double b) {
  return {{{1, 0, 0, 0},
           {0, 1, 0, 0},
           {0, b, 1, b},
           {0, 1, 0, 0}}};
}

}  // namespace

StageMatrix make_stage_matrix(StageKind kind, PositionVariant variant,
                              const CoreConfig& config) {
  config.validate();
  const bool mirror = config.boundary == BoundaryPolicy::Symmetric;

  StageMatrix s;
  s.kind = kind;
  s.variant = variant;
  s.tap_state = 1;
  s.tap_fresh = 1;

  const bool is_predict =
      kind == StageKind::PredictT || kind == StageKind::InvPredictT;
  const double c = is_predict ? config.alpha : config.beta;
  s.m = is_predict ? predict_shape(config.alpha) : update_shape(config.beta);

  // Each kind modifies exactly one variant: the mirrored neighbour collapses
  // onto the surviving operand (weight doubles), or is dropped entirely under
  // zero padding. All other variants keep the interior shape.
  const int kept = mirror ? 2 : 1;
  switch (kind) {
    case StageKind::PredictT:
      if (variant == PositionVariant::Begin0) {
        s.m[1] = {0, 0, kept * c, 1};
        s.tap_state = 0;
        s.tap_fresh = kept;
      }
      break;
    case StageKind::InvPredictT:
      if (variant == PositionVariant::Flush_N) {
        s.m[1] = {kept * c, 0, 0, 1};
        s.tap_state = kept;
        s.tap_fresh = 0;
      }
      break;
    case StageKind::UpdateS:
      if (variant == PositionVariant::Flush_N) {
        s.m[2] = {0, 0, 1, kept * c};
        s.tap_state = kept;
        s.tap_fresh = 0;
      }
      break;
    case StageKind::InvUpdateS:
      if (variant == PositionVariant::Begin1) {
        s.m[2] = {0, kept * c, 1, 0};
        s.tap_state = 0;
        s.tap_fresh = kept;
      }
      break;
  }
  return s;
}

}  // namespace dwt
