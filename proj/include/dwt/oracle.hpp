#ifndef DWT_ORACLE_HPP
#define DWT_ORACLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dwt/types.hpp"

namespace dwt {

// Deliberately naive reference transform: materialize the boundary extension,
// run plain two-pass lifting over it, gather the subbands. The streaming core
// is tested against this; keep it simple rather than fast.

// Extended copy of x with `margin` samples on each side, filled according to
// the boundary policy (mirror about the edge sample, or zeros).
std::vector<double> extend(std::span<const double> x, std::size_t margin,
                           BoundaryPolicy policy);

// Single-level analysis of any n >= 1 (odd lengths allowed; the approximation
// keeps the extra sample). Honors mode, boundary and scaling from config.
Subbands oracle_forward(std::span<const double> x, const CoreConfig& config);

// Single-level synthesis; needs n = |a| + |d| >= 2 and |a| - |d| in {0, 1}.
std::vector<double> oracle_inverse(std::span<const double> a,
                                   std::span<const double> d,
                                   const CoreConfig& config);

// J-fold recursion of the single-level oracle on the approximation band.
Pyramid1d oracle_forward_multi(std::span<const double> x, std::size_t levels,
                               const CoreConfig& config);
std::vector<double> oracle_inverse_multi(const Pyramid1d& pyramid,
                                         const CoreConfig& config);

// Separable 2-D reference: full 1-D oracle down every column, then across
// every resulting row. Column order matters in integer mode, so this fixes
// the same order the streaming 2-D core uses.
Pyramid2d oracle_forward_2d(const Plane& image, std::size_t levels,
                            const CoreConfig& config);
Plane oracle_inverse_2d(const Pyramid2d& pyramid, const CoreConfig& config);

}  // namespace dwt

#endif
