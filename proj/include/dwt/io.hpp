#ifndef DWT_IO_HPP
#define DWT_IO_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dwt/types.hpp"

namespace dwt::io {

// All readers throw std::runtime_error on missing, malformed or truncated
// input; shape complaints (odd lengths and the like) are left to the callers.

// One value per line. In integer mode any fractional value is rejected.
std::vector<double> read_csv(const std::string& path, ArithmeticMode mode);
void write_csv(const std::string& path, std::span<const double> values);

struct PgmImage {
  Plane plane;
  unsigned maxval = 255;
};

// Binary (P5) PGM, maxval up to 65535 (two-byte samples are big-endian).
PgmImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Plane& plane, unsigned maxval);

// Container for a decomposition: fixed little-endian header followed by the
// subbands, deepest first (1-D: a^J, d^J..d^1; 2-D: a^J plane, then h/v/d per
// level from deepest to finest). Real payloads are 8-byte doubles, integer
// payloads 4-byte signed ints.
struct PyramidFile {
  unsigned dims = 1;
  ArithmeticMode mode = ArithmeticMode::Real;
  BoundaryPolicy boundary = BoundaryPolicy::Symmetric;
  bool scaling = false;
  unsigned maxval = 0;  // source image maxval; 0 when the source was a CSV
  Pyramid1d p1;         // used when dims == 1
  Pyramid2d p2;         // used when dims == 2

  std::size_t signal_length() const;  // 1-D original length
  std::size_t image_width() const;
  std::size_t image_height() const;
};

void write_pyramid(const std::string& path, const PyramidFile& f);
PyramidFile read_pyramid(const std::string& path);

}  // namespace dwt::io

#endif
