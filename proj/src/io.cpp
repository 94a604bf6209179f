#include "dwt/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace dwt::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) fail(path, "read error");
  return data;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) fail(path, "write error");
}

// Little-endian scalar packing, independent of host byte order.
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

struct Reader {
  const std::string& data;
  const std::string& path;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (pos + n > data.size()) fail(path, "truncated file");
  }
  std::uint8_t u8() {
    need(1);
    return std::uint8_t(data[pos++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(std::uint8_t(data[pos++])) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(data[pos++])) << (8 * i);
    return v;
  }
};

void put_value(std::string& out, double v, ArithmeticMode mode,
               const std::string& path) {
  if (mode == ArithmeticMode::ReversibleInteger) {
    if (v != std::floor(v) || v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max())
      fail(path, "coefficient does not fit a 32-bit integer");
    put_u32(out, std::uint32_t(std::int32_t(v)));
  } else {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    put_u64(out, bits);
  }
}

double get_value(Reader& r, ArithmeticMode mode) {
  if (mode == ArithmeticMode::ReversibleInteger)
    return double(std::int32_t(r.u32()));
  const std::uint64_t bits = r.u64();
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

constexpr char kMagic[4] = {'D', 'W', 'T', 'P'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

std::vector<double> read_csv(const std::string& path, ArithmeticMode mode) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open for reading");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    const std::string tok = line.substr(b, e - b + 1);

    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
      fail(path, "line " + std::to_string(lineno) + ": not a finite number");
    if (mode == ArithmeticMode::ReversibleInteger && v != std::floor(v))
      fail(path, "line " + std::to_string(lineno) +
                     ": fractional value in integer mode");
    values.push_back(v);
  }
  if (in.bad()) fail(path, "read error");
  return values;
}

void write_csv(const std::string& path, std::span<const double> values) {
  std::string out;
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out += buf;
  }
  write_file(path, out);
}

namespace {

// Header token scanner: skips whitespace and # comments.
std::size_t pgm_token(const std::string& data, std::size_t pos,
                      const std::string& path, std::string& tok) {
  while (pos < data.size()) {
    if (std::isspace(std::uint8_t(data[pos]))) {
      ++pos;
    } else if (data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  tok.clear();
  while (pos < data.size() && !std::isspace(std::uint8_t(data[pos])))
    tok += data[pos++];
  if (tok.empty()) fail(path, "truncated header");
  return pos;
}

unsigned pgm_number(const std::string& tok, const std::string& path) {
  if (tok.empty() || tok.size() > 9) fail(path, "bad number in header");
  unsigned v = 0;
  for (char c : tok) {
    if (!std::isdigit(std::uint8_t(c))) fail(path, "bad number in header");
    v = v * 10 + unsigned(c - '0');
  }
  return v;
}

}  // namespace

PgmImage read_pgm(const std::string& path) {
  const std::string data = read_file(path);
  std::string tok;
  std::size_t pos = pgm_token(data, 0, path, tok);
  if (tok != "P5") fail(path, "not a binary PGM (P5) file");
  pos = pgm_token(data, pos, path, tok);
  const unsigned w = pgm_number(tok, path);
  pos = pgm_token(data, pos, path, tok);
  const unsigned h = pgm_number(tok, path);
  pos = pgm_token(data, pos, path, tok);
  const unsigned maxval = pgm_number(tok, path);
  if (w == 0 || h == 0) fail(path, "zero image dimension");
  if (maxval == 0 || maxval > 65535) fail(path, "maxval out of range");
  if (pos >= data.size() || !std::isspace(std::uint8_t(data[pos])))
    fail(path, "missing header terminator");
  ++pos;

  const std::size_t bytes = maxval > 255 ? 2 : 1;
  const std::size_t expect = std::size_t(w) * h * bytes;
  if (data.size() - pos < expect) fail(path, "truncated pixel data");
  if (data.size() - pos > expect) fail(path, "trailing bytes after pixel data");

  PgmImage img;
  img.maxval = maxval;
  img.plane = Plane(w, h);
  for (std::size_t i = 0; i < std::size_t(w) * h; ++i) {
    unsigned v = std::uint8_t(data[pos++]);
    if (bytes == 2) v = (v << 8) | std::uint8_t(data[pos++]);  // big-endian
    if (v > maxval) fail(path, "sample exceeds maxval");
    img.plane.data[i] = double(v);
  }
  return img;
}

void write_pgm(const std::string& path, const Plane& plane, unsigned maxval) {
  if (plane.width == 0 || plane.height == 0)
    throw std::invalid_argument("cannot write an empty image");
  if (maxval == 0 || maxval > 65535)
    throw std::invalid_argument("maxval out of range");

  std::string out = "P5\n" + std::to_string(plane.width) + " " +
                    std::to_string(plane.height) + "\n" +
                    std::to_string(maxval) + "\n";
  for (double raw : plane.data) {
    long long v = std::llround(raw);
    if (v < 0) v = 0;
    if (v > maxval) v = maxval;
    if (maxval > 255) out.push_back(char((v >> 8) & 0xff));
    out.push_back(char(v & 0xff));
  }
  write_file(path, out);
}

std::size_t PyramidFile::signal_length() const {
  return p1.approx.size() << p1.depth();
}

std::size_t PyramidFile::image_width() const {
  return p2.approx.width << p2.depth();
}

std::size_t PyramidFile::image_height() const {
  return p2.approx.height << p2.depth();
}

void write_pyramid(const std::string& path, const PyramidFile& f) {
  if (f.dims != 1 && f.dims != 2)
    throw std::invalid_argument("dims must be 1 or 2");
  const std::size_t depth = f.dims == 1 ? f.p1.depth() : f.p2.depth();
  if (depth == 0) throw std::invalid_argument("pyramid has no levels");

  std::string out(kMagic, sizeof kMagic);
  put_u32(out, kVersion);
  out.push_back(char(f.dims));
  out.push_back(char(f.mode == ArithmeticMode::ReversibleInteger ? 1 : 0));
  out.push_back(char(f.boundary == BoundaryPolicy::ZeroPadding ? 1 : 0));
  out.push_back(char(f.scaling ? 1 : 0));
  if (f.dims == 1) {
    put_u64(out, f.signal_length());
  } else {
    put_u64(out, f.image_width());
    put_u64(out, f.image_height());
  }
  put_u32(out, std::uint32_t(depth));
  put_u32(out, f.maxval);

  auto put_band = [&](std::span<const double> band) {
    for (double v : band) put_value(out, v, f.mode, path);
  };
  if (f.dims == 1) {
    put_band(f.p1.approx);
    for (std::size_t j = depth; j-- > 0;) put_band(f.p1.details[j]);
  } else {
    put_band(f.p2.approx.data);
    for (std::size_t j = depth; j-- > 0;) {
      put_band(f.p2.levels[j].h.data);
      put_band(f.p2.levels[j].v.data);
      put_band(f.p2.levels[j].d.data);
    }
  }
  write_file(path, out);
}

PyramidFile read_pyramid(const std::string& path) {
  const std::string data = read_file(path);
  Reader r{data, path};

  r.need(4);
  if (std::memcmp(data.data(), kMagic, sizeof kMagic) != 0)
    fail(path, "not a pyramid container");
  r.pos = 4;
  if (r.u32() != kVersion) fail(path, "unsupported container version");

  PyramidFile f;
  f.dims = r.u8();
  if (f.dims != 1 && f.dims != 2) fail(path, "bad dimension count");
  const std::uint8_t mode = r.u8();
  if (mode > 1) fail(path, "bad arithmetic mode");
  f.mode = mode ? ArithmeticMode::ReversibleInteger : ArithmeticMode::Real;
  const std::uint8_t boundary = r.u8();
  if (boundary > 1) fail(path, "bad boundary policy");
  f.boundary =
      boundary ? BoundaryPolicy::ZeroPadding : BoundaryPolicy::Symmetric;
  const std::uint8_t scaling = r.u8();
  if (scaling > 1) fail(path, "bad scaling flag");
  f.scaling = scaling != 0;

  std::uint64_t w = 0, h = 0, n = 0;
  if (f.dims == 1)
    n = r.u64();
  else {
    w = r.u64();
    h = r.u64();
  }
  const std::uint32_t depth = r.u32();
  f.maxval = r.u32();
  if (depth == 0 || depth > 60) fail(path, "bad level count");

  auto check_band = [&](std::uint64_t len) {
    if (len == 0) fail(path, "degenerate subband");
  };
  if (f.dims == 1) {
    if (n < 2 || n % (std::uint64_t{1} << depth) != 0)
      fail(path, "signal length inconsistent with level count");
    check_band(n >> depth);
    f.p1.approx.resize(n >> depth);
    for (double& v : f.p1.approx) v = get_value(r, f.mode);
    f.p1.details.resize(depth);
    for (std::size_t j = depth; j-- > 0;) {
      f.p1.details[j].resize(n >> (j + 1));
      for (double& v : f.p1.details[j]) v = get_value(r, f.mode);
    }
  } else {
    if (w < 2 || h < 2 || w % (std::uint64_t{1} << depth) != 0 ||
        h % (std::uint64_t{1} << depth) != 0)
      fail(path, "image dimensions inconsistent with level count");
    check_band((w >> depth) * (h >> depth));
    auto read_plane = [&](std::size_t pw, std::size_t ph) {
      Plane p(pw, ph);
      for (double& v : p.data) v = get_value(r, f.mode);
      return p;
    };
    f.p2.approx = read_plane(w >> depth, h >> depth);
    f.p2.levels.resize(depth);
    for (std::size_t j = depth; j-- > 0;) {
      const std::size_t bw = w >> (j + 1), bh = h >> (j + 1);
      f.p2.levels[j].h = read_plane(bw, bh);
      f.p2.levels[j].v = read_plane(bw, bh);
      f.p2.levels[j].d = read_plane(bw, bh);
    }
  }
  if (r.pos != data.size()) fail(path, "trailing bytes after payload");
  return f;
}

}  // namespace dwt::io
