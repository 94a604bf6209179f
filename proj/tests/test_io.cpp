#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "dwt/core2d.hpp"
#include "dwt/io.hpp"
#include "dwt/multiscale.hpp"
#include "dwt/oracle.hpp"

using namespace dwt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dwt_io_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), std::streamsize(bytes.size()));
}

}  // namespace

TEST_CASE("csv round trip preserves doubles exactly") {
  TempDir tmp;
  const std::vector<double> values{0.1, -3.5, 1e-17, 12345.6789012345678,
                                   -0.0, 7};
  const std::string path = tmp.file("v.csv");
  io::write_csv(path, values);
  const std::vector<double> back = io::read_csv(path, ArithmeticMode::Real);
  REQUIRE(back.size() == values.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(back[i] == values[i]);
}

TEST_CASE("csv accepts blank lines and CRLF endings") {
  TempDir tmp;
  const std::string path = tmp.file("v.csv");
  write_bytes(path, "1.5\r\n\r\n-2\n\n3e2\n");
  const std::vector<double> v = io::read_csv(path, ArithmeticMode::Real);
  CHECK(v == std::vector<double>{1.5, -2, 300});
}

TEST_CASE("csv rejects junk, non-finite and fractional-in-integer-mode") {
  TempDir tmp;
  const std::string path = tmp.file("v.csv");
  write_bytes(path, "1.0\nbanana\n");
  CHECK_THROWS_AS((void)io::read_csv(path, ArithmeticMode::Real),
                  std::runtime_error);
  write_bytes(path, "1.0\n2.0extra\n");
  CHECK_THROWS_AS((void)io::read_csv(path, ArithmeticMode::Real),
                  std::runtime_error);
  write_bytes(path, "inf\n");
  CHECK_THROWS_AS((void)io::read_csv(path, ArithmeticMode::Real),
                  std::runtime_error);
  write_bytes(path, "1\n2.5\n");
  CHECK_THROWS_AS((void)io::read_csv(path, ArithmeticMode::ReversibleInteger),
                  std::runtime_error);
  CHECK(io::read_csv(path, ArithmeticMode::Real) ==
        std::vector<double>{1, 2.5});
  CHECK_THROWS_AS((void)io::read_csv(tmp.file("absent.csv"),
                                     ArithmeticMode::Real),
                  std::runtime_error);
}

TEST_CASE("pgm parses the binary format, comments included") {
  TempDir tmp;
  const std::string path = tmp.file("img.pgm");
  write_bytes(path, "P5 # a comment\n# another\n2 3\n255\n\x01\x02\x03\x04\x05\x06");
  const io::PgmImage img = io::read_pgm(path);
  CHECK(img.maxval == 255);
  REQUIRE(img.plane.width == 2);
  REQUIRE(img.plane.height == 3);
  CHECK(img.plane.at(0, 0) == 1);
  CHECK(img.plane.at(1, 2) == 6);
}

TEST_CASE("pgm handles two-byte big-endian samples") {
  TempDir tmp;
  const std::string path = tmp.file("img16.pgm");
  // 2x1, maxval 1000, samples 0x0102=258 and 0x0300=768
  write_bytes(path, std::string("P5\n2 1\n1000\n") +
                        std::string("\x01\x02\x03\x00", 4));
  const io::PgmImage img = io::read_pgm(path);
  CHECK(img.maxval == 1000);
  CHECK(img.plane.at(0, 0) == 258);
  CHECK(img.plane.at(1, 0) == 768);

  io::write_pgm(path, img.plane, img.maxval);
  const io::PgmImage back = io::read_pgm(path);
  CHECK(back.plane.data == img.plane.data);
  CHECK(back.maxval == 1000);
}

TEST_CASE("pgm write clamps and rounds") {
  TempDir tmp;
  Plane p(2, 2);
  p.at(0, 0) = -4.2;
  p.at(1, 0) = 300.0;
  p.at(0, 1) = 99.5;
  p.at(1, 1) = 12.3;
  const std::string path = tmp.file("c.pgm");
  io::write_pgm(path, p, 255);
  const io::PgmImage img = io::read_pgm(path);
  CHECK(img.plane.at(0, 0) == 0);
  CHECK(img.plane.at(1, 0) == 255);
  CHECK(img.plane.at(0, 1) == 100);
  CHECK(img.plane.at(1, 1) == 12);
}

TEST_CASE("pgm rejects malformed headers and truncated payloads") {
  TempDir tmp;
  const std::string path = tmp.file("bad.pgm");
  write_bytes(path, "P2\n2 2\n255\n");
  CHECK_THROWS_AS((void)io::read_pgm(path), std::runtime_error);
  write_bytes(path, "P5\n2 2\n255\n\x01\x02");  // two bytes short
  CHECK_THROWS_AS((void)io::read_pgm(path), std::runtime_error);
  write_bytes(path, "P5\n2 2\n70000\n");  // maxval too large
  CHECK_THROWS_AS((void)io::read_pgm(path), std::runtime_error);
  write_bytes(path, "P5\n2 1\n255\n\x01\x02\x03");  // one byte too many
  CHECK_THROWS_AS((void)io::read_pgm(path), std::runtime_error);
}

TEST_CASE("pyramid container round trips a 1-D decomposition") {
  TempDir tmp;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1, 1);
  std::vector<double> x(32);
  for (double& v : x) v = dist(rng);

  CoreConfig cfg;
  cfg.boundary = BoundaryPolicy::ZeroPadding;
  cfg.scaling = true;
  io::PyramidFile f;
  f.dims = 1;
  f.boundary = cfg.boundary;
  f.scaling = true;
  f.p1 = cascade_forward(x, 3, cfg);

  const std::string path = tmp.file("sig.dwtp");
  io::write_pyramid(path, f);
  const io::PyramidFile g = io::read_pyramid(path);
  CHECK(g.dims == 1);
  CHECK(g.mode == ArithmeticMode::Real);
  CHECK(g.boundary == BoundaryPolicy::ZeroPadding);
  CHECK(g.scaling);
  CHECK(g.maxval == 0);
  CHECK(g.signal_length() == 32);
  REQUIRE(g.p1.depth() == 3);
  CHECK(g.p1.approx == f.p1.approx);  // doubles survive bit-for-bit
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(g.p1.details[j] == f.p1.details[j]);
}

TEST_CASE("pyramid container round trips a 2-D integer decomposition") {
  TempDir tmp;
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> dist(0, 255);
  Plane img(16, 8);
  for (double& v : img.data) v = dist(rng);

  CoreConfig cfg;
  cfg.mode = ArithmeticMode::ReversibleInteger;
  io::PyramidFile f;
  f.dims = 2;
  f.mode = cfg.mode;
  f.maxval = 255;
  f.p2 = forward_2d(img, 2, cfg);

  const std::string path = tmp.file("img.dwtp");
  io::write_pyramid(path, f);
  const io::PyramidFile g = io::read_pyramid(path);
  CHECK(g.dims == 2);
  CHECK(g.mode == ArithmeticMode::ReversibleInteger);
  CHECK(g.maxval == 255);
  CHECK(g.image_width() == 16);
  CHECK(g.image_height() == 8);
  REQUIRE(g.p2.depth() == 2);
  CHECK(g.p2.approx.data == f.p2.approx.data);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(g.p2.levels[j].h.data == f.p2.levels[j].h.data);
    CHECK(g.p2.levels[j].v.data == f.p2.levels[j].v.data);
    CHECK(g.p2.levels[j].d.data == f.p2.levels[j].d.data);
  }
  CHECK(inverse_2d(g.p2, cfg).data == img.data);
}

TEST_CASE("pyramid container rejects damage") {
  TempDir tmp;
  io::PyramidFile f;
  f.dims = 1;
  f.p1 = cascade_forward(std::vector<double>(16, 1.0), 2, CoreConfig{});
  const std::string path = tmp.file("sig.dwtp");
  io::write_pyramid(path, f);

  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  in.close();

  std::string wrong_magic = bytes;
  wrong_magic[0] = 'X';
  write_bytes(path, wrong_magic);
  CHECK_THROWS_AS((void)io::read_pyramid(path), std::runtime_error);

  write_bytes(path, bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS((void)io::read_pyramid(path), std::runtime_error);

  write_bytes(path, bytes + "!!");
  CHECK_THROWS_AS((void)io::read_pyramid(path), std::runtime_error);

  CHECK_THROWS_AS((void)io::read_pyramid(tmp.file("absent.dwtp")),
                  std::runtime_error);
}
