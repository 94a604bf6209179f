#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "dwt/oracle.hpp"

using namespace dwt;

namespace {

std::vector<double> random_signal(std::size_t n, unsigned seed,
                                  bool integral = false) {
  std::mt19937 rng(seed);
  std::vector<double> x(n);
  if (integral) {
    std::uniform_int_distribution<int> dist(-128, 127);
    for (double& v : x) v = dist(rng);
  } else {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : x) v = dist(rng);
  }
  return x;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("extend: mirrored margins") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK(extend(x, 2, BoundaryPolicy::Symmetric) ==
        std::vector<double>{3, 2, 1, 2, 3, 4, 3, 2});
}

TEST_CASE("extend: zero margins") {
  const std::vector<double> x{1, 2};
  CHECK(extend(x, 1, BoundaryPolicy::ZeroPadding) ==
        std::vector<double>{0, 1, 2, 0});
}

TEST_CASE("extend: single sample mirrors onto itself") {
  const std::vector<double> x{5};
  CHECK(extend(x, 2, BoundaryPolicy::Symmetric) ==
        std::vector<double>{5, 5, 5, 5, 5});
}

TEST_CASE("extend: margin wider than the signal") {
  const std::vector<double> x{1, 2, 3};
  // mirrors fold with period 2(n-1)=4: x[-4..6] = 1 2 3 2 | 1 2 3 | 2 1 2 3
  CHECK(extend(x, 4, BoundaryPolicy::Symmetric) ==
        std::vector<double>{1, 2, 3, 2, 1, 2, 3, 2, 1, 2, 3});
}

TEST_CASE("extend: mirror consistency and idempotence on the interior") {
  const std::vector<double> x{4, 8, 15, 16, 23, 42};
  const std::vector<double> ext = extend(x, 2, BoundaryPolicy::Symmetric);
  // values[m-k] == values[m+k] about the first original sample
  CHECK(ext[1] == ext[3]);
  CHECK(ext[0] == ext[4]);
  // re-extending reproduces the interior untouched
  const std::vector<double> twice = extend(ext, 2, BoundaryPolicy::Symmetric);
  for (std::size_t i = 0; i < ext.size(); ++i) CHECK(twice[i + 2] == ext[i]);
}

TEST_CASE("extend rejects an empty signal") {
  CHECK_THROWS_AS((void)extend(std::vector<double>{}, 2,
                               BoundaryPolicy::Symmetric),
                  std::invalid_argument);
}

TEST_CASE("forward: zeros stay zeros") {
  const std::vector<double> x(8, 0.0);
  const Subbands sb = oracle_forward(x, CoreConfig{});
  for (double v : sb.a) CHECK(v == 0.0);
  for (double v : sb.d) CHECK(v == 0.0);
}

TEST_CASE("forward: constants pass through the approximation") {
  const std::vector<double> x(6, 3.5);
  const Subbands sb = oracle_forward(x, CoreConfig{});
  REQUIRE(sb.a.size() == 3);
  REQUIRE(sb.d.size() == 3);
  for (double v : sb.a) CHECK(v == doctest::Approx(3.5).epsilon(1e-14));
  for (double v : sb.d) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("forward: impulse fixture, mirrored boundary") {
  // worked by hand: d0 = 0 - (1+0)/2, d1 = 0; a0 = 1 + (d0+d0)/4,
  // a1 = 0 + (d0+d1)/4
  const std::vector<double> x{1, 0, 0, 0};
  const Subbands sb = oracle_forward(x, CoreConfig{});
  CHECK(sb.a == std::vector<double>{0.75, -0.125});
  CHECK(sb.d == std::vector<double>{-0.5, 0.0});
}

TEST_CASE("forward: impulse fixture, zero padding") {
  // same as above except the virtual left detail reads 0: a0 = 1 + d0/4
  CoreConfig cfg;
  cfg.boundary = BoundaryPolicy::ZeroPadding;
  const std::vector<double> x{1, 0, 0, 0};
  const Subbands sb = oracle_forward(x, cfg);
  CHECK(sb.a == std::vector<double>{0.875, -0.125});
  CHECK(sb.d == std::vector<double>{-0.5, 0.0});
}

TEST_CASE("forward: ramp fixture") {
  // linear ramp: interior details vanish (two vanishing moments of the
  // predictor); the right edge mirrors and leaves d1 = 4 - 3 = 1
  const std::vector<double> x{1, 2, 3, 4};
  const Subbands sb = oracle_forward(x, CoreConfig{});
  CHECK(sb.a == std::vector<double>{1.0, 3.25});
  CHECK(sb.d == std::vector<double>{0.0, 1.0});
}

TEST_CASE("forward: integer ramp fixture") {
  CoreConfig cfg;
  cfg.mode = ArithmeticMode::ReversibleInteger;
  const std::vector<double> x{1, 2, 3, 4, 5, 6};
  const Subbands sb = oracle_forward(x, cfg);
  CHECK(sb.a == std::vector<double>{1, 3, 5});
  CHECK(sb.d == std::vector<double>{0, 0, 1});
}

TEST_CASE("round trip: real, both boundaries, even and odd lengths") {
  for (BoundaryPolicy policy :
       {BoundaryPolicy::Symmetric, BoundaryPolicy::ZeroPadding}) {
    CoreConfig cfg;
    cfg.boundary = policy;
    for (std::size_t n : {2u, 3u, 4u, 5u, 7u, 16u, 33u, 64u}) {
      const std::vector<double> x = random_signal(n, 100 + unsigned(n));
      const Subbands sb = oracle_forward(x, cfg);
      CHECK(sb.a.size() == (n + 1) / 2);
      CHECK(sb.d.size() == n / 2);
      const std::vector<double> back = oracle_inverse(sb.a, sb.d, cfg);
      INFO("n=", n, " policy=", int(policy));
      CHECK(max_diff(x, back) <= 1e-12);
    }
  }
}

TEST_CASE("round trip: reversible integer is bit-exact") {
  for (BoundaryPolicy policy :
       {BoundaryPolicy::Symmetric, BoundaryPolicy::ZeroPadding}) {
    CoreConfig cfg;
    cfg.mode = ArithmeticMode::ReversibleInteger;
    cfg.boundary = policy;
    for (std::size_t n : {2u, 5u, 8u, 21u, 64u}) {
      const std::vector<double> x = random_signal(n, 7 + unsigned(n), true);
      const Subbands sb = oracle_forward(x, cfg);
      const std::vector<double> back = oracle_inverse(sb.a, sb.d, cfg);
      CHECK(x == back);
    }
  }
}

TEST_CASE("round trip: exhaustive small integer signals") {
  CoreConfig cfg;
  cfg.mode = ArithmeticMode::ReversibleInteger;
  // n=6 over [-4,4): 262144 signals through both oracle directions
  std::vector<double> x(6);
  std::size_t failures = 0;
  for (std::size_t code = 0; code < (1u << 18); ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = double(int(c & 7u) - 4);
      c >>= 3;
    }
    const Subbands sb = oracle_forward(x, cfg);
    if (oracle_inverse(sb.a, sb.d, cfg) != x) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("scaling multiplies the bands and round-trips") {
  CoreConfig plain;
  CoreConfig scaled;
  scaled.scaling = true;
  const std::vector<double> x = random_signal(32, 42);

  const Subbands sp = oracle_forward(x, plain);
  const Subbands ss = oracle_forward(x, scaled);
  for (std::size_t i = 0; i < sp.a.size(); ++i) {
    CHECK(ss.a[i] == doctest::Approx(sp.a[i] * plain.zeta).epsilon(1e-14));
    CHECK(ss.d[i] == doctest::Approx(sp.d[i] / plain.zeta).epsilon(1e-14));
  }
  CHECK(max_diff(oracle_inverse(ss.a, ss.d, scaled), x) <= 1e-12);
}

TEST_CASE("custom lifting constants round-trip") {
  CoreConfig cfg;
  cfg.alpha = -0.37;
  cfg.beta = 0.21;
  const std::vector<double> x = random_signal(24, 5);
  const Subbands sb = oracle_forward(x, cfg);
  CHECK(max_diff(oracle_inverse(sb.a, sb.d, cfg), x) <= 1e-12);
}

TEST_CASE("multi-level recursion and its inverse") {
  const std::vector<double> x = random_signal(64, 11);
  const CoreConfig cfg;
  const Pyramid1d p = oracle_forward_multi(x, 3, cfg);
  CHECK(p.details[0].size() == 32);
  CHECK(p.details[1].size() == 16);
  CHECK(p.details[2].size() == 8);
  CHECK(p.approx.size() == 8);
  CHECK(max_diff(oracle_inverse_multi(p, cfg), x) <= 1e-12);
}

TEST_CASE("2-D separable reference round-trips") {
  Plane img(12, 8);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  for (double& v : img.data) v = dist(rng);

  const CoreConfig cfg;
  const Pyramid2d p = oracle_forward_2d(img, 2, cfg);
  CHECK(p.approx.width == 3);
  CHECK(p.approx.height == 2);
  const Plane back = oracle_inverse_2d(p, cfg);
  CHECK(max_diff(back.data, img.data) <= 1e-12);
}

TEST_CASE("oracle rejects bad shapes") {
  const CoreConfig cfg;
  CHECK_THROWS_AS((void)oracle_forward(std::vector<double>{}, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)oracle_inverse(std::vector<double>{1, 2},
                                       std::vector<double>{}, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)oracle_inverse(std::vector<double>{1},
                                       std::vector<double>{1, 2}, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)oracle_forward_multi(std::vector<double>{1, 2}, 0, cfg),
      std::invalid_argument);
}
