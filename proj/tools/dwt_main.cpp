#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "dwt/bench.hpp"
#include "dwt/core1d.hpp"
#include "dwt/core2d.hpp"
#include "dwt/io.hpp"
#include "dwt/multiscale.hpp"
#include "dwt/oracle.hpp"
#include "dwt/types.hpp"

// Exit codes: 0 success, 1 verification/benchmark disagreement, 2 usage or
// shape errors, 3 I/O errors.

namespace {

struct JobSpec {
  bool forward = true;
  bool two_d = false;
  std::size_t levels = 1;
  dwt::CoreConfig config;
  bool verify = false;
  std::size_t bench_repeats = 0;
  std::string input, output;

  // true when the user typed the flag (needed to spot conflicts with the
  // settings recorded in a pyramid container)
  bool levels_set = false, mode_set = false, boundary_set = false,
       scaling_set = false;
};

double verify_tolerance(const dwt::CoreConfig& config) {
  return config.mode == dwt::ArithmeticMode::ReversibleInteger ? 0.0 : 1e-9;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double pyramid_diff(const dwt::Pyramid1d& a, const dwt::Pyramid1d& b) {
  double m = max_abs_diff(a.approx, b.approx);
  for (std::size_t j = 0; j < a.depth(); ++j)
    m = std::max(m, max_abs_diff(a.details[j], b.details[j]));
  return m;
}

double pyramid_diff(const dwt::Pyramid2d& a, const dwt::Pyramid2d& b) {
  double m = max_abs_diff(a.approx.data, b.approx.data);
  for (std::size_t j = 0; j < a.depth(); ++j) {
    m = std::max(m, max_abs_diff(a.levels[j].h.data, b.levels[j].h.data));
    m = std::max(m, max_abs_diff(a.levels[j].v.data, b.levels[j].v.data));
    m = std::max(m, max_abs_diff(a.levels[j].d.data, b.levels[j].d.data));
  }
  return m;
}

int report_verify(double diff, const dwt::CoreConfig& config) {
  const double tol = verify_tolerance(config);
  const bool ok = diff <= tol;
  std::printf("verify: max_abs_diff = %.3g (tolerance %g): %s\n", diff, tol,
              ok ? "OK" : "FAIL");
  return ok ? 0 : 1;
}

int report_bench(const dwt::BenchResult& r, const dwt::CoreConfig& config) {
  const double tol =
      config.mode == dwt::ArithmeticMode::ReversibleInteger ? 0.0 : 1e-12;
  std::printf("bench: samples=%zu repeats=%zu\n", r.samples, r.repeats);
  std::printf("  streaming: %.6f s  (%.1f Msamples/s)\n", r.streaming_seconds,
              r.streaming_rate() / 1e6);
  std::printf("  two-pass:  %.6f s  (%.1f Msamples/s)\n", r.twopass_seconds,
              r.twopass_rate() / 1e6);
  std::printf("  strategies agree to %.3g: %s\n", r.max_abs_diff,
              r.max_abs_diff <= tol ? "OK" : "FAIL");
  return r.max_abs_diff <= tol ? 0 : 1;
}

int run_forward_1d(const JobSpec& job) {
  const std::vector<double> x = dwt::io::read_csv(job.input, job.config.mode);
  if (x.empty()) throw std::invalid_argument("input signal is empty");
  if (x.size() % 2 != 0)
    throw std::invalid_argument("signal length must be even");

  // Signals shorter than the streaming minimum go through the reference path.
  const bool tiny = x.size() < 4;
  if (tiny && (x.size() >> job.levels) < 1)
    throw std::invalid_argument("too many levels for this signal");
  dwt::Pyramid1d p = tiny
                         ? dwt::oracle_forward_multi(x, job.levels, job.config)
                         : dwt::cascade_forward(x, job.levels, job.config);

  int rc = 0;
  if (job.bench_repeats > 0) {
    rc = report_bench(dwt::run_bench_1d(x, job.config, job.bench_repeats),
                      job.config);
    if (rc != 0) return rc;
  }
  if (job.verify) {
    rc = report_verify(
        pyramid_diff(p, dwt::oracle_forward_multi(x, job.levels, job.config)),
        job.config);
    if (rc != 0) return rc;
  }

  dwt::io::PyramidFile f;
  f.dims = 1;
  f.mode = job.config.mode;
  f.boundary = job.config.boundary;
  f.scaling = job.config.scaling;
  f.p1 = std::move(p);
  dwt::io::write_pyramid(job.output, f);
  return 0;
}

int run_forward_2d(const JobSpec& job) {
  const dwt::io::PgmImage img = dwt::io::read_pgm(job.input);
  dwt::Pyramid2d p = dwt::forward_2d(img.plane, job.levels, job.config);

  int rc = 0;
  if (job.bench_repeats > 0) {
    rc = report_bench(
        dwt::run_bench_2d(img.plane, job.config, job.bench_repeats),
        job.config);
    if (rc != 0) return rc;
  }
  if (job.verify) {
    rc = report_verify(
        pyramid_diff(p, dwt::oracle_forward_2d(img.plane, job.levels,
                                               job.config)),
        job.config);
    if (rc != 0) return rc;
  }

  dwt::io::PyramidFile f;
  f.dims = 2;
  f.mode = job.config.mode;
  f.boundary = job.config.boundary;
  f.scaling = job.config.scaling;
  f.maxval = img.maxval;
  f.p2 = std::move(p);
  dwt::io::write_pyramid(job.output, f);
  return 0;
}

// Settings recorded in the container are authoritative on the inverse side;
// explicitly typed flags must agree with them.
dwt::CoreConfig container_config(const JobSpec& job,
                                 const dwt::io::PyramidFile& f,
                                 std::size_t depth) {
  if (job.mode_set && job.config.mode != f.mode)
    throw std::invalid_argument("--mode conflicts with the container");
  if (job.boundary_set && job.config.boundary != f.boundary)
    throw std::invalid_argument("--boundary conflicts with the container");
  if (job.scaling_set && job.config.scaling != f.scaling)
    throw std::invalid_argument("--scale conflicts with the container");
  if (job.levels_set && job.levels != depth)
    throw std::invalid_argument("--levels conflicts with the container");

  dwt::CoreConfig config = job.config;
  config.mode = f.mode;
  config.boundary = f.boundary;
  config.scaling = f.scaling;
  return config;
}

int run_inverse_1d(const JobSpec& job) {
  const dwt::io::PyramidFile f = dwt::io::read_pyramid(job.input);
  if (f.dims != 1)
    throw std::invalid_argument("container holds a 2-D pyramid; use --2d");
  const dwt::CoreConfig config = container_config(job, f, f.p1.depth());

  const bool tiny = f.signal_length() < 4;
  const std::vector<double> x = tiny
                                    ? dwt::oracle_inverse_multi(f.p1, config)
                                    : dwt::cascade_inverse(f.p1, config);
  if (job.verify) {
    const int rc = report_verify(
        max_abs_diff(x, dwt::oracle_inverse_multi(f.p1, config)), config);
    if (rc != 0) return rc;
  }
  dwt::io::write_csv(job.output, x);
  return 0;
}

int run_inverse_2d(const JobSpec& job) {
  const dwt::io::PyramidFile f = dwt::io::read_pyramid(job.input);
  if (f.dims != 2)
    throw std::invalid_argument("container holds a 1-D pyramid; drop --2d");
  const dwt::CoreConfig config = container_config(job, f, f.p2.depth());

  const dwt::Plane img = dwt::inverse_2d(f.p2, config);
  if (job.verify) {
    const dwt::Plane ref = dwt::oracle_inverse_2d(f.p2, config);
    const int rc = report_verify(max_abs_diff(img.data, ref.data), config);
    if (rc != 0) return rc;
  }
  dwt::io::write_pgm(job.output, img, f.maxval > 0 ? f.maxval : 255);
  return 0;
}

int run(const JobSpec& job) {
  job.config.validate();
  if (job.config.scaling &&
      job.config.mode == dwt::ArithmeticMode::ReversibleInteger)
    throw std::invalid_argument("--scale is meaningless in integer mode");
  if (job.bench_repeats > 0 && !job.forward)
    throw std::invalid_argument("--bench only applies to fwd");

  if (job.forward) return job.two_d ? run_forward_2d(job) : run_forward_1d(job);
  return job.two_d ? run_inverse_2d(job) : run_inverse_1d(job);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming 5/3 lifting wavelet transform"};
  app.require_subcommand(1);

  JobSpec job;
  std::string mode = "real", boundary = "sym";

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--2d", job.two_d, "work on a PGM image instead of a CSV signal");
    sub->add_option("--levels", job.levels, "decomposition depth (default 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{60}));
    sub->add_option("--mode", mode, "arithmetic: real or int (reversible)")
        ->check(CLI::IsMember({"real", "int"}));
    sub->add_option("--boundary", boundary, "edge handling: sym or zero")
        ->check(CLI::IsMember({"sym", "zero"}));
    sub->add_flag("--scale", job.config.scaling,
                  "apply the subband gain (real mode only)");
    sub->add_flag("--verify", job.verify,
                  "cross-check against the reference transform");
    sub->add_option("--bench", job.bench_repeats,
                    "time streaming vs two-pass with N repeats")
        ->check(CLI::PositiveNumber);
    sub->add_option("input", job.input, "input file")->required();
    sub->add_option("output", job.output, "output file")->required();
  };

  CLI::App* fwd = app.add_subcommand("fwd", "signal/image -> subband pyramid");
  CLI::App* inv = app.add_subcommand("inv", "subband pyramid -> signal/image");
  add_common(fwd);
  add_common(inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = fwd->parsed() ? fwd : inv;
  job.forward = sub == fwd;
  job.levels_set = sub->count("--levels") > 0;
  job.mode_set = sub->count("--mode") > 0;
  job.boundary_set = sub->count("--boundary") > 0;
  job.scaling_set = sub->count("--scale") > 0;
  job.config.mode = mode == "int" ? dwt::ArithmeticMode::ReversibleInteger
                                  : dwt::ArithmeticMode::Real;
  job.config.boundary = boundary == "zero" ? dwt::BoundaryPolicy::ZeroPadding
                                           : dwt::BoundaryPolicy::Symmetric;

  try {
    return run(job);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
