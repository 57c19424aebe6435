// Command-line front end for the spinscatter shared library.
//
// Subcommands:
//   algebra-check  seeded invariant suite, one max-deviation line per identity
//   amplitude      single matrix element as key=value lines
//   sweep          angular sweep to CSV
//   xsec           Aharonov-Bohm cross-section table to CSV
//
// Exit codes: 0 success, 1 runtime/domain error, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinscatter.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr double kThetaFloor = 1e-6;

struct V3 {
  double v[3] = {0.0, 0.0, 0.0};
};

V3 cross3(const V3& a, const V3& b) {
  return {{a.v[1] * b.v[2] - a.v[2] * b.v[1],
           a.v[2] * b.v[0] - a.v[0] * b.v[2],
           a.v[0] * b.v[1] - a.v[1] * b.v[0]}};
}

double norm3(const V3& a) {
  return std::sqrt(a.v[0] * a.v[0] + a.v[1] * a.v[1] + a.v[2] * a.v[2]);
}

V3 scaled(const V3& a, double s) {
  return {{s * a.v[0], s * a.v[1], s * a.v[2]}};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", x);
  return buf;
}

[[noreturn]] void die_runtime(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(kExitRuntime);
}

[[noreturn]] void die_status(ssc_status status) {
  std::fprintf(stderr, "error: %s: %s\n", ssc_status_name(status),
               ssc_last_error_message());
  std::exit(kExitRuntime);
}

void check(ssc_status status) {
  if (status != SSC_OK) die_status(status);
}

struct PotentialOptions {
  std::string kind = "ab";
  double flux = 1.0;
  std::vector<double> mu{0.0, 0.0, 1.0};
  std::vector<double> ahat{1.0, 0.0, 0.0};
  double charge = 1.0;
};

void add_potential_options(CLI::App* cmd, PotentialOptions* opt) {
  cmd->add_option("--potential", opt->kind, "Potential kind")
      ->check(CLI::IsMember({"ab", "dipole", "fixed"}))
      ->capture_default_str();
  cmd->add_option("--flux", opt->flux, "Flux through the line (ab)")
      ->capture_default_str();
  cmd->add_option("--mu", opt->mu, "Dipole moment X,Y,Z")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--ahat", opt->ahat,
                  "Fixed potential direction X,Y,Z (normalized)")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--charge", opt->charge, "Coupling charge e")
      ->capture_default_str();
}

ssc_potential* make_potential(const PotentialOptions& opt) {
  ssc_potential* pot = nullptr;
  if (opt.kind == "ab") {
    check(ssc_potential_create_ab(opt.flux, opt.charge, &pot));
  } else if (opt.kind == "dipole") {
    const double mu[3] = {opt.mu[0], opt.mu[1], opt.mu[2]};
    check(ssc_potential_create_dipole(mu, opt.charge, &pot));
  } else {
    V3 a{{opt.ahat[0], opt.ahat[1], opt.ahat[2]}};
    const double n = norm3(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
      std::fprintf(stderr, "error: --ahat must be a nonzero finite vector\n");
      std::exit(kExitUsage);
    }
    a = scaled(a, 1.0 / n);
    check(ssc_potential_create_fixed(a.v, opt.charge, &pot));
  }
  return pot;
}

struct KinematicOptions {
  double p = 1.0;
  double mass = 1.0;
  std::vector<double> incident{1.0, 0.0, 0.0};
};

void add_kinematic_options(CLI::App* cmd, KinematicOptions* opt) {
  cmd->add_option("--p", opt->p, "Momentum magnitude")->capture_default_str();
  cmd->add_option("--mass", opt->mass, "Particle mass")->capture_default_str();
  cmd->add_option("--incident", opt->incident,
                  "Incident direction X,Y,Z (default +x; scattering stays in "
                  "the plane spanned with its transverse partner)")
      ->delimiter(',')
      ->expected(3);
}

struct Beam {
  V3 in_dir;   // unit incident direction
  V3 in_perp;  // unit transverse direction defining the scattering plane
};

Beam make_beam(const KinematicOptions& opt) {
  if (!(opt.p > 0.0) || !std::isfinite(opt.p) || !std::isfinite(opt.mass)) {
    std::fprintf(stderr, "error: --p must be positive and finite\n");
    std::exit(kExitUsage);
  }
  V3 n{{opt.incident[0], opt.incident[1], opt.incident[2]}};
  const double nn = norm3(n);
  if (!(nn > 0.0) || !std::isfinite(nn)) {
    std::fprintf(stderr, "error: --incident must be a nonzero finite vector\n");
    std::exit(kExitUsage);
  }
  n = scaled(n, 1.0 / nn);
  V3 perp = cross3(V3{{0.0, 0.0, 1.0}}, n);
  if (norm3(perp) < 1e-12) perp = cross3(V3{{1.0, 0.0, 0.0}}, n);
  perp = scaled(perp, 1.0 / norm3(perp));
  return {n, perp};
}

ssc_frame* make_frame(const Beam& beam, double p, double mass, double theta) {
  V3 p_in = scaled(beam.in_dir, p);
  V3 p_out;
  for (int i = 0; i < 3; ++i) {
    p_out.v[i] = p * (std::cos(theta) * beam.in_dir.v[i] +
                      std::sin(theta) * beam.in_perp.v[i]);
  }
  ssc_frame* frame = nullptr;
  check(ssc_frame_create(p_in.v, p_out.v, mass, &frame));
  return frame;
}

int parse_helicity(const std::string& token, const char* flag) {
  if (token == "+") return +1;
  if (token == "-") return -1;
  std::fprintf(stderr, "error: %s must be '+' or '-'\n", flag);
  std::exit(kExitUsage);
}

/// CSV writer with all-or-nothing semantics: rows accumulate in memory and
/// land on disk via a temp file renamed into place.
class CsvWriter {
 public:
  explicit CsvWriter(std::string path) : path_(std::move(path)) {}

  void add_row(const std::string& row) { body_ += row + "\n"; }

  void commit() {
    const std::string tmp = path_ + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) die_runtime("cannot open output path: " + tmp);
    const bool ok =
        std::fwrite(body_.data(), 1, body_.size(), f) == body_.size();
    if (std::fclose(f) != 0 || !ok) {
      std::remove(tmp.c_str());
      die_runtime("failed writing output: " + tmp);
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
      std::remove(tmp.c_str());
      die_runtime("cannot rename output into place: " + path_);
    }
  }

 private:
  std::string path_;
  std::string body_;
};

std::vector<double> theta_grid(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  return grid;
}

void validate_theta_range(double lo, double hi, int steps) {
  const bool ok = steps >= 2 && lo < hi && lo > kThetaFloor &&
                  hi < M_PI - kThetaFloor && std::isfinite(lo) &&
                  std::isfinite(hi);
  if (!ok) {
    std::fprintf(stderr,
                 "error: need --theta-min < --theta-max within (%g, pi - %g) "
                 "and --steps >= 2\n",
                 kThetaFloor, kThetaFloor);
    std::exit(kExitUsage);
  }
}

int run_algebra_check(std::uint64_t seed, int trials) {
  if (trials < 1) {
    std::fprintf(stderr, "error: --trials must be at least 1\n");
    return kExitUsage;
  }
  const int count = ssc_invariant_count();
  std::vector<double> devs(static_cast<std::size_t>(count), 0.0);
  check(ssc_invariant_check(seed, trials, devs.data(), count));

  const double threshold = 1e-10;
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  std::printf("trials %d\n", trials);
  std::printf("threshold %s\n", fmt(threshold).c_str());
  bool pass = true;
  for (int i = 0; i < count; ++i) {
    const double d = devs[static_cast<std::size_t>(i)];
    std::printf("%s %s\n", ssc_invariant_name(i), fmt(d).c_str());
    pass = pass && d < threshold;
  }
  std::printf("result %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : kExitRuntime;
}

int run_amplitude(const PotentialOptions& pot_opt,
                  const KinematicOptions& kin_opt, double theta,
                  const std::string& hin, const std::string& hout) {
  const int h_in = parse_helicity(hin, "--hin");
  const int h_out = parse_helicity(hout, "--hout");
  const Beam beam = make_beam(kin_opt);
  ssc_frame* frame = make_frame(beam, kin_opt.p, kin_opt.mass, theta);
  ssc_potential* pot = make_potential(pot_opt);

  ssc_amplitude m{};
  check(ssc_amplitude_oracle(frame, pot, h_in, h_out, &m));
  double delta;
  if (h_in == h_out) {
    ssc_amplitude r{};
    check(ssc_amplitude_reduced(frame, pot, h_in, &r));
    delta = std::hypot(m.value_re - r.value_re, m.value_im - r.value_im);
  } else {
    // The flip channel's closed form is identically zero.
    delta = std::hypot(m.value_re, m.value_im);
  }

  std::printf("theta=%s\n", fmt(theta).c_str());
  std::printf("h_in=%s\n", h_in > 0 ? "+" : "-");
  std::printf("h_out=%s\n", h_out > 0 ? "+" : "-");
  std::printf("A=%s\n", fmt(m.proj_l_re).c_str());
  std::printf("B=%s\n", fmt(m.proj_k_re).c_str());
  std::printf("C=%s\n", fmt(m.proj_q_re).c_str());
  std::printf("re_M=%s\n", fmt(m.value_re).c_str());
  std::printf("im_M=%s\n", fmt(m.value_im).c_str());
  std::printf("abs2_M=%s\n",
              fmt(m.value_re * m.value_re + m.value_im * m.value_im).c_str());
  std::printf("method=oracle\n");
  std::printf("agreement_delta=%s\n", fmt(delta).c_str());

  ssc_potential_destroy(pot);
  ssc_frame_destroy(frame);
  return 0;
}

int run_sweep(const PotentialOptions& pot_opt, const KinematicOptions& kin_opt,
              double theta_min, double theta_max, int steps,
              const std::string& hin, const std::string& hout,
              const std::string& out_path) {
  const int h_in = parse_helicity(hin, "--hin");
  const int h_out = parse_helicity(hout, "--hout");
  validate_theta_range(theta_min, theta_max, steps);
  const Beam beam = make_beam(kin_opt);
  ssc_potential* pot = make_potential(pot_opt);

  CsvWriter csv(out_path);
  csv.add_row("theta,A,B,C,re_M,im_M,abs2_M,abs2_M_avg,dsigma_dtheta");
  for (const double theta : theta_grid(theta_min, theta_max, steps)) {
    const V3 p_in = scaled(beam.in_dir, kin_opt.p);
    V3 p_out;
    for (int i = 0; i < 3; ++i) {
      p_out.v[i] = kin_opt.p * (std::cos(theta) * beam.in_dir.v[i] +
                                std::sin(theta) * beam.in_perp.v[i]);
    }
    ssc_frame* frame = nullptr;
    ssc_status st = ssc_frame_create(p_in.v, p_out.v, kin_opt.mass, &frame);
    if (st == SSC_ERROR_DEGENERATE_GEOMETRY) {
      std::fprintf(stderr, "warning: skipping degenerate theta=%s: %s\n",
                   fmt(theta).c_str(), ssc_last_error_message());
      continue;
    }
    check(st);

    ssc_amplitude m{};
    check(ssc_amplitude_oracle(frame, pot, h_in, h_out, &m));
    double avg = 0.0;
    check(ssc_spin_averaged_m2(frame, pot, &avg));

    std::string dsigma;
    if (pot_opt.kind == "ab") {
      ssc_cross_section xs{};
      check(ssc_ab_cross_section(frame, pot_opt.flux, pot_opt.charge, &xs));
      dsigma = fmt(xs.dsigma_dtheta);
    }
    csv.add_row(fmt(theta) + "," + fmt(m.proj_l_re) + "," + fmt(m.proj_k_re) +
                "," + fmt(m.proj_q_re) + "," + fmt(m.value_re) + "," +
                fmt(m.value_im) + "," +
                fmt(m.value_re * m.value_re + m.value_im * m.value_im) + "," +
                fmt(avg) + "," + dsigma);
    ssc_frame_destroy(frame);
  }
  csv.commit();
  ssc_potential_destroy(pot);
  return 0;
}

int run_xsec(double flux, double charge, const KinematicOptions& kin_opt,
             double theta_min, double theta_max, int steps,
             const std::string& out_path) {
  validate_theta_range(theta_min, theta_max, steps);
  const Beam beam = make_beam(kin_opt);

  CsvWriter csv(out_path);
  csv.add_row("theta,abs2_M_avg,dsigma_dtheta,dsigma_dtheta_reference");
  for (const double theta : theta_grid(theta_min, theta_max, steps)) {
    ssc_frame* frame = make_frame(beam, kin_opt.p, kin_opt.mass, theta);
    ssc_cross_section xs{};
    check(ssc_ab_cross_section(frame, flux, charge, &xs));
    csv.add_row(fmt(theta) + "," + fmt(xs.spin_averaged_m2) + "," +
                fmt(xs.dsigma_dtheta) + "," +
                fmt(xs.dsigma_dtheta_reference));
    ssc_frame_destroy(frame);
  }
  csv.commit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order Dirac scattering amplitudes in static magnetic "
               "fields (spinscatter)"};
  app.require_subcommand(1);

  // algebra-check
  std::uint64_t seed = 20240901;
  int trials = 1000;
  CLI::App* check_cmd = app.add_subcommand(
      "algebra-check", "Run the seeded invariant suite and report per-"
                       "identity max deviations");
  check_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  check_cmd->add_option("--trials", trials, "Number of random geometries")
      ->capture_default_str();

  // amplitude
  PotentialOptions amp_pot;
  KinematicOptions amp_kin;
  double amp_theta = 1.0;
  std::string amp_hin = "+";
  std::string amp_hout = "+";
  CLI::App* amp_cmd = app.add_subcommand(
      "amplitude", "Evaluate one spin matrix element (key=value output)");
  add_potential_options(amp_cmd, &amp_pot);
  add_kinematic_options(amp_cmd, &amp_kin);
  amp_cmd->add_option("--theta", amp_theta, "Scattering angle (radians)")
      ->required();
  amp_cmd->add_option("--hin", amp_hin, "Incident helicity (+ or -)")
      ->capture_default_str();
  amp_cmd->add_option("--hout", amp_hout, "Outgoing helicity (+ or -)")
      ->capture_default_str();

  // sweep
  PotentialOptions sweep_pot;
  KinematicOptions sweep_kin;
  double sweep_lo = 0.1, sweep_hi = 3.0;
  int sweep_steps = 100;
  std::uint64_t sweep_seed = 0;
  std::string sweep_hin = "+", sweep_hout = "+", sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Angular sweep written as CSV");
  sweep_cmd->add_option("--seed", sweep_seed,
                        "Accepted for config uniformity; the sweep itself is "
                        "deterministic");
  add_potential_options(sweep_cmd, &sweep_pot);
  add_kinematic_options(sweep_cmd, &sweep_kin);
  sweep_cmd->add_option("--theta-min", sweep_lo, "Grid start (radians)")
      ->required();
  sweep_cmd->add_option("--theta-max", sweep_hi, "Grid end (radians)")
      ->required();
  sweep_cmd->add_option("--steps", sweep_steps, "Number of grid points (>= 2)")
      ->capture_default_str();
  sweep_cmd->add_option("--hin", sweep_hin, "Incident helicity (+ or -)")
      ->capture_default_str();
  sweep_cmd->add_option("--hout", sweep_hout, "Outgoing helicity (+ or -)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

  // xsec
  KinematicOptions xsec_kin;
  double xsec_flux = 1.0, xsec_charge = 1.0;
  double xsec_lo = 0.1, xsec_hi = 3.0;
  int xsec_steps = 100;
  std::string xsec_out;
  CLI::App* xsec_cmd = app.add_subcommand(
      "xsec", "Aharonov-Bohm cross-section table written as CSV");
  add_kinematic_options(xsec_cmd, &xsec_kin);
  xsec_cmd->add_option("--flux", xsec_flux, "Flux through the line")
      ->capture_default_str();
  xsec_cmd->add_option("--charge", xsec_charge, "Coupling charge e")
      ->capture_default_str();
  xsec_cmd->add_option("--theta-min", xsec_lo, "Grid start (radians)")
      ->required();
  xsec_cmd->add_option("--theta-max", xsec_hi, "Grid end (radians)")
      ->required();
  xsec_cmd->add_option("--steps", xsec_steps, "Number of grid points (>= 2)")
      ->capture_default_str();
  xsec_cmd->add_option("--out", xsec_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  if (check_cmd->parsed()) return run_algebra_check(seed, trials);
  if (amp_cmd->parsed())
    return run_amplitude(amp_pot, amp_kin, amp_theta, amp_hin, amp_hout);
  if (sweep_cmd->parsed())
    return run_sweep(sweep_pot, sweep_kin, sweep_lo, sweep_hi, sweep_steps,
                     sweep_hin, sweep_hout, sweep_out);
  if (xsec_cmd->parsed())
    return run_xsec(xsec_flux, xsec_charge, xsec_kin, xsec_lo, xsec_hi,
                    xsec_steps, xsec_out);
  return kExitUsage;
}
