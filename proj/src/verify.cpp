#include "rindler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "rindler/correlators.hpp"
#include "rindler/detector.hpp"
#include "rindler/errors.hpp"
#include "rindler/modes.hpp"
#include "rindler/numerics.hpp"
#include "rindler/output.hpp"
#include "rindler/spacetime.hpp"

namespace rindler::verify {

namespace {

constexpr double kPi = std::numbers::pi;

using detector::CouplingParams;
using detector::DampedOscillatorKernel;
using detector::PowerExpKernel;
using detector::ResponseKernel;
using detector::TabulatedKernel;
using modes::BogolyubovVariant;
using modes::WavePacket;
using numerics::cdouble;
using spacetime::WorldlineParams;

const ResponseKernel kPE{PowerExpKernel{1.0, 1.0, 1.0}};
const ResponseKernel kDO{DampedOscillatorKernel{1.0, 2.0, 0.5}};

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

double rel_dev(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// ---------------------------------------------------------------------------
// |Gamma(i nu)|^2 against the reflection identity pi / (nu sinh(pi nu)),
// which the implementation deliberately does not use.
CheckResult check_gamma_identity(std::uint64_t seed) {
  CheckResult r{"gamma_identity", false, 0.0, 1e-12, ""};
  std::vector<double> nus;
  for (int j = 0; j < 50; ++j) {
    nus.push_back(1e-3 * std::pow(20.0 / 1e-3, j / 49.0));
  }
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> u(std::log(1e-3), std::log(20.0));
  for (int j = 0; j < 8; ++j) nus.push_back(std::exp(u(rng)));
  double worst = 0.0;
  for (double nu : nus) {
    const double got = numerics::gamma_abs_sq_imag(nu);
    const double want = kPi / (nu * std::sinh(kPi * nu));
    worst = std::max(worst, rel_dev(got, want));
  }
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("|Gamma(i nu)|^2 vs reflection identity, %zu points in "
                 "[1e-3, 20]: worst rel dev %.3g",
                 nus.size(), worst);
  return r;
}

// ---------------------------------------------------------------------------
// Occupation spectrum: ln(1 + 1/n) regressed against nu must have slope
// 2 pi, and the smeared-mode occupation must track the spectrum uniformly
// across carriers for a narrow packet.
CheckResult check_thermal_spectrum(std::uint64_t) {
  CheckResult r{"thermal_spectrum", false, 0.0, 1.0, ""};
  const int m = 50;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int j = 0; j < m; ++j) {
    const double nu = 0.05 + (2.0 - 0.05) * j / (m - 1);
    const double y = std::log1p(1.0 / modes::occupation_spectrum(nu));
    sx += nu;
    sy += y;
    sxx += nu * nu;
    sxy += nu * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double slope_dev = rel_dev(slope, 2.0 * kPi);

  const WorldlineParams p{1.0};
  const double cut = std::exp(505.0);  // window >> 6 / width
  std::vector<double> ratios;
  for (double carrier : {0.1, 0.5, 1.0}) {
    const WavePacket packet(carrier, 0.012);
    ratios.push_back(modes::smeared_number_expectation(
                         packet, p, cut, BogolyubovVariant::Canonical)
                         .ratio_to_mean);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double ratio_dev = *hi / *lo - 1.0;
  for (double q : ratios) ratio_dev = std::max(ratio_dev, std::abs(q - 1.0));

  r.measured = std::max(slope_dev / 1e-3, ratio_dev / 2e-2);
  r.passed = r.measured < r.threshold;
  r.detail = fmt("slope %.10g vs 2 pi (rel dev %.3g, tol 1e-3); smeared "
                 "ratio spread %.3g over carriers {0.1, 0.5, 1} at width "
                 "0.012 (tol 2e-2)",
                 slope, slope_dev, ratio_dev);
  return r;
}

// ---------------------------------------------------------------------------
// The band-integrated |beta|^2 diagnostic must grow linearly in the log of
// the frequency cutoff, with the measured slope matching the closed-form
// band integral of the decaying-normalization coefficient.
CheckResult check_nonequivalence_growth(std::uint64_t) {
  CheckResult r{"nonequivalence_growth", false, 0.0, 5e-2, ""};
  const WorldlineParams p{1.0};
  const double nu_lo = 0.05, nu_hi = 5.0;
  // Antiderivative of -(2 a^2 / pi) * occupation: the closed-form band value
  // the numeric Gauss-Legendre integral must reproduce.
  auto prim = [](double nu) {
    return -std::log1p(-std::exp(-2.0 * kPi * nu)) / (2.0 * kPi);
  };
  const double band_closed = (2.0 / kPi) * (prim(nu_lo) - prim(nu_hi));

  double v[3];
  const double cuts[3] = {10.0, 100.0, 1000.0};
  for (int j = 0; j < 3; ++j) {
    v[j] = modes::nonequivalence_diagnostic(nu_lo, nu_hi, 1.0, cuts[j], p)
               .value;
  }
  const double s12 = (v[1] - v[0]) / std::log(10.0);
  const double s23 = (v[2] - v[1]) / std::log(10.0);
  const double worst = std::max({rel_dev(s12, band_closed),
                                 rel_dev(s23, band_closed),
                                 rel_dev(s12, s23)});
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("log-cut slopes %.8g / %.8g vs closed band %.8g: worst "
                 "rel dev %.3g over cuts {10, 100, 1000}",
                 s12, s23, band_closed, worst);
  return r;
}

// ---------------------------------------------------------------------------
// Numeric packet extraction: |beta|^2 mass integrates to the smeared-mode
// occupation, and |alpha|^2 - |beta|^2 integrates to the packet norm.
CheckResult check_packet_extraction(std::uint64_t) {
  CheckResult r{"packet_extraction", false, 0.0, 1.0, ""};
  const WorldlineParams p{1.0};
  const WavePacket packet(1.0, 0.2);
  const int m = 241;
  std::vector<double> omegas(m);
  for (int j = 0; j < m; ++j) {
    omegas[j] = std::exp(-12.0 + 24.0 * j / (m - 1));
  }
  const auto rows = modes::bogolyubov_numeric(packet, p,
                                              modes::Direction::Right, omegas);
  const double dl = 24.0 / (m - 1);
  double n_beta = 0.0, norm = 0.0;
  for (int j = 0; j < m; ++j) {
    const double trap = (j == 0 || j == m - 1) ? 0.5 : 1.0;
    n_beta += trap * dl * omegas[j] * std::norm(rows[j].beta);
    norm += trap * dl * omegas[j] *
            (std::norm(rows[j].alpha) - std::norm(rows[j].beta));
  }
  const double n_ref =
      modes::smeared_number_expectation(packet, p, std::exp(40.0),
                                        BogolyubovVariant::Canonical)
          .value;
  const double num_dev = rel_dev(n_beta, n_ref);
  const double norm_dev = std::abs(norm - 1.0);
  r.measured = std::max(num_dev / 1e-2, norm_dev / 2e-2);
  r.passed = r.measured < r.threshold;
  r.detail = fmt("packet number %.8g vs smeared %.8g (rel dev %.3g, tol "
                 "1e-2); completeness sum %.8g vs 1 (dev %.3g, tol 2e-2)",
                 n_beta, n_ref, num_dev, norm, norm_dev);
  return r;
}

// ---------------------------------------------------------------------------
// Wedge-vacuum absorbed power against closed forms, plus the mandatory
// failure on a kernel whose 1/tau weight is non-integrable.
CheckResult check_wedge_response(std::uint64_t) {
  CheckResult r{"wedge_response", false, 0.0, 1e-8, ""};
  const auto r1 = detector::qdot_rindler(kPE, {kPi, 1.0});
  const auto r2 = detector::qdot_rindler(DampedOscillatorKernel{1.0, 1.0, 1.0},
                                         {kPi, 1.0});
  const double worst =
      std::max(rel_dev(r1.value, 1.0), rel_dev(r2.value, kPi / 4.0));
  bool threw = false;
  try {
    (void)detector::qdot_rindler(TabulatedKernel{{0.0, 10.0}, {1.0, 0.0}},
                                 {1.0, 1.0});
  } catch (const NonIntegrableSingularity&) {
    threw = true;
  }
  r.measured = worst;
  r.passed = worst < r.threshold && threw;
  r.detail = fmt("closed forms 1 and pi/4: worst rel dev %.3g; abrupt "
                 "kernel rejected: %s",
                 worst, threw ? "yes" : "NO");
  return r;
}

// ---------------------------------------------------------------------------
// As a -> 0 the inertial-vacuum power approaches the wedge-vacuum power
// quadratically in a.
CheckResult check_inertial_limit(std::uint64_t) {
  CheckResult r{"inertial_limit", false, 0.0, 0.1, ""};
  const double base = detector::qdot_rindler(kDO, {1.0, 1.0}).value;
  const double as[3] = {1e-1, 1e-2, 1e-3};
  double delta[3];
  for (int j = 0; j < 3; ++j) {
    delta[j] = detector::qdot_inertial_time(kDO, {1.0, as[j]}).value - base;
  }
  const double e1 = std::log(delta[0] / delta[1]) / std::log(10.0);
  const double e2 = std::log(delta[1] / delta[2]) / std::log(10.0);
  const double worst = std::max(std::abs(e1 - 2.0), std::abs(e2 - 2.0));
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("excess power exponents %.6g, %.6g vs 2 over a in "
                 "{1e-1, 1e-2, 1e-3} (deltas %.3g, %.3g, %.3g)",
                 e1, e2, delta[0], delta[1], delta[2]);
  return r;
}

// ---------------------------------------------------------------------------
// Four independent routes to the inertial-vacuum power agree pairwise.
CheckResult check_route_equivalence(std::uint64_t) {
  CheckResult r{"route_equivalence", false, 0.0, 1e-4, ""};
  double worst = 0.0;
  std::string worst_at = "-";
  for (const auto& k : {kPE, kDO}) {
    for (double a : {0.5, 1.0, 2.0}) {
      const CouplingParams c{1.0, a};
      const double vals[4] = {
          detector::qdot_inertial_time(k, c).value,
          detector::qdot_inertial_series(k, c).value,
          detector::qdot_general(k, c).value,
          detector::qdot_inertial_spectral_fitted(k, c).value,
      };
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          const double d = rel_dev(vals[i], vals[j]);
          if (d > worst) {
            worst = d;
            worst_at = fmt("%s kernel, a=%g",
                           std::holds_alternative<PowerExpKernel>(k)
                               ? "power-exp"
                               : "damped-oscillator",
                           a);
          }
        }
      }
    }
  }
  // Piecewise-linear kernel: the image-sum representation genuinely fails
  // here (its remainder integrand rings without decaying), so compare the
  // routes that stay defined.
  const ResponseKernel tab{TabulatedKernel{{0.0, 0.5, 1.0, 2.0, 4.0},
                                           {0.0, 0.8, 1.0, 0.3, 0.0}}};
  for (double a : {0.7, 1.3}) {
    const CouplingParams c{1.0, a};
    const double vals[4] = {
        detector::qdot_inertial_time(tab, c).value,
        detector::qdot_general(tab, c).value,
        detector::qdot_inertial_spectral(tab, c, kPi).value,
        detector::qdot_inertial_decomposed(tab, c),
    };
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const double d = rel_dev(vals[i], vals[j]);
        if (d > worst) {
          worst = d;
          worst_at = fmt("tabulated kernel, a=%g", a);
        }
      }
    }
  }
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("time/series/general/fitted-spectral pairwise over 2 "
                 "kernels x a in {0.5, 1, 2}, plus time/general/spectral/"
                 "decomposed on a tabulated kernel: worst rel dev %.3g (%s)",
                 worst, worst_at.c_str());
  return r;
}

// ---------------------------------------------------------------------------
// Friction force: thermal-factor quadrature against the closed form,
// linearity in a, and the exact zero at a = 0.
CheckResult check_friction_closed_form(std::uint64_t) {
  CheckResult r{"friction_closed_form", false, 0.0, 1.0, ""};
  const double quad_dev =
      std::max(rel_dev(detector::force_inertial(kDO, {kPi, 2.0}).value,
                       detector::force_inertial_closed(kDO, {kPi, 2.0})),
               rel_dev(detector::force_inertial(kPE, {1.0, 0.7}).value,
                       detector::force_inertial_closed(kPE, {1.0, 0.7})));
  const double r0 = detector::force_inertial(kDO, {1.0, 0.25}).value / 0.25;
  double lin_dev = 0.0;
  for (double a : {0.5, 1.0, 2.0}) {
    lin_dev = std::max(
        lin_dev, rel_dev(detector::force_inertial(kDO, {1.0, a}).value / a,
                         r0));
  }
  const double f0 = detector::force_inertial(kDO, {1.0, 0.0}).value;
  r.measured = std::max({quad_dev / 1e-10, lin_dev / 1e-8,
                         f0 == 0.0 ? 0.0 : 2.0});
  r.passed = r.measured < r.threshold;
  r.detail = fmt("quadrature vs closed form rel dev %.3g (tol 1e-10); F/a "
                 "spread %.3g (tol 1e-8); F(0) %s 0",
                 quad_dev, lin_dev, f0 == 0.0 ? "==" : "!=");
  return r;
}

// ---------------------------------------------------------------------------
// Wedge-vacuum force: independently integrated mover families cancel.
CheckResult check_wedge_force_cancellation(std::uint64_t) {
  CheckResult r{"wedge_force_cancellation", false, 0.0, 1e-10, ""};
  const auto res = detector::force_rindler(
      DampedOscillatorKernel{1.0, 1.0, 1.0}, {kPi, 1.0});
  const double scale = kPi / 4.0;  // each family's own magnitude
  r.measured = std::abs(res.value) / scale;
  r.passed = r.measured < r.threshold;
  r.detail = fmt("mover families each of size pi/4 cancel to %.3g of scale "
                 "(quadrature error estimate %.3g)",
                 r.measured, res.error_estimate);
  return r;
}

// ---------------------------------------------------------------------------
// Dispersion: the imaginary-axis transform equals the weighted integral of
// the absorptive part.
CheckResult check_dispersion_relation(std::uint64_t) {
  CheckResult r{"dispersion_relation", false, 0.0, 1e-6, ""};
  double worst = 0.0;
  for (const auto& k : {kPE, kDO}) {
    for (double pp : {0.5, 1.0, 2.0}) {
      const auto kk = detector::kramers_kronig_check(k, pp);
      worst = std::max(worst, rel_dev(kk.rhs, kk.lhs));
    }
  }
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("axis value vs absorptive integral, 2 kernels x p in "
                 "{0.5, 1, 2}: worst rel dev %.3g",
                 worst);
  return r;
}

// ---------------------------------------------------------------------------
// The regulated correlators on the accelerated worldline must not depend on
// where along the worldline they are evaluated.
CheckResult check_stationarity(std::uint64_t) {
  CheckResult r{"stationarity", false, 0.0, 1e-8, ""};
  const WorldlineParams p{1.0};
  const correlators::CorrelatorConfig cfg;
  double worst = 0.0;
  for (double tau : {0.1, 0.5, 2.0}) {
    const double dt0 = correlators::inertial_correlator_dt(tau, 0.0, p, cfg);
    const double dt3 = correlators::inertial_correlator_dt(tau, 3.0, p, cfg);
    worst = std::max(worst,
                     std::abs(dt0 - dt3) / std::max(1.0, std::abs(dt0)));
    const double dy0 = correlators::inertial_correlator_dy(tau, 0.0, p, cfg);
    const double dy3 = correlators::inertial_correlator_dy(tau, 3.0, p, cfg);
    worst = std::max(worst,
                     std::abs(dy0 - dy3) / std::max(1.0, std::abs(dy0)));
  }
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("both regulated kernels at t = 0 vs t = 3, tau in "
                 "{0.1, 0.5, 2}: worst residual %.3g",
                 worst);
  return r;
}

// ---------------------------------------------------------------------------
// Chart round trips, the conformal coordinate's complex-step Jacobian
// against the metric, and the worldline invariant.
CheckResult check_coordinate_charts(std::uint64_t seed) {
  CheckResult r{"coordinate_charts", false, 0.0, 1e-12, ""};
  std::mt19937_64 rng(seed + 12);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  const double as[3] = {0.5, 1.0, 2.0};
  for (int j = 0; j < 120; ++j) {
    const WorldlineParams p{as[j % 3]};
    const double a = p.a;
    const double t = (2.0 * u01(rng) - 1.0) * 2.5 / a;
    const double y = (-0.9 + 4.9 * u01(rng)) / a;

    const auto x = spacetime::inertial_from_rindler(p, {t, y});
    const auto back = spacetime::rindler_from_inertial(p, x);
    worst = std::max(worst,
                     std::abs(back.t - t) / std::max(1.0, std::abs(t)));
    worst = std::max(worst,
                     std::abs(back.y - y) / std::max(1.0, std::abs(y)));

    const double xi = spacetime::conformal_coordinate(p, y);
    const double y2 = spacetime::inverse_conformal_coordinate(p, xi);
    worst = std::max(worst,
                     std::abs(y2 - y) / std::max(1.0, std::abs(y)));

    // Complex-step derivative of xi(y) times sqrt(g00) must be exactly 1.
    const double h = 1e-200;
    const double dxi =
        spacetime::conformal_coordinate(p, cdouble(y, h)).imag() / h;
    worst = std::max(
        worst, std::abs(dxi * std::sqrt(spacetime::metric_factor(p, y)) -
                        1.0));

    const double tau = (2.0 * u01(rng) - 1.0) * 2.5 / a;
    const auto w = spacetime::worldline_point(p, tau);
    worst = std::max(worst, std::abs((w.x1 - w.x0) * (w.x1 + w.x0) * a * a -
                                     1.0));
  }
  r.measured = worst;
  r.passed = worst < r.threshold;
  r.detail = fmt("120 seeded points, |a t| <= 2.5: worst round-trip / "
                 "Jacobian / invariant deviation %.3g",
                 worst);
  return r;
}

// ---------------------------------------------------------------------------
// Recomputing and reformatting the same observable table must be
// byte-identical in both output formats.
CheckResult check_output_determinism(std::uint64_t) {
  CheckResult r{"output_determinism", false, 0.0, 0.0, ""};
  auto build = [] {
    output::Table t;
    t.config = {{"observables", "power_wedge,power_inertial,force_inertial"},
                {"kernels", "powerexp:1,1,1;dampedosc:1,2,0.5"}};
    t.columns = {"kernel_index", "a", "power_wedge", "power_inertial",
                 "force_inertial"};
    int kidx = 0;
    for (const auto& k : {kPE, kDO}) {
      for (double a : {0.5, 1.0}) {
        const CouplingParams c{1.0, a};
        t.rows.push_back(
            {{static_cast<double>(kidx), a,
              detector::qdot_rindler(k, c).value,
              detector::qdot_inertial_time(k, c).value,
              detector::force_inertial(k, c).value},
             "ok",
             {}});
      }
      ++kidx;
    }
    return t;
  };
  const auto t1 = build();
  const auto t2 = build();
  const std::string csv1 = output::to_csv(t1), csv2 = output::to_csv(t2);
  const std::string js1 = output::to_json(t1), js2 = output::to_json(t2);
  const bool same = csv1 == csv2 && js1 == js2;
  r.measured = same ? 0.0 : 1.0;
  r.passed = same;
  r.detail = fmt("two independent recomputations, %zu-byte csv and %zu-byte "
                 "json: %s",
                 csv1.size(), js1.size(), same ? "identical" : "DIFFER");
  return r;
}

using CheckFn = CheckResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"gamma_identity", check_gamma_identity},
      {"thermal_spectrum", check_thermal_spectrum},
      {"nonequivalence_growth", check_nonequivalence_growth},
      {"packet_extraction", check_packet_extraction},
      {"wedge_response", check_wedge_response},
      {"inertial_limit", check_inertial_limit},
      {"route_equivalence", check_route_equivalence},
      {"friction_closed_form", check_friction_closed_form},
      {"wedge_force_cancellation", check_wedge_force_cancellation},
      {"dispersion_relation", check_dispersion_relation},
      {"stationarity", check_stationarity},
      {"coordinate_charts", check_coordinate_charts},
      {"output_determinism", check_output_determinism},
  };
  return reg;
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

CheckResult run_check(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(seed);
  }
  throw ConfigError("unknown check: " + name);
}

VerificationReport run_checks(const std::string& filter, std::uint64_t seed) {
  VerificationReport report;
  for (const auto& [name, fn] : registry()) {
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;
    try {
      report.checks.push_back(fn(seed));
    } catch (const Error& e) {
      CheckResult r{name, false, std::numeric_limits<double>::quiet_NaN(),
                    0.0, std::string("check aborted: ") + e.what()};
      report.checks.push_back(std::move(r));
    }
  }
  return report;
}

std::vector<DiscrepancyEntry> discrepancy_report() {
  std::vector<DiscrepancyEntry> out;
  const WorldlineParams p1{1.0};

  {
    const auto printed = modes::bogolyubov_pair(
        1.0, 1.0, p1, BogolyubovVariant::PublishedGrowing);
    const auto decaying = modes::bogolyubov_pair(
        1.0, 1.0, p1, BogolyubovVariant::PublishedDecaying);
    DiscrepancyEntry e;
    e.name = "beta_exponent_sign";
    e.published = "mixing coefficient beta carries e^{+pi nu/2} and alpha "
                  "carries e^{-pi nu/2}";
    e.implemented = "the thermally consistent assignment swaps the two "
                    "exponentials (beta decaying in nu)";
    e.measured_factor = std::abs(printed.beta / decaying.beta);
    e.note = fmt("measured |beta_printed / beta_decaying| = %.10g = e^{pi "
                 "nu} at nu = 1; detailed balance |beta/alpha| = e^{-pi nu} "
                 "holds only for the decaying assignment",
                 e.measured_factor);
    out.push_back(std::move(e));
  }

  {
    const WavePacket packet(1.0, 0.2);
    const double cut = std::exp(40.0);
    const double pd = modes::smeared_number_expectation(
                          packet, p1, cut, BogolyubovVariant::PublishedDecaying)
                          .value;
    const double can = modes::smeared_number_expectation(
                           packet, p1, cut, BogolyubovVariant::Canonical)
                           .value;
    DiscrepancyEntry e;
    e.name = "occupation_prefactor";
    e.published = "smeared-mode occupation equals the thermal spectrum "
                  "1/(e^{2 pi nu} - 1) at the published mode normalization";
    e.implemented = "published normalization yields 4 a^2 times the thermal "
                    "spectrum; the delta-orthonormal normalization yields "
                    "it exactly";
    e.measured_factor = pd / can;
    e.note = fmt("measured ratio %.10g at a = 1 (the a^2 scaling is "
                 "unit-tested at a = 2: ratio 16)",
                 e.measured_factor);
    out.push_back(std::move(e));
  }

  {
    // Amplitude of the truncation-order remainder: published q / 2 pi^2,
    // measured q / 4 pi^2. Recover the factor from the step the series
    // value would take if its remainder amplitude were doubled.
    const CouplingParams c{1.0, 1.0};
    const double t = detector::qdot_inertial_time(kDO, c).value;
    const double s = detector::qdot_inertial_series(kDO, c).value;
    const double stat_piece =
        (c.q * c.a / (4.0 * kPi)) * detector::alpha_static(kDO);
    const double published = stat_piece + 2.0 * (s - stat_piece);
    DiscrepancyEntry e;
    e.name = "series_prefactor";
    e.published = "frequency-domain series remainder enters with amplitude "
                  "q / 2 pi^2";
    e.implemented = "amplitude q / 4 pi^2 (half the published value) "
                    "matches the proper-time quadrature";
    e.measured_factor = (t - stat_piece) / (published - stat_piece);
    e.note = fmt("remainder ratio (proper-time route vs published "
                 "amplitude) = %.10g; at the published amplitude the route "
                 "misses the proper-time value by %.3g relative",
                 e.measured_factor, rel_dev(published, t));
    out.push_back(std::move(e));
  }

  {
    DiscrepancyEntry e;
    e.name = "spectral_coth_argument";
    e.published = "absorbed power equals (q / pi) int Im alpha(omega) "
                  "coth(2 omega / a) d omega";
    e.implemented = "the argument factor is exactly pi: expanding coth in "
                    "partial fractions and closing each term with the "
                    "axis-value dispersion integral reproduces the "
                    "proper-time route identically, for every kernel and "
                    "acceleration";
    std::string fits;
    for (double a : {0.5, 1.0, 2.0}) {
      const double c = detector::spectral_fit_coth_argument(kDO, {1.0, a});
      if (a == 1.0) e.measured_factor = c;
      fits += fmt("%s%g -> %.8g", fits.empty() ? "" : ", ", a, c);
    }
    const double dec = detector::qdot_inertial_decomposed(kDO, {1.0, 1.0});
    const double t = detector::qdot_inertial_time(kDO, {1.0, 1.0}).value;
    e.note = fmt("fitted argument factors for the damped-oscillator kernel, "
                 "a -> c*: {%s} (published 2; every fit lands on pi); the "
                 "static-plus-image decomposition cross-checks the identity "
                 "to %.2g",
                 fits.c_str(), rel_dev(dec, t));
    out.push_back(std::move(e));
  }

  {
    DiscrepancyEntry e;
    e.name = "occupation_reference_value";
    e.published = "occupation at unit wedge frequency quoted as 1.8674e-3";
    e.implemented = "1/(e^{2 pi} - 1) = 1.87094e-3; the computed value is "
                    "used";
    e.measured_factor =
        modes::occupation_spectrum(1.0) / 1.8674e-3;
    e.note = fmt("computed occupation %.10g differs from the quoted value "
                 "by %.2g relative: transcription-level difference, "
                 "computed value is authoritative",
                 modes::occupation_spectrum(1.0),
                 rel_dev(modes::occupation_spectrum(1.0), 1.8674e-3));
    out.push_back(std::move(e));
  }

  {
    DiscrepancyEntry e;
    e.name = "wedge_coordinate_radicand";
    e.published = "distance coordinate printed as sqrt((x^0)^2 - (x^1)^2) "
                  "inside the right wedge";
    e.implemented = "sqrt((x^1)^2 - (x^0)^2): the wedge has (x^1)^2 > "
                    "(x^0)^2, so the printed radicand is negative there";
    e.measured_factor = -1.0;
    e.note = "sign under the radical; the chart contract and all round-trip "
             "checks fix the implemented order";
    out.push_back(std::move(e));
  }

  {
    DiscrepancyEntry e;
    e.name = "mixed_kernel_sign";
    e.published = "wedge-interior derivation fixes the sign of the mixed "
                  "derivative correlator";
    e.implemented = "the pinned mode-family order flips that sign; the "
                    "force route compensates and lands on the closed form";
    e.measured_factor = -1.0;
    e.note = fmt("force through the mixed kernel vs closed form: rel dev "
                 "%.2g at q = pi, a = 2",
                 rel_dev(detector::force_general(kDO, {kPi, 2.0}).value,
                         detector::force_inertial_closed(kDO, {kPi, 2.0})));
    out.push_back(std::move(e));
  }

  {
    DiscrepancyEntry e;
    e.name = "wedge_mode_wave_equation";
    e.published = "wedge modes written as (1 + a y)^{i nu} e^{-i nu t} for "
                  "general a";
    e.implemented = "as printed they solve the wedge wave equation only at "
                    "a = 1; numeric extraction is pinned there and the "
                    "closed-form coefficients carry the general-a scaling";
    e.measured_factor = 1.0;
    e.note = "finite-difference wave-operator residual vanishes at a = 1 "
             "and is order-one at a = 2 (unit-tested)";
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace rindler::verify
