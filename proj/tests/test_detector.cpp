#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rindler/detector.hpp"
#include "test_util.hpp"

using namespace rindler;
using namespace rindler::detector;

namespace {

constexpr double kPi = std::numbers::pi;

const ResponseKernel kPE{PowerExpKernel{1.0, 1.0, 1.0}};
const ResponseKernel kDO{DampedOscillatorKernel{1.0, 2.0, 0.5}};

// alpha(0+) > 0: the response switches on abruptly.
ResponseKernel ramp_kernel() {
  return TabulatedKernel{{0.0, 10.0}, {1.0, 0.0}};
}

}  // namespace

TEST_CASE("kernel values and parameter validation") {
  const ResponseKernel pe{PowerExpKernel{2.0, 1.5, 0.7}};
  CHECK(rel_err(kernel_value(pe, 1.0),
                2.0 * std::pow(1.0 / 0.7, 1.5) * std::exp(-1.0 / 0.7)) <
        1e-14);
  CHECK(kernel_value(pe, 0.0) == 0.0);
  CHECK(kernel_value(pe, -1.0) == 0.0);

  const ResponseKernel os{DampedOscillatorKernel{3.0, 2.0, 0.5}};
  CHECK(rel_err(kernel_value(os, 0.4),
                3.0 * std::exp(-0.2) * std::sin(0.8)) < 1e-14);
  CHECK(kernel_value(os, 0.0) == 0.0);

  const ResponseKernel tab{TabulatedKernel{{0.0, 1.0, 3.0}, {1.0, 0.5, 0.25}}};
  CHECK(kernel_value(tab, 0.0) == 1.0);
  CHECK(kernel_value(tab, 1.0) == 0.5);
  CHECK(rel_err(kernel_value(tab, 2.0), 0.375) < 1e-15);
  CHECK(kernel_value(tab, -0.5) == 0.0);
  CHECK_THROWS_AS((void)kernel_value(tab, 3.0001), InterpolationOutOfRange);

  CHECK_THROWS_AS(validate_kernel(PowerExpKernel{1.0, 0.0, 1.0}), ConfigError);
  CHECK_THROWS_AS(validate_kernel(PowerExpKernel{1.0, 1.0, -2.0}),
                  ConfigError);
  CHECK_THROWS_AS(validate_kernel(DampedOscillatorKernel{1.0, 0.0, 1.0}),
                  ConfigError);
  CHECK_THROWS_AS(validate_kernel(DampedOscillatorKernel{1.0, 1.0, 0.0}),
                  ConfigError);
  CHECK_THROWS_AS(validate_kernel(TabulatedKernel{{0.0}, {1.0}}), ConfigError);
  CHECK_THROWS_AS(validate_kernel(TabulatedKernel{{0.5, 1.0}, {1.0, 0.0}}),
                  ConfigError);
  CHECK_THROWS_AS(validate_kernel(TabulatedKernel{{0.0, 1.0, 1.0},
                                                  {1.0, 0.5, 0.0}}),
                  ConfigError);
  CHECK_THROWS_AS(validate_kernel(TabulatedKernel{{0.0, 1.0}, {1.0}}),
                  ConfigError);
}

TEST_CASE("frequency transforms against closed forms and quadrature") {
  // PowerExp p = 1: transform is (1 - i w)^{-2}.
  const cdouble w(1.0, -0.7);
  CHECK(rel_err(alpha_freq(kPE, 0.7), 1.0 / (w * w)) < 1e-13);
  CHECK(rel_err(alpha_freq_imag_axis(kPE, 0.3), 1.0 / (1.3 * 1.3)) < 1e-13);
  CHECK(rel_err(alpha_static(kPE), 1.0) < 1e-14);

  const cdouble g(0.5, -1.1);
  CHECK(rel_err(alpha_freq(kDO, 1.1), 2.0 / (g * g + 4.0)) < 1e-13);
  CHECK(rel_err(alpha_static(kDO), 8.0 / 17.0) < 1e-14);

  // Piecewise-linear transform is exact per segment: compare with direct
  // quadrature of the interpolant.
  const ResponseKernel tab{
      TabulatedKernel{{0.0, 0.7, 2.0, 5.0}, {0.3, 1.0, 0.4, 0.0}}};
  numerics::QuadratureConfig tight;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-13;
  for (double omega : {0.9, 4.3}) {
    const cdouble got = alpha_freq(tab, omega);
    const auto quad = numerics::integrate_finite(
        [&](double t) {
          return kernel_value(tab, t) *
                 std::exp(cdouble(0.0, omega * t));
        },
        0.0, 5.0, tight);
    CHECK(rel_err(got, quad.value) < 1e-10);
  }
  const double s = 0.8;
  const auto lap = numerics::integrate_finite(
      [&](double t) {
        return cdouble(kernel_value(tab, t) * std::exp(-s * t), 0.0);
      },
      0.0, 5.0, tight);
  CHECK(rel_err(alpha_freq_imag_axis(tab, s), lap.value.real()) < 1e-10);

  // Static value of a table is its exact trapezoid sum.
  const ResponseKernel tab2{TabulatedKernel{{0.0, 1.0, 3.0},
                                            {1.0, 0.5, 0.25}}};
  CHECK(alpha_static(tab2) == 1.5);

  // Transform overflow surfaces as a divergence, not as a quiet inf.
  CHECK_THROWS_AS((void)alpha_static(PowerExpKernel{1.0, 200.0, 1.0}),
                  DivergentStaticResponse);
}

TEST_CASE("dispersion consistency between axis value and absorptive part") {
  for (const auto& k : {kPE, kDO}) {
    for (double p : {0.5, 1.0, 2.0}) {
      const KKCheck kk = kramers_kronig_check(k, p);
      CHECK(rel_err(kk.rhs, kk.lhs) < 1e-8);
    }
  }
  CHECK_THROWS_AS((void)kramers_kronig_check(kPE, 0.0), DomainError);
}

TEST_CASE("wedge-vacuum absorbed power") {
  // (q / pi) int e^{-tau} dtau = 1 at q = pi.
  const auto r1 = qdot_rindler(kPE, {kPi, 1.0});
  CHECK(rel_err(r1.value, 1.0) < 1e-8);
  CHECK(r1.route == "rindler");
  CHECK(r1.discrepancy_factor == 1.0);

  // (q / pi) arctan(Omega / gamma) = pi / 4 at q = pi, Omega = gamma.
  const auto r2 =
      qdot_rindler(DampedOscillatorKernel{1.0, 1.0, 1.0}, {kPi, 1.0});
  CHECK(rel_err(r2.value, kPi / 4.0) < 1e-8);

  // A kernel that switches on abruptly makes alpha / tau non-integrable.
  CHECK_THROWS_AS((void)qdot_rindler(ramp_kernel(), {1.0, 1.0}),
                  NonIntegrableSingularity);
}

TEST_CASE("inertial-vacuum absorbed power, proper-time route") {
  struct Ref {
    double a, want;
  };
  const Ref refs_do[] = {{0.5, 0.422763042335},
                         {1.0, 0.425100068862},
                         {2.0, 0.436567986446}};
  for (const auto& r : refs_do) {
    const auto res = qdot_inertial_time(kDO, {1.0, r.a});
    CHECK(rel_err(res.value, r.want) < 1e-9);
    CHECK(res.route == "time");
  }
  const Ref refs_pe[] = {{0.5, 0.331000307283},
                         {1.0, 0.364443832506},
                         {2.0, 0.467088277214}};
  for (const auto& r : refs_pe) {
    CHECK(rel_err(qdot_inertial_time(kPE, {1.0, r.a}).value, r.want) < 1e-9);
  }

  // Closed form: at q = 2 pi, a = tau0 = 1, the thermal sum collapses to
  // pi^2 / 3 - 1.
  const auto res = qdot_inertial_time(kPE, {2.0 * kPi, 1.0});
  CHECK(rel_err(res.value, kPi * kPi / 3.0 - 1.0) < 1e-10);

  CHECK_THROWS_AS((void)qdot_inertial_time(kPE, {1.0, 0.0}), DomainError);
}

TEST_CASE("route agreement: series, general, decomposition, spectral fit") {
  for (const auto& k : {kPE, kDO}) {
    for (double a : {0.5, 1.0, 2.0}) {
      const CouplingParams c{1.0, a};
      const double t = qdot_inertial_time(k, c).value;

      const auto ser = qdot_inertial_series(k, c);
      CHECK(rel_err(ser.value, t) < 1e-6);
      CHECK(ser.route == "series");
      CHECK(ser.discrepancy_factor == 0.5);

      const auto gen = qdot_general(k, c);
      CHECK(rel_err(gen.value, t) < 1e-6);
      CHECK(gen.route == "general");

      CHECK(rel_err(qdot_inertial_decomposed(k, c), t) < 1e-8);

      const auto fit = qdot_inertial_spectral_fitted(k, c);
      CHECK(rel_err(fit.value, t) < 1e-8);
      CHECK(fit.route == "spectral_fitted");
      // The fit always lands on pi: folding coth's partial fractions
      // through the axis-value dispersion integral turns the spectral
      // integral at argument pi into the static piece plus the image sum,
      // which is the proper-time value. Kernel and acceleration drop out.
      CHECK(std::abs(fit.discrepancy_factor - kPi / 2.0) < 1e-6);
    }
  }
}

TEST_CASE("spectral and decomposition routes survive a tabulated kernel") {
  // Piecewise-linear kernels put slow oscillations in the transform; the
  // spectral integral only converges through the coth excess split.
  const ResponseKernel tab{TabulatedKernel{{0.0, 0.5, 1.0, 2.0, 4.0},
                                           {0.0, 0.8, 1.0, 0.3, 0.0}}};
  for (double a : {0.7, 1.3}) {
    const CouplingParams c{1.0, a};
    const double t = qdot_inertial_time(tab, c).value;
    const auto spec = qdot_inertial_spectral(tab, c, kPi);
    CHECK(rel_err(spec.value, t) < 1e-10);
    CHECK(spec.error_estimate < 1e-8 * t);
    CHECK(rel_err(qdot_inertial_decomposed(tab, c), t) < 1e-8);
    CHECK(std::abs(spectral_fit_coth_argument(tab, c) - kPi) < 1e-6);
  }
}

TEST_CASE("published spectral form disagrees at its printed argument") {
  const CouplingParams c{1.0, 1.0};
  const auto spec = qdot_inertial_spectral(kDO, c);
  CHECK(spec.route == "spectral");
  CHECK(spec.discrepancy_factor == 1.0);
  const double t = qdot_inertial_time(kDO, c).value;
  // coth(2 w / a) overweights the low-frequency band: strictly above the
  // proper-time value, and by more than quadrature noise.
  CHECK(spec.value > t * 1.001);

  // The argument that reproduces the proper-time route is exactly pi, not
  // the printed 2; the fit recovers it to root-solver accuracy.
  const double carg = spectral_fit_coth_argument(kDO, c);
  CHECK(std::abs(carg - kPi) < 1e-6);
  CHECK(rel_err(qdot_inertial_spectral(kDO, c, carg).value, t) < 1e-8);

  CHECK_THROWS_AS((void)qdot_inertial_spectral(kDO, c, 0.0), DomainError);
}

TEST_CASE("series route refuses kernels with a flat-transform remainder") {
  CHECK_THROWS_AS((void)qdot_inertial_series(ramp_kernel(), {1.0, 1.0}),
                  SeriesNotConverged);
  CHECK_THROWS_AS((void)qdot_inertial_series(kPE, {1.0, 1.0}, 0), ConfigError);
  CHECK_THROWS_AS((void)qdot_inertial_decomposed(kPE, {1.0, 1.0}, 4),
                  ConfigError);
}

TEST_CASE("vacuum friction force against its closed form") {
  // alpha_static(kDO) = 8/17: q = pi, a = 2 gives exactly -16/17.
  const CouplingParams c{kPi, 2.0};
  const double closed = force_inertial_closed(kDO, c);
  CHECK(rel_err(closed, -16.0 / 17.0) < 1e-14);
  const auto quad = force_inertial(kDO, c);
  CHECK(rel_err(quad.value, closed) < 1e-10);
  CHECK(quad.route == "time");

  const auto quad_pe = force_inertial(kPE, {1.0, 0.7});
  CHECK(rel_err(quad_pe.value, -0.7 / kPi) < 1e-10);

  // Linear in a: F / a is constant.
  const double f1 = force_inertial(kDO, {1.0, 0.25}).value / 0.25;
  for (double a : {0.5, 1.0, 2.0}) {
    CHECK(rel_err(force_inertial(kDO, {1.0, a}).value / a, f1) < 1e-8);
  }

  // No acceleration, no force: exact zero, not a small number.
  CHECK(force_inertial(kDO, {1.0, 0.0}).value == 0.0);
  CHECK(force_inertial_closed(kDO, {1.0, 0.0}) == 0.0);
}

TEST_CASE("wedge-vacuum force cancels between mover families") {
  const ResponseKernel k{DampedOscillatorKernel{1.0, 1.0, 1.0}};
  const CouplingParams c{kPi, 1.0};
  // Each family alone integrates to -+ (q a / pi) arctan(1) = -+ pi / 4;
  // that sets the cancellation scale.
  const double scale = kPi / 4.0;
  const auto res = force_rindler(k, c);
  CHECK(res.route == "rindler");
  CHECK(std::abs(res.value) < 1e-10 * scale);
  CHECK(res.error_estimate < 1e-6 * scale);
  CHECK(res.error_estimate >= 0.0);

  CHECK(force_rindler(k, {1.0, 0.0}).value == 0.0);
}

TEST_CASE("force through the correlator kernel matches the closed form") {
  const CouplingParams c{kPi, 2.0};
  const auto res = force_general(kDO, c);
  CHECK(rel_err(res.value, -16.0 / 17.0) < 1e-8);
  CHECK(res.route == "general");
  CHECK(res.discrepancy_factor == -1.0);
  CHECK(force_general(kDO, {1.0, 0.0}).value == 0.0);

  const auto pe = force_general(kPE, {1.0, 0.7});
  CHECK(rel_err(pe.value, -0.7 / kPi) < 1e-8);
}
