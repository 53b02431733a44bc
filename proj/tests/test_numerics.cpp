#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "rindler/numerics.hpp"
#include "test_util.hpp"

using namespace rindler;
using namespace rindler::numerics;
using std::numbers::pi;

namespace {
const cdouble I1(0.0, 1.0);

double coth_pi(double y) {
  const double x = 2.0 * pi * y;
  if (x > 700.0) return 1.0;
  return 1.0 + 2.0 / std::expm1(x);
}
}  // namespace

TEST_CASE("semi-infinite rule reproduces exponential moments") {
  QuadResult r = integrate_semi_infinite([](double t) { return cdouble(std::exp(-t)); });
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - 1.0) < 1e-12);
  CHECK(std::abs(r.value.imag()) < 1e-14);
  CHECK(r.evaluations > 0);

  r = integrate_semi_infinite([](double t) { return cdouble(t * std::exp(-t)); });
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - 1.0) < 1e-12);

  // Integrable inverse-square-root endpoint: Gamma(1/2) = sqrt(pi).
  r = integrate_semi_infinite(
      [](double t) { return cdouble(std::exp(-t) / std::sqrt(t)); });
  CHECK(std::abs(r.value.real() - std::sqrt(pi)) < 1e-9);
}

TEST_CASE("semi-infinite rule handles a damped phase") {
  // integral of e^{-i t - 0.1 t} = 1/(0.1 + i)
  QuadResult r = integrate_semi_infinite([](double t) {
    return std::exp(cdouble(-0.1 * t, -t));
  });
  const cdouble want = 1.0 / cdouble(0.1, 1.0);
  CHECK(r.converged);
  CHECK(rel_err(r.value, want) < 1e-10);
}

TEST_CASE("tightening tolerances moves the value less than the estimate") {
  auto f = [](double t) { return std::exp(cdouble(-0.3 * t, 2.0 * t)); };
  QuadratureConfig loose;
  loose.rel_tol = 1e-6;
  loose.abs_tol = 1e-8;
  QuadratureConfig tight = loose;
  tight.rel_tol = 1e-8;
  tight.abs_tol = 1e-10;
  const QuadResult a = integrate_semi_infinite(f, loose);
  const QuadResult b = integrate_semi_infinite(f, tight);
  CHECK(a.converged);
  CHECK(b.converged);
  CHECK(std::abs(a.value - b.value) <= a.error_estimate + 1e-14);
}

TEST_CASE("non-integrable endpoint is rejected") {
  CHECK_THROWS_AS(
      integrate_semi_infinite([](double t) { return cdouble(std::exp(-t) / t); }),
      NonIntegrableSingularity);
  // 1/t^{1.2} is worse than 1/t and must also be rejected.
  CHECK_THROWS_AS(
      integrate_semi_infinite(
          [](double t) { return cdouble(std::exp(-t) * std::pow(t, -1.2)); }),
      NonIntegrableSingularity);
}

TEST_CASE("undecayed tail at the truncation bound is detected") {
  CHECK_THROWS_AS(
      integrate_semi_infinite(
          [](double t) { return cdouble(std::pow(1.0 + t, -1.01)); }),
      TruncationFailure);
}

TEST_CASE("finite-interval rule") {
  QuadResult r = integrate_finite([](double x) { return cdouble(x * x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - 1.0 / 3.0) < 1e-13);

  r = integrate_finite([](double x) { return cdouble(std::sin(x)); }, 0.0, pi);
  CHECK(std::abs(r.value.real() - 2.0) < 1e-12);

  CHECK_THROWS_AS(
      integrate_finite([](double x) { return cdouble(1.0 / x); }, 0.0, 1.0),
      NonIntegrableSingularity);
}

TEST_CASE("oscillatory limit of a pure phase family is i/s") {
  // f(t, eps) = e^{i s t - eps t}; the regulated integrals extrapolate to i/s.
  // The schedule scales with s so the extrapolation stays inside the
  // analyticity radius of 1/(eps - i s).
  for (double s : {0.5, 1.0, 2.0, 5.0, -1.0}) {
    QuadratureConfig cfg;
    cfg.eps_schedule.clear();
    for (double eta : {0.2, 0.14, 0.1, 0.07, 0.05, 0.035, 0.025}) {
      cfg.eps_schedule.push_back(eta * std::abs(s));
    }
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-11;
    cfg.max_refinements = 17;
    const QuadResult r = oscillatory_limit(
        [s](double t, double eps) { return std::exp(cdouble(-eps * t, s * t)); },
        cfg);
    const cdouble want = I1 / s;
    CHECK(rel_err(r.value, want) < 1e-6);
    CHECK(std::abs(r.value - want) <= 20.0 * r.error_estimate + 1e-9);
  }
}

TEST_CASE("oscillatory limit on a plain decaying family") {
  const QuadResult r = oscillatory_limit(
      [](double t, double eps) { return cdouble(std::exp(-t - eps * t)); });
  // The five-point default schedule certifies ~1e-6; the value itself is
  // much better and must sit inside the reported estimate.
  CHECK(std::abs(r.value.real() - 1.0) < 1e-8);
  CHECK(std::abs(r.value - cdouble(1.0)) <= r.error_estimate);

  QuadratureConfig loose;
  loose.rel_tol = 1e-5;
  const QuadResult r2 = oscillatory_limit(
      [](double t, double eps) { return cdouble(std::exp(-t - eps * t)); },
      loose);
  CHECK(r2.converged);
}

TEST_CASE("diverging extrapolation throws") {
  // I(eps) = 1/eps has no limit; the diagonal must be seen to grow.
  CHECK_THROWS_AS(oscillatory_limit([](double t, double eps) {
                    return cdouble(std::exp(-eps * t));
                  }),
                  ExtrapolationDiverged);
}

TEST_CASE("gamma modulus identity") {
  // |Gamma(i nu)|^2 against the reflection value pi / (nu sinh(pi nu)).
  for (int i = 0; i < 50; ++i) {
    const double nu =
        std::exp(std::log(1e-3) +
                 (std::log(20.0) - std::log(1e-3)) * i / 49.0);
    const double got = gamma_abs_sq_imag(nu);
    const double want = pi / (nu * std::sinh(pi * nu));
    CHECK(rel_err(got, want) < 1e-12);
  }
  CHECK(rel_err(gamma_abs_sq_imag(1.0), 0.2720290549821331) < 1e-13);
  CHECK_THROWS_AS(gamma_abs_sq_imag(0.0), DomainError);
}

TEST_CASE("log gamma at real anchors") {
  CHECK(std::abs(log_gamma(cdouble(2.0, 0.0)).real()) < 1e-14);
  CHECK(std::abs(log_gamma(cdouble(5.0, 0.0)).real() - std::log(24.0)) < 1e-13);
  // Recurrence Gamma(1+z) = z Gamma(z) off the real axis.
  const cdouble z(0.7, 1.3);
  const cdouble lhs = log_gamma(z + 1.0);
  const cdouble rhs = log_gamma(z) + std::log(z);
  CHECK(std::abs(lhs - rhs) < 1e-13);
  CHECK_THROWS_AS(log_gamma(cdouble(-1.0, 0.5)), DomainError);
}

TEST_CASE("digamma anchors and identities") {
  const double euler = 0.5772156649015329;
  CHECK(std::abs(digamma_complex(cdouble(1.0, 0.0)).real() + euler) < 1e-13);
  CHECK(std::abs(digamma_complex(cdouble(2.0, 0.0)).real() - (1.0 - euler)) <
        1e-13);
  CHECK(std::abs(digamma_complex(cdouble(0.5, 0.0)).real() -
                 (-euler - 2.0 * std::log(2.0))) < 1e-12);

  // Im psi(1 + i y) = -1/(2y) + (pi/2) coth(pi y); this identity carries the
  // series-route completion, so it gets its own check.
  for (double y : {0.3, 1.0, 4.0}) {
    const double got = digamma_complex(cdouble(1.0, y)).imag();
    const double want = -0.5 / y + 0.5 * pi / std::tanh(pi * y);
    CHECK(rel_err(got, want) < 1e-13);
  }

  // Shift identity psi(z+1) = psi(z) + 1/z across the series/recurrence seam.
  const cdouble z(0.8, 0.3);
  CHECK(std::abs(digamma_complex(z + 1.0) - digamma_complex(z) - 1.0 / z) <
        1e-13);
  // Conjugate symmetry.
  const cdouble w(3.2, 1.7);
  CHECK(std::abs(digamma_complex(std::conj(w)) -
                 std::conj(digamma_complex(w))) < 1e-14);
}

TEST_CASE("Mittag-Leffler partial sums and exact tail") {
  for (int terms : {0, 1, 5, 50}) {
    for (int i = 0; i < 20; ++i) {
      const double y = std::exp(std::log(1e-2) +
                                (std::log(50.0) - std::log(1e-2)) * i / 19.0);
      const CothPartials c = mittag_leffler_coth(y, terms);
      const double want = coth_pi(y);
      CHECK(std::abs(c.tail_corrected - want) <=
            1e-10 * std::max(1.0, std::abs(want)));
      // The bare partial sum must match a direct loop.
      double direct = 1.0 / (pi * y);
      for (int k = 1; k <= terms; ++k) {
        direct += (2.0 / pi) * y / (double(k) * k + y * y);
      }
      CHECK(std::abs(c.partial - direct) < 1e-14 * std::max(1.0, direct));
      // And the correction must beat the bare truncation everywhere.
      if (terms <= 5) {
        CHECK(std::abs(c.tail_corrected - want) <
              std::abs(c.partial - want) + 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(mittag_leffler_coth(-1.0, 3), DomainError);
}

TEST_CASE("Gauss-Legendre nodes") {
  std::vector<double> x, w;
  gauss_legendre(5, 0.0, 1.0, x, w);
  double moment9 = 0.0, mass = 0.0;
  for (int i = 0; i < 5; ++i) {
    moment9 += w[i] * std::pow(x[i], 9);
    mass += w[i];
  }
  CHECK(std::abs(moment9 - 0.1) < 1e-14);
  CHECK(std::abs(mass - 1.0) < 1e-14);
}

TEST_CASE("Neville extrapolation to zero is exact on polynomials") {
  const std::vector<double> xs{0.4, 0.2, 0.1, 0.05};
  std::vector<cdouble> ys;
  for (double x : xs) ys.push_back(cdouble(3.0 - 2.0 * x + x * x, 0.5 * x));
  auto [v, step] = neville_to_zero(xs, ys);
  CHECK(std::abs(v - cdouble(3.0, 0.0)) < 1e-13);
  CHECK(step < 1e-10);
}

TEST_CASE("Brent root and line fit") {
  const double root = brent_root([](double x) { return std::cos(x); }, 1.0, 2.0);
  CHECK(std::abs(root - pi / 2.0) < 1e-12);
  const std::vector<double> xs{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> ys{1.0, 3.5, 6.0, 8.5};
  const LineFit lf = fit_line(xs, ys);
  CHECK(std::abs(lf.slope - 2.5) < 1e-13);
  CHECK(std::abs(lf.intercept - 1.0) < 1e-13);
}

TEST_CASE("default quadrature configuration") {
  const QuadratureConfig cfg;
  REQUIRE(cfg.eps_schedule.size() == 5);
  CHECK(cfg.eps_schedule.front() == doctest::Approx(0.1));
  CHECK(cfg.eps_schedule.back() == doctest::Approx(0.00625));
  CHECK(cfg.abs_tol == doctest::Approx(1e-10));
  CHECK(cfg.rel_tol == doctest::Approx(1e-8));
  CHECK(cfg.max_refinements == 15);
  CHECK(cfg.truncation_T == doctest::Approx(700.0));
}
