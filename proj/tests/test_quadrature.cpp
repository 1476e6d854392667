#include <doctest.h>

#include <cmath>
#include <numbers>

#include "evtsir/quadrature.hpp"

using namespace evtsir;
using quadrature::integrate_exp_sinh;
using quadrature::QuadratureControl;

TEST_CASE("exp-sinh rule on exponential-weight closed forms") {
  auto r = integrate_exp_sinh([](double x) { return std::exp(-x); });
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));

  r = integrate_exp_sinh([](double x) { return x * std::exp(-x); });
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));

  // log endpoint singularity: int_0^inf ln(x) e^-x dx = -gamma
  r = integrate_exp_sinh([](double x) { return std::log(x) * std::exp(-x); });
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(-std::numbers::egamma).epsilon(1e-10));

  // algebraic endpoint singularity: int x^{-1/2} e^-x = sqrt(pi)
  r = integrate_exp_sinh([](double x) { return std::exp(-x) / std::sqrt(x); });
  CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("doubling stability once converged") {
  QuadratureControl a;
  a.max_levels = 8;
  QuadratureControl b;
  b.max_levels = 9;
  auto f = [](double x) { return std::log1p(2.0 * std::pow(x, -0.5)) * std::exp(-x); };
  const auto ra = integrate_exp_sinh(f, a);
  const auto rb = integrate_exp_sinh(f, b);
  REQUIRE(ra.converged);
  CHECK(std::abs(ra.value - rb.value) <= 1e-8 * std::abs(rb.value));
}

TEST_CASE("non-convergence is reported, not silent") {
  QuadratureControl tight;
  tight.max_levels = 2;
  tight.rel_tol = 1e-15;
  const auto r = integrate_exp_sinh([](double x) { return std::log(x) * std::exp(-x); }, tight);
  CHECK_FALSE(r.converged);
}
