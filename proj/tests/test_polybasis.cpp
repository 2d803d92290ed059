// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "smaxdg/polybasis.hpp"

using namespace smaxdg;

TEST_CASE("Legendre values at sample points")
{
  CHECK(LegendreP(0, 0.37) == 1.0);
  CHECK(LegendreP(1, 0.5) == doctest::Approx(0.5));
  CHECK(LegendreP(2, 1.0) == doctest::Approx(1.0));
  for (int l = 0; l <= 5; l++)
  {
    CHECK(LegendreP(l, 1.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("Legendre recurrence matches closed forms, derivatives and parity")
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; trial++)
  {
    const double xi = u(rng);
    double all[6];
    LegendreAll(5, xi, all);
    for (int l = 0; l <= 5; l++)
    {
      CHECK(std::abs(LegendreP(l, xi) - oracle::Legendre(l, xi)) < 1e-14);
      CHECK(std::abs(all[l] - oracle::Legendre(l, xi)) < 1e-14);
      CHECK(std::abs(LegendreDerivative(l, xi) - oracle::LegendreDeriv(l, xi)) < 1e-13);
      const double sign = (l % 2) ? -1.0 : 1.0;
      CHECK(std::abs(LegendreP(l, -xi) - sign * LegendreP(l, xi)) < 1e-15);
    }
  }
}

TEST_CASE("two-point Gauss rule")
{
  const auto r = GaussRule(2);
  REQUIRE(r.Size() == 2);
  CHECK(r.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0));
  CHECK(r.weights[1] == doctest::Approx(1.0));
  double s = 0.0;
  for (int q = 0; q < 2; q++)
  {
    s += r.weights[q] * r.nodes[q] * r.nodes[q];
  }
  CHECK(std::abs(s - 2.0 / 3.0) < 1e-15);
}

TEST_CASE("Gauss rules integrate monomials exactly up to degree 2n-1")
{
  const auto r5 = GaussRule(5);
  double s = 0.0;
  for (int q = 0; q < 5; q++)
  {
    s += r5.weights[q] * std::pow(r5.nodes[q], 8);
  }
  CHECK(std::abs(s - 2.0 / 9.0) < 1e-13);

  for (int n = 1; n <= 12; n++)
  {
    const auto r = GaussRule(n);
    for (int q = 1; q < n; q++)
    {
      CHECK(r.nodes[q] > r.nodes[q - 1]);
    }
    for (int d = 0; d <= 2 * n - 1; d++)
    {
      double v = 0.0;
      for (int q = 0; q < n; q++)
      {
        v += r.weights[q] * std::pow(r.nodes[q], d);
      }
      const double exact = (d % 2) ? 0.0 : 2.0 / (d + 1);
      CHECK(std::abs(v - exact) < 1e-13);
    }
  }
  CHECK_THROWS_AS(GaussRule(0), std::invalid_argument);
}

TEST_CASE("inverse mass entries")
{
  CHECK(InverseMass(0.1, 1) == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(InverseMass(2.0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(InverseMass(std::numbers::pi / 10, 2) ==
        doctest::Approx(50.0 / std::numbers::pi).epsilon(1e-14));

  // Against Romberg quadrature of the squared mapped basis.
  const double h = 0.37;
  const auto md = ComputeMassData(h, 4);
  for (int l = 0; l <= 4; l++)
  {
    const double m =
        0.5 * h * oracle::Romberg([&](double xi) { return std::pow(oracle::Legendre(l, xi), 2); },
                                  -1.0, 1.0);
    CHECK(std::abs(md.mass[l] - m) < 1e-13 * m);
    CHECK(std::abs(md.inv_mass[l] * m - 1.0) < 1e-12);
  }
}

TEST_CASE("basis orthogonality by Gauss quadrature")
{
  const int k = 4;
  const auto r = GaussRule(k + 2);
  const double h = 0.3;
  for (int l = 0; l <= k; l++)
  {
    for (int m = 0; m <= k; m++)
    {
      double s = 0.0;
      for (int q = 0; q < r.Size(); q++)
      {
        s += 0.5 * h * r.weights[q] * LegendreP(l, r.nodes[q]) * LegendreP(m, r.nodes[q]);
      }
      if (l == m)
      {
        CHECK(std::abs(s - h / (2 * l + 1)) < 1e-13 * h);
      }
      else
      {
        CHECK(std::abs(s) < 1e-12 * h);
      }
    }
  }
}

TEST_CASE("invalid degree")
{
  CHECK_THROWS_AS(BasisSpec(-1), std::invalid_argument);
  CHECK(BasisSpec(3).NumModes() == 4);
}
