// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/polybasis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace smaxdg
{

BasisSpec::BasisSpec(int k) : degree(k)
{
  if (k < 0)
  {
    throw std::invalid_argument("Polynomial degree must be non-negative, got " +
                                std::to_string(k));
  }
}

double LegendreP(int l, double xi)
{
  if (l < 0)
  {
    throw std::invalid_argument("Legendre index must be non-negative");
  }
  if (l == 0)
  {
    return 1.0;
  }
  double p0 = 1.0, p1 = xi;
  for (int n = 1; n < l; n++)
  {
    const double p2 = ((2.0 * n + 1.0) * xi * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double LegendreDerivative(int l, double xi)
{
  if (l < 0)
  {
    throw std::invalid_argument("Legendre index must be non-negative");
  }
  // P'_l = sum over m = l-1, l-3, ... of (2m + 1) P_m; avoids the 1 - xi^2 singularity.
  double d = 0.0;
  for (int m = l - 1; m >= 0; m -= 2)
  {
    d += (2.0 * m + 1.0) * LegendreP(m, xi);
  }
  return d;
}

void LegendreAll(int k, double xi, double *out)
{
  out[0] = 1.0;
  if (k == 0)
  {
    return;
  }
  out[1] = xi;
  for (int n = 1; n < k; n++)
  {
    out[n + 1] = ((2.0 * n + 1.0) * xi * out[n] - n * out[n - 1]) / (n + 1.0);
  }
}

QuadratureRule GaussRule(int n)
{
  if (n < 1)
  {
    throw std::invalid_argument("Gauss rule needs at least one point");
  }
  // Returns (P_n(x), P_n'(x)).
  auto legendre_with_derivative = [n](double x)
  {
    double p0 = 1.0, p1 = x;
    for (int m = 1; m < n; m++)
    {
      const double p2 = ((2.0 * m + 1.0) * x * p1 - m * p0) / (m + 1.0);
      p0 = p1;
      p1 = p2;
    }
    const double pn = (n == 1) ? x : p1;
    const double pnm1 = (n == 1) ? 1.0 : p0;
    return std::pair{pn, n * (x * pn - pnm1) / (x * x - 1.0)};
  };

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; i++)
  {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; iter++)
    {
      const auto [pn, dp] = legendre_with_derivative(x);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
      {
        break;
      }
    }
    if (2 * i + 1 == n)
    {
      x = 0.0;
    }
    const double dp = legendre_with_derivative(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

MassData ComputeMassData(double h, int k)
{
  if (!(h > 0.0))
  {
    throw std::invalid_argument("Cell width must be positive");
  }
  if (k < 0)
  {
    throw std::invalid_argument("Polynomial degree must be non-negative");
  }
  MassData data;
  data.mass.resize(k + 1);
  data.inv_mass.resize(k + 1);
  for (int l = 0; l <= k; l++)
  {
    data.mass[l] = h / (2.0 * l + 1.0);
    data.inv_mass[l] = (2.0 * l + 1.0) / h;
  }
  return data;
}

}  // namespace smaxdg
