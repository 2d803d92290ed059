// SPDX-License-Identifier: Apache-2.0

// Reference computations used by the tests. None of them call into the library's
// quadrature, basis or operator code, so agreement is a real check.

#ifndef SMAXDG_TESTS_ORACLES_HPP
#define SMAXDG_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace oracle
{

// Legendre polynomials in closed form up to degree 5.
inline double Legendre(int l, double x)
{
  switch (l)
  {
    case 0:
      return 1.0;
    case 1:
      return x;
    case 2:
      return 0.5 * (3 * x * x - 1);
    case 3:
      return 0.5 * (5 * x * x * x - 3 * x);
    case 4:
      return (35 * std::pow(x, 4) - 30 * x * x + 3) / 8.0;
    case 5:
      return (63 * std::pow(x, 5) - 70 * x * x * x + 15 * x) / 8.0;
  }
  return NAN;
}

inline double LegendreDeriv(int l, double x)
{
  switch (l)
  {
    case 0:
      return 0.0;
    case 1:
      return 1.0;
    case 2:
      return 3 * x;
    case 3:
      return 0.5 * (15 * x * x - 3);
    case 4:
      return (140 * x * x * x - 60 * x) / 8.0;
    case 5:
      return (315 * std::pow(x, 4) - 210 * x * x + 15) / 8.0;
  }
  return NAN;
}

// Romberg integration over 2^levels trapezoid panels. Exact for polynomials up to degree
// 2 levels + 1 and spectrally accurate for smooth periodic integrands.
inline double Romberg(const std::function<double(double)> &f, double a, double b, int levels = 9)
{
  std::vector<double> row = {0.5 * (b - a) * (f(a) + f(b))};
  for (int i = 1; i <= levels; i++)
  {
    const int panels = 1 << i;
    const double h = (b - a) / panels;
    double mid = 0.0;
    for (int j = 1; j < panels; j += 2)
    {
      mid += f(a + j * h);
    }
    std::vector<double> next = {0.5 * row[0] + h * mid};
    double factor = 1.0;
    for (int k = 1; k <= i; k++)
    {
      factor *= 4.0;
      next.push_back(next[k - 1] + (next[k - 1] - row[k - 1]) / (factor - 1.0));
    }
    row = std::move(next);
  }
  return row.back();
}

// Dense derivative operator D(beta) from the weak form, with the interface flux
// (1/2 + beta) f^+ + (1/2 - beta) f^-, on a uniform periodic mesh of n cells of width h.
inline Eigen::MatrixXd WeakDerivative(int n, double h, int k, double beta)
{
  const int np = k + 1;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n * np, n * np);
  const double wp = 0.5 + beta, wm = 0.5 - beta;
  for (int j = 0; j < n; j++)
  {
    const int jl = (j + n - 1) % n, jr = (j + 1) % n;
    for (int m = 0; m < np; m++)
    {
      const double inv_mass = (2.0 * m + 1.0) / h;
      const int row = j * np + m;
      for (int l = 0; l < np; l++)
      {
        // -(phi_l, d/dx phi_m) over the cell; d/dx = (2/h) d/dxi, dx = (h/2) dxi.
        const double vol = -Romberg([&](double xi)
                                    { return Legendre(l, xi) * LegendreDeriv(m, xi); },
                                    -1.0, 1.0);
        d(row, j * np + l) += inv_mass * vol;
        // Right interface: f^- from cell j (xi = 1), f^+ from cell jr (xi = -1); test fn at
        // xi = 1 (value 1).
        d(row, j * np + l) += inv_mass * wm * Legendre(l, 1.0);
        d(row, jr * np + l) += inv_mass * wp * Legendre(l, -1.0);
        // Left interface: f^- from cell jl, f^+ from cell j; test fn at xi = -1.
        const double tm = Legendre(m, -1.0);
        d(row, jl * np + l) -= inv_mass * tm * wm * Legendre(l, 1.0);
        d(row, j * np + l) -= inv_mass * tm * wp * Legendre(l, -1.0);
      }
    }
  }
  return d;
}

inline std::vector<double> RandomVector(std::mt19937_64 &rng, std::size_t n)
{
  std::normal_distribution<double> nd;
  std::vector<double> v(n);
  for (auto &x : v)
  {
    x = nd(rng);
  }
  return v;
}

inline double Weighted(std::span<const double> a, std::span<const double> b,
                       std::span<const double> w)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); i++)
  {
    s += w[i] * a[i] * b[i];
  }
  return s;
}

// Least-squares slope of log(y) against log(x).
inline double LogLogSlope(const std::vector<double> &x, const std::vector<double> &y)
{
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; i++)
  {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle

#endif  // SMAXDG_TESTS_ORACLES_HPP
