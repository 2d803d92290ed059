// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "smaxdg/projections.hpp"

using namespace smaxdg;
using std::numbers::pi;

namespace
{

// One-sided limits of cell j's polynomial at its ends.
double RightTrace(const FieldCoeffs1D &f, int j) { return EvaluateInCell(f, j, 1.0); }
double LeftTrace(const FieldCoeffs1D &f, int j) { return EvaluateInCell(f, j, -1.0); }

}  // namespace

TEST_CASE("projections reproduce polynomials")
{
  const Mesh1D mesh({0.0, 0.3, 0.7, 1.2, 2.0});
  // Takes the same value at both ends, so it is continuous across the periodic wrap.
  auto g = [](double x) { return 1.0 + x * (2.0 - x); };
  for (double alpha : {-0.5, -0.25, 0.25, 0.5, 1.0})
  {
    const auto r = Project1D(g, mesh, BasisSpec(2), ProjectionSpec::Radau(alpha));
    const auto l2 = Project1D(g, mesh, BasisSpec(2), ProjectionSpec::L2());
    for (std::size_t i = 0; i < r.Size(); i++)
    {
      CHECK(std::abs(r.values[i] - l2.values[i]) < 1e-12);
    }
  }
}

TEST_CASE("Radau interface condition and moments")
{
  const auto mesh = UniformMesh1D(0.0, 2 * pi, 13);
  auto g = [](double x) { return std::sin(x) + 0.3 * std::cos(2 * x); };
  for (int k : {1, 2, 3})
  {
    for (double alpha : {-0.5, 0.5, 0.2, -0.3})
    {
      const auto p = Project1D(g, mesh, BasisSpec(k), ProjectionSpec::Radau(alpha));
      const int n = mesh.NumCells();
      for (int j = 0; j < n; j++)
      {
        // Flux value at x_{j+1/2}: (1/2 + alpha) v^+ + (1/2 - alpha) v^-.
        const double vp = LeftTrace(p, (j + 1) % n), vm = RightTrace(p, j);
        const double flux = (0.5 + alpha) * vp + (0.5 - alpha) * vm;
        CHECK(std::abs(flux - g(mesh.CellRight(j))) < 1e-10);
        for (int l = 0; l < k; l++)
        {
          const double m = oracle::Romberg(
              [&](double xi)
              {
                return (EvaluateInCell(p, j, xi) - g(mesh.MapToPhysical(j, xi))) *
                       oracle::Legendre(l, xi);
              },
              -1.0, 1.0);
          CHECK(std::abs(m) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("alpha = 1/2 pins the right limit")
{
  const auto mesh = UniformMesh1D(0.0, 1.0, 9);
  auto g = [](double x) { return std::exp(std::sin(2 * pi * x)) * std::cos(6 * pi * x); };
  const auto p = Project1D(g, mesh, BasisSpec(2), ProjectionSpec::Radau(0.5));
  for (int j = 0; j < 9; j++)
  {
    CHECK(std::abs(LeftTrace(p, j) - g(mesh.CellLeft(j))) < 1e-10);
  }
}

TEST_CASE("L2 projection is idempotent")
{
  const auto mesh = UniformMesh1D(0.0, 2 * pi, 10);
  const BasisSpec basis(2);
  const auto p = Project1D([](double x) { return std::sin(x); }, mesh, basis,
                           ProjectionSpec::L2());
  const auto twice = Project1D([&](double x) { return EvaluateField(mesh, p, x); }, mesh, basis,
                               ProjectionSpec::L2());
  for (std::size_t i = 0; i < p.Size(); i++)
  {
    CHECK(std::abs(p.values[i] - twice.values[i]) < 1e-12);
  }
}

TEST_CASE("Radau projection of a DG function is the identity")
{
  // Interface data taken from the flux of the DG function itself.
  const auto mesh = UniformMesh1D(0.0, 1.0, 8);
  const int k = 2;
  const BasisSpec basis(k);
  for (double alpha : {0.5, -0.5, 0.3})
  {
    const auto spec = ProjectionSpec::Radau(alpha);
    const auto f = Project1D([](double x) { return std::sin(5 * x); }, mesh, basis,
                             ProjectionSpec::L2());
    const Projector1D proj(mesh, basis, spec, DefaultProjectionPoints(k));
    const auto pts = proj.SamplePoints(mesh);
    std::vector<double> samples(pts.size()), iface(mesh.NumCells());
    const int nq = proj.QuadPoints();
    for (std::size_t s = 0; s < pts.size(); s++)
    {
      const int j = static_cast<int>(s) / nq;
      samples[s] = EvaluateInCell(f, j, proj.Rule().nodes[s % nq]);
    }
    for (int j = 0; j < mesh.NumCells(); j++)
    {
      iface[j] = (0.5 + alpha) * LeftTrace(f, (j + 1) % 8) + (0.5 - alpha) * RightTrace(f, j);
    }
    std::vector<double> out(f.Size());
    proj.Apply(samples, iface, out);
    for (std::size_t i = 0; i < out.size(); i++)
    {
      CHECK(std::abs(out[i] - f.values[i]) < 1e-12);
    }
  }
}

TEST_CASE("projection error decays at order k + 1")
{
  for (int k : {1, 2})
  {
    std::vector<double> h, err;
    for (int n : {20, 40, 80, 160})
    {
      const auto mesh = UniformMesh1D(0.0, 2 * pi, n);
      const auto p = Project1D([](double x) { return std::sin(x); }, mesh, BasisSpec(k),
                               ProjectionSpec::Radau(0.5));
      h.push_back(mesh.MaxWidth());
      err.push_back(L2Error(mesh, p, [](double x) { return std::sin(x); }, k + 4));
    }
    CHECK(std::abs(oracle::LogLogSlope(h, err) - (k + 1)) < 0.2);
  }
}

TEST_CASE("tensor projections")
{
  const Mesh2D mesh(UniformMesh1D(0.0, 2 * pi, 6), UniformMesh1D(0.0, 2 * pi, 5));
  const BasisSpec basis(2);
  const auto rx = ProjectionSpec::Radau(-0.5), ry = ProjectionSpec::Radau(0.5);

  // Biquadratic and continuous across both periodic wraps, so it lies in the space.
  auto biquad = [](double x, double y)
  { return (1.0 + x * (2 * pi - x)) * (2.0 + y * (2 * pi - y) / 3.0); };
  const auto pb = Project2D(biquad, mesh, basis, rx, ry);
  CHECK(L2Error(mesh, pb, biquad, 4) < 1e-12);

  // Initial electric field of the 2D exact solution.
  auto e0 = [](double x, double y) { return -std::cos(x + y); };
  const auto a = Project2D(e0, mesh, basis, rx, ry);
  const auto b = Project2DXFirst(e0, mesh, basis, rx, ry);
  for (std::size_t i = 0; i < a.Size(); i++)
  {
    CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);
  }

  // Constant in y: Radau-in-x, L2-in-y equals the 1D Radau projection on every y cell.
  auto fx = [](double x) { return std::sin(2 * x); };
  const auto c = Project2D([&](double x, double) { return fx(x); }, mesh, basis, rx,
                           ProjectionSpec::L2());
  const auto c1 = Project1D(fx, mesh.X(), basis, rx);
  for (int j = 0; j < mesh.Ny(); j++)
  {
    for (int i = 0; i < mesh.Nx(); i++)
    {
      for (int a2 = 0; a2 <= 2; a2++)
      {
        CHECK(std::abs(c(i, j, a2, 0) - c1(i, a2)) < 1e-12);
        for (int b2 = 1; b2 <= 2; b2++)
        {
          CHECK(std::abs(c(i, j, a2, b2)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("centered and out-of-range Radau parameters are rejected")
{
  // With alpha = 0 the cyclic system for the top coefficients has equal diagonals and is
  // singular for odd k on any mesh, so a hand-built centered spec is rejected.
  const auto mesh = UniformMesh1D(0.0, 1.0, 4);
  const ProjectionSpec centered{ProjectionSpec::Kind::RADAU, 0.0};
  CHECK_THROWS_AS(Project1D([](double x) { return x; }, mesh, BasisSpec(1), centered),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProjectionSpec::Radau(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ProjectionSpec::Radau(1.5), std::invalid_argument);
}
