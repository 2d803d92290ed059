// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/field.hpp"

#include <cmath>
#include <stdexcept>

#include "smaxdg/polybasis.hpp"

namespace smaxdg
{

double EvaluateInCell(const FieldCoeffs1D &f, int j, double xi)
{
  std::vector<double> p(f.NumModes());
  LegendreAll(f.degree, xi, p.data());
  double v = 0.0;
  for (int l = 0; l <= f.degree; l++)
  {
    v += f(j, l) * p[l];
  }
  return v;
}

double EvaluateField(const Mesh1D &mesh, const FieldCoeffs1D &f, double x)
{
  const int j = mesh.Locate(x);
  const double xi = 2.0 * (x - mesh.Center(j)) / mesh.Width(j);
  return EvaluateInCell(f, j, xi);
}

double EvaluateField(const Mesh2D &mesh, const FieldCoeffs2D &f, double x, double y)
{
  const int k = f.degree;
  const int i = mesh.X().Locate(x), j = mesh.Y().Locate(y);
  const double xi = 2.0 * (x - mesh.X().Center(i)) / mesh.X().Width(i);
  const double eta = 2.0 * (y - mesh.Y().Center(j)) / mesh.Y().Width(j);
  std::vector<double> px(k + 1), py(k + 1);
  LegendreAll(k, xi, px.data());
  LegendreAll(k, eta, py.data());
  double v = 0.0;
  for (int b = 0; b <= k; b++)
  {
    for (int a = 0; a <= k; a++)
    {
      v += f(i, j, a, b) * px[a] * py[b];
    }
  }
  return v;
}

std::vector<double> MassDiagonal(const Mesh1D &mesh, int k)
{
  std::vector<double> m(std::size_t(mesh.NumCells()) * (k + 1));
  for (int j = 0; j < mesh.NumCells(); j++)
  {
    for (int l = 0; l <= k; l++)
    {
      m[std::size_t(j) * (k + 1) + l] = mesh.Width(j) / (2.0 * l + 1.0);
    }
  }
  return m;
}

std::vector<double> MassDiagonal(const Mesh2D &mesh, int k)
{
  const int np = k + 1;
  std::vector<double> m(std::size_t(mesh.NumCells()) * np * np);
  for (int j = 0; j < mesh.Ny(); j++)
  {
    for (int i = 0; i < mesh.Nx(); i++)
    {
      const std::size_t base = std::size_t(mesh.CellIndex(i, j)) * np * np;
      for (int b = 0; b < np; b++)
      {
        for (int a = 0; a < np; a++)
        {
          m[base + a + np * b] = mesh.X().Width(i) / (2.0 * a + 1.0) * mesh.Y().Width(j) /
                                 (2.0 * b + 1.0);
        }
      }
    }
  }
  return m;
}

namespace
{

template <typename MeshType>
double MassInnerProductImpl(const MeshType &mesh, int k, std::span<const double> a,
                            std::span<const double> b)
{
  if (a.size() != b.size())
  {
    throw std::invalid_argument("Inner product of vectors with different sizes");
  }
  const auto m = MassDiagonal(mesh, k);
  if (m.size() != a.size())
  {
    throw std::invalid_argument("Vector size does not match the mesh layout");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); i++)
  {
    s += m[i] * a[i] * b[i];
  }
  return s;
}

}  // namespace

double MassInnerProduct(const Mesh1D &mesh, int k, std::span<const double> a,
                        std::span<const double> b)
{
  return MassInnerProductImpl(mesh, k, a, b);
}

double MassInnerProduct(const Mesh2D &mesh, int k, std::span<const double> a,
                        std::span<const double> b)
{
  return MassInnerProductImpl(mesh, k, a, b);
}

double L2Error(const Mesh1D &mesh, const FieldCoeffs1D &f, const Function1D &g, int nq)
{
  const auto rule = GaussRule(nq);
  const int k = f.degree;
  std::vector<double> p(k + 1);
  double err2 = 0.0;
  for (int j = 0; j < mesh.NumCells(); j++)
  {
    const double half = 0.5 * mesh.Width(j);
    for (int q = 0; q < nq; q++)
    {
      LegendreAll(k, rule.nodes[q], p.data());
      double v = 0.0;
      for (int l = 0; l <= k; l++)
      {
        v += f(j, l) * p[l];
      }
      const double d = v - g(mesh.MapToPhysical(j, rule.nodes[q]));
      err2 += rule.weights[q] * half * d * d;
    }
  }
  return std::sqrt(err2);
}

double L2Error(const Mesh2D &mesh, const FieldCoeffs2D &f, const Function2D &g, int nq)
{
  const auto rule = GaussRule(nq);
  const int k = f.degree;
  // Basis values at quadrature nodes, shared by both directions.
  std::vector<double> pv(std::size_t(nq) * (k + 1));
  for (int q = 0; q < nq; q++)
  {
    LegendreAll(k, rule.nodes[q], &pv[std::size_t(q) * (k + 1)]);
  }
  double err2 = 0.0;
  for (int j = 0; j < mesh.Ny(); j++)
  {
    const double hy = mesh.Y().Width(j);
    for (int i = 0; i < mesh.Nx(); i++)
    {
      const double hx = mesh.X().Width(i);
      for (int qy = 0; qy < nq; qy++)
      {
        const double y = mesh.Y().MapToPhysical(j, rule.nodes[qy]);
        for (int qx = 0; qx < nq; qx++)
        {
          const double x = mesh.X().MapToPhysical(i, rule.nodes[qx]);
          double v = 0.0;
          for (int b = 0; b <= k; b++)
          {
            double row = 0.0;
            for (int a = 0; a <= k; a++)
            {
              row += f(i, j, a, b) * pv[std::size_t(qx) * (k + 1) + a];
            }
            v += row * pv[std::size_t(qy) * (k + 1) + b];
          }
          const double d = v - g(x, y);
          err2 += rule.weights[qx] * rule.weights[qy] * 0.25 * hx * hy * d * d;
        }
      }
    }
  }
  return std::sqrt(err2);
}

}  // namespace smaxdg
