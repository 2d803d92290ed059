// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/projections.hpp"

#include <cmath>
#include <stdexcept>

#include "smaxdg/errors.hpp"

namespace smaxdg
{

ProjectionSpec ProjectionSpec::Radau(double alpha)
{
  if (alpha == 0.0 || std::abs(alpha) > 1.0 || !std::isfinite(alpha))
  {
    throw std::invalid_argument("Radau projection needs a nonzero alpha in [-1, 1]");
  }
  return {Kind::RADAU, alpha};
}

Projector1D::Projector1D(const Mesh1D &mesh, const BasisSpec &basis,
                         const ProjectionSpec &spec, int quad_points)
  : degree_(basis.degree), spec_(spec), widths_(mesh.Widths())
{
  if (spec.kind == ProjectionSpec::Kind::RADAU &&
      (spec.alpha == 0.0 || std::abs(spec.alpha) > 1.0))
  {
    throw std::invalid_argument("Radau projection needs a nonzero alpha in [-1, 1]");
  }
  if (quad_points < degree_ + 1)
  {
    throw std::invalid_argument("Projection quadrature must have at least k + 1 points");
  }
  rule_ = GaussRule(quad_points);
  const int np = degree_ + 1;
  weighted_basis_.resize(std::size_t(quad_points) * np);
  for (int q = 0; q < quad_points; q++)
  {
    LegendreAll(degree_, rule_.nodes[q], &weighted_basis_[std::size_t(q) * np]);
    for (int l = 0; l < np; l++)
    {
      weighted_basis_[std::size_t(q) * np + l] *= rule_.weights[q] * (2.0 * l + 1.0) / 2.0;
    }
  }
}

std::vector<double> Projector1D::SamplePoints(const Mesh1D &mesh) const
{
  std::vector<double> x;
  x.reserve(std::size_t(mesh.NumCells()) * rule_.Size());
  for (int j = 0; j < mesh.NumCells(); j++)
  {
    for (double xi : rule_.nodes)
    {
      x.push_back(mesh.MapToPhysical(j, xi));
    }
  }
  return x;
}

std::vector<double> Projector1D::InterfacePoints(const Mesh1D &mesh) const
{
  std::vector<double> x(mesh.NumCells());
  for (int j = 0; j < mesh.NumCells(); j++)
  {
    x[j] = mesh.CellRight(j);
  }
  return x;
}

void Projector1D::Apply(std::span<const double> samples, std::span<const double> interface,
                        std::span<double> out) const
{
  const int n = NumCells(), nq = QuadPoints(), np = degree_ + 1;
  if (samples.size() != std::size_t(n) * nq || out.size() != std::size_t(n) * np)
  {
    throw std::invalid_argument("Projection sample or output size mismatch");
  }
  for (int j = 0; j < n; j++)
  {
    for (int l = 0; l < np; l++)
    {
      double s = 0.0;
      for (int q = 0; q < nq; q++)
      {
        s += weighted_basis_[std::size_t(q) * np + l] * samples[std::size_t(j) * nq + q];
      }
      out[std::size_t(j) * np + l] = s;
    }
  }
  if (spec_.kind == ProjectionSpec::Kind::L2)
  {
    return;
  }
  if (interface.size() != std::size_t(n))
  {
    throw std::invalid_argument("Radau projection needs one interface value per cell");
  }

  // Interface j + 1/2: a s_j + b s_{j+1} = r_j for the top coefficients s.
  const int k = degree_;
  const double a = 0.5 - spec_.alpha;
  const double b = (0.5 + spec_.alpha) * ((k % 2 == 0) ? 1.0 : -1.0);
  std::vector<double> r(n);
  for (int j = 0; j < n; j++)
  {
    const int jr = (j + 1 == n) ? 0 : j + 1;
    double left = 0.0, right = 0.0;
    for (int l = 0; l < k; l++)
    {
      left += out[std::size_t(j) * np + l];
      right += ((l % 2 == 0) ? 1.0 : -1.0) * out[std::size_t(jr) * np + l];
    }
    r[j] = interface[j] - a * left - (0.5 + spec_.alpha) * right;
  }

  // s_j = p_j + c_j s_0, swept in the stable direction.
  std::vector<double> p(n + 1), c(n + 1);
  double s0;
  if (std::abs(a) >= std::abs(b))
  {
    p[n] = 0.0;
    c[n] = 1.0;
    for (int j = n - 1; j >= 0; j--)
    {
      p[j] = (r[j] - b * p[j + 1]) / a;
      c[j] = -b * c[j + 1] / a;
    }
    // Closing condition s_0 = p_0 + c_0 s_0.
    if (std::abs(1.0 - c[0]) < 1e-12)
    {
      throw NumericalError("Singular periodic Radau projection system");
    }
    s0 = p[0] / (1.0 - c[0]);
  }
  else
  {
    p[0] = 0.0;
    c[0] = 1.0;
    for (int j = 0; j < n; j++)
    {
      p[j + 1] = (r[j] - a * p[j]) / b;
      c[j + 1] = -a * c[j] / b;
    }
    // Closing condition s_N = s_0.
    if (std::abs(1.0 - c[n]) < 1e-12)
    {
      throw NumericalError("Singular periodic Radau projection system");
    }
    s0 = p[n] / (1.0 - c[n]);
  }
  for (int j = 0; j < n; j++)
  {
    out[std::size_t(j) * np + k] = p[j] + c[j] * s0;
  }
}

namespace
{

int ResolvePoints(int quad_points, int k)
{
  return (quad_points > 0) ? quad_points : DefaultProjectionPoints(k);
}

// Applies p_inner along every sample line of the outer direction (quadrature points, then
// interfaces), then p_outer to the resulting coefficient functions. eval(o, i) samples g
// and store(cell_o, mode_o, cell_i, mode_i, value) writes the result.
template <typename Eval, typename Store>
void TensorProject(const Mesh1D &outer, const Mesh1D &inner, const Projector1D &p_outer,
                   const Projector1D &p_inner, int np, Eval &&eval, Store &&store)
{
  auto xo = p_outer.SamplePoints(outer);
  const std::size_t n_outer_samples = xo.size();
  for (double x : p_outer.InterfacePoints(outer))
  {
    xo.push_back(x);
  }
  const auto xi = p_inner.SamplePoints(inner), xi_if = p_inner.InterfacePoints(inner);
  const std::size_t inner_coeffs = std::size_t(inner.NumCells()) * np;

  std::vector<double> samples(xi.size()), iface(xi_if.size());
  std::vector<double> lines(xo.size() * inner_coeffs);
  for (std::size_t t = 0; t < xo.size(); t++)
  {
    for (std::size_t s = 0; s < xi.size(); s++)
    {
      samples[s] = eval(xo[t], xi[s]);
    }
    for (std::size_t s = 0; s < xi_if.size(); s++)
    {
      iface[s] = eval(xo[t], xi_if[s]);
    }
    p_inner.Apply(samples, iface,
                  std::span<double>(lines.data() + t * inner_coeffs, inner_coeffs));
  }

  std::vector<double> osamples(n_outer_samples), oiface(outer.NumCells());
  std::vector<double> coeffs(std::size_t(outer.NumCells()) * np);
  for (std::size_t c = 0; c < inner_coeffs; c++)
  {
    for (std::size_t t = 0; t < n_outer_samples; t++)
    {
      osamples[t] = lines[t * inner_coeffs + c];
    }
    for (int i = 0; i < outer.NumCells(); i++)
    {
      oiface[i] = lines[(n_outer_samples + i) * inner_coeffs + c];
    }
    p_outer.Apply(osamples, oiface, coeffs);
    const int cell_i = static_cast<int>(c) / np, mode_i = static_cast<int>(c) % np;
    for (int i = 0; i < outer.NumCells(); i++)
    {
      for (int a = 0; a < np; a++)
      {
        store(i, a, cell_i, mode_i, coeffs[std::size_t(i) * np + a]);
      }
    }
  }
}

}  // namespace

FieldCoeffs1D Project1D(const Function1D &g, const Mesh1D &mesh, const BasisSpec &basis,
                        const ProjectionSpec &spec, int quad_points)
{
  const Projector1D proj(mesh, basis, spec, ResolvePoints(quad_points, basis.degree));
  std::vector<double> samples, iface;
  for (double x : proj.SamplePoints(mesh))
  {
    samples.push_back(g(x));
  }
  for (double x : proj.InterfacePoints(mesh))
  {
    iface.push_back(g(x));
  }
  FieldCoeffs1D f(basis.degree, mesh.NumCells());
  proj.Apply(samples, iface, f.values);
  return f;
}

FieldCoeffs2D Project2D(const Function2D &g, const Mesh2D &mesh, const BasisSpec &basis,
                        const ProjectionSpec &spec_x, const ProjectionSpec &spec_y,
                        int quad_points)
{
  const int nq = ResolvePoints(quad_points, basis.degree);
  const Projector1D px(mesh.X(), basis, spec_x, nq), py(mesh.Y(), basis, spec_y, nq);
  FieldCoeffs2D f(basis.degree, mesh.Nx(), mesh.Ny());
  TensorProject(mesh.X(), mesh.Y(), px, py, basis.NumModes(),
                [&](double x, double y) { return g(x, y); },
                [&](int i, int a, int j, int b, double v) { f(i, j, a, b) = v; });
  return f;
}

FieldCoeffs2D Project2DXFirst(const Function2D &g, const Mesh2D &mesh,
                              const BasisSpec &basis, const ProjectionSpec &spec_x,
                              const ProjectionSpec &spec_y, int quad_points)
{
  const int nq = ResolvePoints(quad_points, basis.degree);
  const Projector1D px(mesh.X(), basis, spec_x, nq), py(mesh.Y(), basis, spec_y, nq);
  FieldCoeffs2D f(basis.degree, mesh.Nx(), mesh.Ny());
  TensorProject(mesh.Y(), mesh.X(), py, px, basis.NumModes(),
                [&](double y, double x) { return g(x, y); },
                [&](int j, int b, int i, int a, double v) { f(i, j, a, b) = v; });
  return f;
}

}  // namespace smaxdg
