// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/msp1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smaxdg
{

MspStructure::MspStructure(double m, double n) : m_(m), n_(n)
{
  if (!std::isfinite(m) || !std::isfinite(n))
  {
    throw std::invalid_argument("Flux split parameters must be finite");
  }
  const double alpha = n - m;
  if (alpha == 0.0 || std::abs(alpha) > 1.0)
  {
    throw std::invalid_argument("Flux split needs n - m nonzero and in [-1, 1]");
  }
  mm_.setZero();
  mm_(Z_V, Z_P) = -1.0;
  mm_(Z_ZETA, Z_Q) = -1.0;
  mm_(Z_P, Z_V) = 1.0;
  mm_(Z_Q, Z_ZETA) = 1.0;
  kk_.setZero();
  kk_(Z_U, Z_ZETA) = 0.5;
  kk_(Z_ETA, Z_V) = 0.5;
  kk_(Z_V, Z_ETA) = -0.5;
  kk_(Z_ZETA, Z_U) = -0.5;
  aa_ = kk_ * FluxWeights();
  if (!(mm_ + mm_.transpose()).isZero(0.0) || !(kk_ + kk_.transpose()).isZero(0.0))
  {
    throw std::logic_error("M and K must be antisymmetric");
  }
}

MspStructure MspStructure::Symmetric(double alpha)
{
  return MspStructure(-0.5 * alpha, 0.5 * alpha);
}

Mat6 MspStructure::FluxWeights() const
{
  // Hat values are {w} + c [w] with c = -2m, -2n, 2n, 2m for u, eta, v, zeta.
  Vec6 c;
  c << -2.0 * m_, -2.0 * n_, 2.0 * n_, 2.0 * m_, 0.0, 0.0;
  return c.asDiagonal();
}

MspStructure MspStructure::WithK(const Mat6 &k) const
{
  MspStructure s = *this;
  s.kk_ = k;
  s.aa_ = k * FluxWeights();
  return s;
}

namespace
{

Vec6 Average(const TracePair &t)
{
  return 0.5 * (t.minus + t.plus);
}

Vec6 Jump(const TracePair &t)
{
  return t.plus - t.minus;
}

Vec6 FluxVector(const TracePair &t, const MspStructure &s)
{
  return s.KMatrix() * Average(t) + s.AMatrix() * Jump(t);
}

}  // namespace

double FluxForm(const TracePair &u, const TracePair &v, const MspStructure &s)
{
  const Mat6 &k = s.KMatrix();
  const double avg_kuv =
      0.5 * ((k * u.minus).dot(v.minus) + (k * u.plus).dot(v.plus));
  return avg_kuv - FluxVector(u, s).dot(Average(v)) + FluxVector(v, s).dot(Average(u));
}

std::pair<double, double> InterfaceIdentityGap(const TracePair &u, const TracePair &v,
                                    const MspStructure &s)
{
  const Mat6 &k = s.KMatrix();
  const Vec6 ku = FluxVector(u, s), kv = FluxVector(v, s);
  const double left = (k * u.minus).dot(v.minus) - ku.dot(v.minus) + kv.dot(u.minus);
  const double right = (k * u.plus).dot(v.plus) - ku.dot(v.plus) + kv.dot(u.plus);
  const double f = FluxForm(u, v, s);
  return {left - f, right - f};
}

MspDiscretization::MspDiscretization(const Mesh1D &mesh, const BasisSpec &basis,
                                     const MspStructure &s)
  : mesh_(mesh), basis_(basis), s_(s),
    d_zeta_(DerivativeOp1D::Unrestricted(mesh, basis, 2.0 * s.M())),
    d_v_(DerivativeOp1D::Unrestricted(mesh, basis, 2.0 * s.N())),
    d_eta_(DerivativeOp1D::Unrestricted(mesh, basis, -2.0 * s.N())),
    d_u_(DerivativeOp1D::Unrestricted(mesh, basis, -2.0 * s.M())),
    d_alpha_(mesh, basis, s.Alpha()), d_malpha_(mesh, basis, -s.Alpha()),
    mass_(MassDiagonal(mesh, basis.degree))
{
}

ZState MspDiscretization::Close(std::vector<double> u, std::vector<double> eta,
                                std::vector<double> v, std::vector<double> zeta) const
{
  const std::size_t n = BlockSize();
  if (u.size() != n || eta.size() != n || v.size() != n || zeta.size() != n)
  {
    throw std::invalid_argument("Block size does not match the mesh");
  }
  ZState z;
  z[Z_P] = u;
  d_zeta_.Apply(zeta, 0.5, z[Z_P]);
  z[Z_Q] = eta;
  d_v_.Apply(v, 0.5, z[Z_Q]);
  z[Z_U] = std::move(u);
  z[Z_ETA] = std::move(eta);
  z[Z_V] = std::move(v);
  z[Z_ZETA] = std::move(zeta);
  return z;
}

namespace
{

double MaxAbs(const std::vector<double> &a)
{
  double m = 0.0;
  for (double x : a)
  {
    m = std::max(m, std::abs(x));
  }
  return m;
}

}  // namespace

double MspDiscretization::ClosureDefect(const ZState &z) const
{
  for (const auto &b : z.blocks)
  {
    if (b.size() != BlockSize())
    {
      throw std::invalid_argument("Block size does not match the mesh");
    }
  }
  const ZState c = Close(z[Z_U], z[Z_ETA], z[Z_V], z[Z_ZETA]);
  double defect = 0.0;
  for (int b : {Z_P, Z_Q})
  {
    double diff = 0.0;
    for (std::size_t i = 0; i < BlockSize(); i++)
    {
      diff = std::max(diff, std::abs(z[b][i] - c[b][i]));
    }
    const double scale = std::max(MaxAbs(c[b]) + MaxAbs(z[b]), 1e-300);
    defect = std::max(defect, diff / scale);
  }
  return defect;
}

ZState MspDiscretization::Drift(const ZState &z) const
{
  const std::size_t n = BlockSize();
  ZState d;
  for (auto &b : d.blocks)
  {
    b.assign(n, 0.0);
  }
  d_malpha_.Apply(z[Z_ETA], -1.0, d[Z_U]);
  d_alpha_.Apply(z[Z_U], -1.0, d[Z_ETA]);
  d[Z_V] = z[Z_U];
  d[Z_ZETA] = z[Z_ETA];
  d_eta_.Apply(z[Z_ETA], -0.5, d[Z_P]);
  d_u_.Apply(z[Z_U], -0.5, d[Z_Q]);
  return d;
}

TracePair MspDiscretization::Traces(const ZState &z, int j) const
{
  const int np = basis_.NumModes();
  const int jr = mesh_.RightNeighbor(j);
  TracePair t;
  for (int b = 0; b < 6; b++)
  {
    double left = 0.0, right = 0.0;
    for (int l = 0; l < np; l++)
    {
      left += z[b][std::size_t(j) * np + l];
      right += ((l % 2 == 0) ? 1.0 : -1.0) * z[b][std::size_t(jr) * np + l];
    }
    t.minus(b) = left;
    t.plus(b) = right;
  }
  return t;
}

namespace
{

// Cell integral of M X . Y = -X_P Y_v - X_Q Y_zeta + X_v Y_P + X_zeta Y_Q.
double CellOmega(const ZState &x, const ZState &y, const std::vector<double> &mass,
                 std::size_t begin, std::size_t end)
{
  double s = 0.0;
  for (std::size_t i = begin; i < end; i++)
  {
    s += mass[i] * (-x[Z_P][i] * y[Z_V][i] - x[Z_Q][i] * y[Z_ZETA][i] +
                    x[Z_V][i] * y[Z_P][i] + x[Z_ZETA][i] * y[Z_Q][i]);
  }
  return s;
}

}  // namespace

std::vector<double> MspDiscretization::ConservationResidual(const ZState &u,
                                                            const ZState &v) const
{
  constexpr double closure_tol = 1e-10;
  if (ClosureDefect(u) > closure_tol || ClosureDefect(v) > closure_tol)
  {
    throw std::invalid_argument("Conservation residual needs closed states");
  }
  const ZState du = Drift(u), dv = Drift(v);
  const int cells = mesh_.NumCells();
  const std::size_t np = basis_.NumModes();
  std::vector<double> flux(cells);
  for (int j = 0; j < cells; j++)
  {
    flux[j] = FluxForm(Traces(u, j), Traces(v, j), s_);
  }
  std::vector<double> r(cells);
  for (int j = 0; j < cells; j++)
  {
    const std::size_t b = j * np, e = b + np;
    const double rate = CellOmega(du, v, mass_, b, e) + CellOmega(u, dv, mass_, b, e);
    r[j] = rate - (flux[j] - flux[mesh_.LeftNeighbor(j)]);
  }
  return r;
}

std::vector<double> MspDiscretization::ResidualScale(const ZState &u, const ZState &v) const
{
  const ZState du = Drift(u), dv = Drift(v);
  const int cells = mesh_.NumCells();
  const std::size_t np = basis_.NumModes();
  std::vector<double> flux(cells);
  for (int j = 0; j < cells; j++)
  {
    flux[j] = std::abs(FluxForm(Traces(u, j), Traces(v, j), s_));
  }
  std::vector<double> scale(cells);
  for (int j = 0; j < cells; j++)
  {
    const std::size_t b = j * np, e = b + np;
    scale[j] = std::abs(CellOmega(du, v, mass_, b, e)) +
               std::abs(CellOmega(u, dv, mass_, b, e)) + flux[j] +
               flux[mesh_.LeftNeighbor(j)];
  }
  return scale;
}

}  // namespace smaxdg
