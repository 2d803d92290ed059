// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/dg1d.hpp"

#include <algorithm>
#include <stdexcept>

namespace smaxdg
{

DerivativeOp1D AssembleDerivativeOp(const Mesh1D &mesh, const BasisSpec &basis, double alpha)
{
  return DerivativeOp1D(mesh, basis, alpha);
}

Maxwell1D::Maxwell1D(const Mesh1D &mesh, const BasisSpec &basis, double alpha,
                     double lambda1, double lambda2, const SpectralNoiseModel &noise)
  : mesh_(mesh), basis_(basis), alpha_(alpha), lambda1_(lambda1), lambda2_(lambda2),
    dplus_(mesh, basis, alpha), dminus_(mesh, basis, -alpha),
    load_(noise, mesh, basis, 1.0), mass_(MassDiagonal(mesh, basis.degree))
{
}

void Maxwell1D::AddA(std::span<const double> q, double s, std::span<double> p_out) const
{
  dplus_.Apply(q, -s, p_out);
}

void Maxwell1D::AddB(std::span<const double> p, double s, std::span<double> q_out) const
{
  dminus_.Apply(p, -s, q_out);
}

void Maxwell1D::NoiseLoads(std::span<const double> w, std::span<double> p_out,
                           std::span<double> q_out) const
{
  if (p_out.size() != PSize() || q_out.size() != QSize())
  {
    throw std::invalid_argument("Noise load output size mismatch");
  }
  std::fill(q_out.begin(), q_out.end(), 0.0);
  load_.Apply(w, 1.0, q_out);
  for (std::size_t i = 0; i < q_out.size(); i++)
  {
    p_out[i] = -lambda1_ * q_out[i];
    q_out[i] *= lambda2_;
  }
}

double DiscreteEnergy1D(const Mesh1D &mesh, const FieldCoeffs1D &u, const FieldCoeffs1D &eta)
{
  if (u.degree != eta.degree || u.cells != mesh.NumCells() || eta.cells != mesh.NumCells())
  {
    throw std::invalid_argument("Field layouts do not match");
  }
  return MassInnerProduct(mesh, u.degree, u.values, u.values) +
         MassInnerProduct(mesh, eta.degree, eta.values, eta.values);
}

double ComputeK1D(const SpectralNoiseModel &noise, const Mesh1D &mesh, const BasisSpec &basis)
{
  return NoiseLoad(noise, mesh, basis, 1.0).ProjectedTrace();
}

}  // namespace smaxdg
