// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/dg2d.hpp"

#include <algorithm>
#include <stdexcept>

namespace smaxdg
{

DirectionalOp2D::DirectionalOp2D(const Mesh2D &mesh, const BasisSpec &basis, Direction dir,
                                 double alpha)
  : dir_(dir), other_(dir == Direction::X ? mesh.Ny() : mesh.Nx()),
    size_(std::size_t(mesh.NumCells()) * basis.NumModes() * basis.NumModes()),
    op_(dir == Direction::X ? mesh.X() : mesh.Y(), basis, alpha)
{
}

void DirectionalOp2D::Apply(std::span<const double> f, double scale,
                            std::span<double> out) const
{
  if (dir_ == Direction::X)
  {
    op_.ApplyX(f, other_, scale, out);
  }
  else
  {
    op_.ApplyY(f, other_, scale, out);
  }
}

Maxwell2D::Maxwell2D(const Mesh2D &mesh, const BasisSpec &basis, double alpha1,
                     double alpha2, double lambda1, double lambda2,
                     const SpectralNoiseModel &noise)
  : mesh_(mesh), basis_(basis), alpha1_(alpha1), alpha2_(alpha2), lambda1_(lambda1),
    lambda2_(lambda2),
    n_(std::size_t(mesh.NumCells()) * basis.NumModes() * basis.NumModes()),
    dx_plus_(mesh, basis, Direction::X, alpha1), dx_minus_(mesh, basis, Direction::X, -alpha1),
    dy_plus_(mesh, basis, Direction::Y, alpha2), dy_minus_(mesh, basis, Direction::Y, -alpha2),
    load_(noise, mesh, basis, 1.0), mass_(MassDiagonal(mesh, basis.degree))
{
  mass_q_ = mass_;
  mass_q_.insert(mass_q_.end(), mass_.begin(), mass_.end());
}

void Maxwell2D::AddA(std::span<const double> q, double s, std::span<double> p_out) const
{
  if (q.size() != 2 * n_)
  {
    throw std::invalid_argument("State size does not match the system");
  }
  dy_minus_.Apply(q.subspan(0, n_), -s, p_out);
  dx_plus_.Apply(q.subspan(n_, n_), s, p_out);
}

void Maxwell2D::AddB(std::span<const double> p, double s, std::span<double> q_out) const
{
  if (q_out.size() != 2 * n_)
  {
    throw std::invalid_argument("State size does not match the system");
  }
  dy_plus_.Apply(p, -s, q_out.subspan(0, n_));
  dx_minus_.Apply(p, s, q_out.subspan(n_, n_));
}

void Maxwell2D::NoiseLoads(std::span<const double> w, std::span<double> p_out,
                           std::span<double> q_out) const
{
  if (p_out.size() != n_ || q_out.size() != 2 * n_)
  {
    throw std::invalid_argument("Noise load output size mismatch");
  }
  std::fill(p_out.begin(), p_out.end(), 0.0);
  load_.Apply(w, 1.0, p_out);
  for (std::size_t i = 0; i < n_; i++)
  {
    const double g = p_out[i];
    p_out[i] = -lambda1_ * g;
    q_out[i] = lambda2_ * g;
    q_out[n_ + i] = lambda2_ * g;
  }
}

double DiscreteEnergy2D(const Mesh2D &mesh, const FieldCoeffs2D &e, const FieldCoeffs2D &s,
                        const FieldCoeffs2D &t)
{
  for (const auto *f : {&e, &s, &t})
  {
    if (f->degree != e.degree || f->nx != mesh.Nx() || f->ny != mesh.Ny())
    {
      throw std::invalid_argument("Field layouts do not match");
    }
  }
  const int k = e.degree;
  return MassInnerProduct(mesh, k, e.values, e.values) +
         MassInnerProduct(mesh, k, s.values, s.values) +
         MassInnerProduct(mesh, k, t.values, t.values);
}

double ComputeK2D(const SpectralNoiseModel &noise, const Mesh2D &mesh, const BasisSpec &basis)
{
  return NoiseLoad(noise, mesh, basis, 1.0).ProjectedTrace();
}

}  // namespace smaxdg
