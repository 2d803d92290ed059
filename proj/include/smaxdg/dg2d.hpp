// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_DG2D_HPP
#define SMAXDG_DG2D_HPP

#include "smaxdg/dgops.hpp"
#include "smaxdg/drift_system.hpp"
#include "smaxdg/field.hpp"
#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"
#include "smaxdg/qwiener.hpp"

namespace smaxdg
{

enum class Direction
{
  X,
  Y
};

//
// Mass-inverted flux derivative along one direction of a tensor mesh, identity along the
// other; applied line by line, never as a full 2D matrix.
//
class DirectionalOp2D
{
public:
  DirectionalOp2D(const Mesh2D &mesh, const BasisSpec &basis, Direction dir, double alpha);

  std::size_t NumDofs() const { return size_; }
  Direction Dir() const { return dir_; }
  const DerivativeOp1D &Op1D() const { return op_; }

  // out += scale * D f.
  void Apply(std::span<const double> f, double scale, std::span<double> out) const;

private:
  Direction dir_;
  int other_;
  std::size_t size_;
  DerivativeOp1D op_;
};

//
// 2D DG semi-discretization of
//
//   dE = (T_x - S_y) dt - lambda1 dW,  dS = -E_y dt + lambda2 dW,  dT = E_x dt + lambda2 dW
//
// with T^ = {T} + alpha1 [T]_x and S^ = {S} - alpha2 [S]_y in the E equation,
// E^ = {E} + alpha2 [E]_y in the S equation and E^ = {E} - alpha1 [E]_x in the T equation.
// p holds E; q holds S followed by T:
// A = [-D_y(-alpha2) | D_x(alpha1)], B = [-D_y(alpha2); D_x(-alpha1)],
// L = -lambda1 G, N = lambda2 [G; G].
//
class Maxwell2D : public DriftSystem
{
public:
  Maxwell2D(const Mesh2D &mesh, const BasisSpec &basis, double alpha1, double alpha2,
            double lambda1, double lambda2, const SpectralNoiseModel &noise);

  std::size_t PSize() const override { return n_; }
  std::size_t QSize() const override { return 2 * n_; }
  int NumModes() const override { return load_.NumModes(); }

  void AddA(std::span<const double> q, double s, std::span<double> p_out) const override;
  void AddB(std::span<const double> p, double s, std::span<double> q_out) const override;
  void NoiseLoads(std::span<const double> w, std::span<double> p_out,
                  std::span<double> q_out) const override;

  const std::vector<double> &PWeights() const override { return mass_; }
  const std::vector<double> &QWeights() const override { return mass_q_; }

  const Mesh2D &Mesh() const { return mesh_; }
  const BasisSpec &Basis() const { return basis_; }
  double Alpha1() const { return alpha1_; }
  double Alpha2() const { return alpha2_; }
  const NoiseLoad &Load() const { return load_; }

private:
  Mesh2D mesh_;
  BasisSpec basis_;
  double alpha1_, alpha2_, lambda1_, lambda2_;
  std::size_t n_;
  DirectionalOp2D dx_plus_, dx_minus_, dy_plus_, dy_minus_;
  NoiseLoad load_;
  std::vector<double> mass_, mass_q_;
};

// ||E_h||^2 + ||S_h||^2 + ||T_h||^2.
double DiscreteEnergy2D(const Mesh2D &mesh, const FieldCoeffs2D &e, const FieldCoeffs2D &s,
                        const FieldCoeffs2D &t);

// K summed over all (k + 1)^2 tensor modes of every cell.
double ComputeK2D(const SpectralNoiseModel &noise, const Mesh2D &mesh, const BasisSpec &basis);

}  // namespace smaxdg

#endif  // SMAXDG_DG2D_HPP
