// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_DG1D_HPP
#define SMAXDG_DG1D_HPP

#include "smaxdg/dgops.hpp"
#include "smaxdg/drift_system.hpp"
#include "smaxdg/field.hpp"
#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"
#include "smaxdg/qwiener.hpp"

namespace smaxdg
{

// D(alpha) with alpha != 0, |alpha| <= 1.
DerivativeOp1D AssembleDerivativeOp(const Mesh1D &mesh, const BasisSpec &basis, double alpha);

//
// 1D DG semi-discretization of
//
//   d eta = -u_x dt - lambda1 dW,   du = -eta_x dt + lambda2 dW
//
// with fluxes u^ = {u} + alpha [u] in the eta equation and eta^ = {eta} - alpha [eta] in
// the u equation. p holds the eta coefficients and q the u coefficients:
// A = -D(alpha), B = -D(-alpha), L = -lambda1 G, N = lambda2 G.
//
class Maxwell1D : public DriftSystem
{
public:
  Maxwell1D(const Mesh1D &mesh, const BasisSpec &basis, double alpha, double lambda1,
            double lambda2, const SpectralNoiseModel &noise);

  std::size_t PSize() const override { return dplus_.NumDofs(); }
  std::size_t QSize() const override { return dplus_.NumDofs(); }
  int NumModes() const override { return load_.NumModes(); }

  void AddA(std::span<const double> q, double s, std::span<double> p_out) const override;
  void AddB(std::span<const double> p, double s, std::span<double> q_out) const override;
  void NoiseLoads(std::span<const double> w, std::span<double> p_out,
                  std::span<double> q_out) const override;

  const std::vector<double> &PWeights() const override { return mass_; }
  const std::vector<double> &QWeights() const override { return mass_; }

  const Mesh1D &Mesh() const { return mesh_; }
  const BasisSpec &Basis() const { return basis_; }
  double Alpha() const { return alpha_; }
  double Lambda1() const { return lambda1_; }
  double Lambda2() const { return lambda2_; }
  const DerivativeOp1D &DPlus() const { return dplus_; }
  const DerivativeOp1D &DMinus() const { return dminus_; }
  const NoiseLoad &Load() const { return load_; }

private:
  Mesh1D mesh_;
  BasisSpec basis_;
  double alpha_, lambda1_, lambda2_;
  DerivativeOp1D dplus_, dminus_;
  NoiseLoad load_;
  std::vector<double> mass_;
};

// ||u_h||^2 + ||eta_h||^2.
double DiscreteEnergy1D(const Mesh1D &mesh, const FieldCoeffs1D &u, const FieldCoeffs1D &eta);

// K = sum_{j,l} mu_j^l sum_m gamma_m (int_{I_j} e_m phi_j^l dx)^2.
double ComputeK1D(const SpectralNoiseModel &noise, const Mesh1D &mesh, const BasisSpec &basis);

}  // namespace smaxdg

#endif  // SMAXDG_DG1D_HPP
