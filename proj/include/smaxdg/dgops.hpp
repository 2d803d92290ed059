// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_DGOPS_HPP
#define SMAXDG_DGOPS_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"

namespace smaxdg
{

//
// Mass-inverted DG derivative with the flux {f} + beta [f] on a periodic 1D mesh:
//
//   (D f)_{j,m} = -mu_j^m ( int_{I_j} f (phi_j^m)_x dx - f^_{j+1/2} phi_j^m(x_{j+1/2}^-)
//                           + f^_{j-1/2} phi_j^m(x_{j-1/2}^+) ),
//
// so D approximates d/dx. Stored as three (k+1) x (k+1) blocks per cell acting on the
// left neighbor, the cell itself, and the right neighbor. Mass-adjointness:
// <D(beta) a, b>_M = -<a, D(-beta) b>_M.
//
class DerivativeOp1D
{
public:
  // Rejects beta = 0 and |beta| > 1.
  DerivativeOp1D(const Mesh1D &mesh, const BasisSpec &basis, double beta);

  // No restriction on beta; the auxiliary fluxes of the multi-symplectic form use 2m, 2n.
  static DerivativeOp1D Unrestricted(const Mesh1D &mesh, const BasisSpec &basis,
                                     double beta);

  int NumCells() const { return cells_; }
  int Degree() const { return degree_; }
  std::size_t NumDofs() const { return std::size_t(cells_) * (degree_ + 1); }
  double Beta() const { return beta_; }

  // out += scale * D f.
  void Apply(std::span<const double> f, double scale, std::span<double> out) const;

  // Applies D along x (stride 1 over cells, inner layout of the 2D field) or along y.
  // Fields use the 2D layout (i + Nx j) (k+1)^2 + a + (k+1) b; ny == 1 reduces to 1D.
  void ApplyX(std::span<const double> f, int ny, double scale, std::span<double> out) const;
  void ApplyY(std::span<const double> f, int nx, double scale, std::span<double> out) const;

  Eigen::MatrixXd Dense() const;

  // Row-major (k+1) x (k+1) blocks of cell j: rows are test modes m, columns trial modes.
  const double *Lower(int j) const { return &lower_[Offset(j)]; }
  const double *Diag(int j) const { return &diag_[Offset(j)]; }
  const double *Upper(int j) const { return &upper_[Offset(j)]; }

private:
  DerivativeOp1D(const Mesh1D &mesh, const BasisSpec &basis, double beta, bool checked);
  std::size_t Offset(int j) const { return std::size_t(j) * (degree_ + 1) * (degree_ + 1); }

  int cells_;
  int degree_;
  double beta_;
  std::vector<double> lower_, diag_, upper_;
};

}  // namespace smaxdg

#endif  // SMAXDG_DGOPS_HPP
