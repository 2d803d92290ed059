// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_MSP1D_HPP
#define SMAXDG_MSP1D_HPP

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "smaxdg/dgops.hpp"
#include "smaxdg/field.hpp"
#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"

namespace smaxdg
{

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

//
// Multi-symplectic form M dz + K z_x dt = grad S1 dt + grad S2 dW for
// z = (u, eta, v, zeta, P, Q) with v_t = u, zeta_t = eta, P = u + zeta_x / 2,
// Q = eta + v_x / 2. The interface flux is K^z = K {z} + A [z] with the symmetric
// matrix A(m, n), n - m = alpha.
//
class MspStructure
{
public:
  MspStructure(double m, double n);

  // (m, n) = (-alpha / 2, alpha / 2).
  static MspStructure Symmetric(double alpha);

  double M() const { return m_; }
  double N() const { return n_; }
  double Alpha() const { return n_ - m_; }

  const Mat6 &MMatrix() const { return mm_; }
  const Mat6 &KMatrix() const { return kk_; }
  const Mat6 &AMatrix() const { return aa_; }

  // A = K C with C = diag(-2m, -2n, 2n, 2m, 0, 0), the jump weights of the hat values.
  Mat6 FluxWeights() const;

  // Replaces K (e.g. by zero) for identity checks; A is rebuilt as K C.
  MspStructure WithK(const Mat6 &k) const;

private:
  double m_, n_;
  Mat6 mm_, kk_, aa_;
};

// Left and right traces of a 6-vector at one interface.
struct TracePair
{
  Vec6 minus, plus;
};

// F_K(U, V) = {K U . V} - K^U . {V} + K^V . {U}.
double FluxForm(const TracePair &u, const TracePair &v, const MspStructure &s);

// Differences between the left-trace and right-trace expressions of the interface identity
// and F_K; both vanish for antisymmetric K and symmetric A.
std::pair<double, double> InterfaceIdentityGap(const TracePair &u, const TracePair &v,
                                    const MspStructure &s);

enum ZBlock
{
  Z_U = 0,
  Z_ETA,
  Z_V,
  Z_ZETA,
  Z_P,
  Z_Q
};

struct ZState
{
  std::array<std::vector<double>, 6> blocks;

  std::vector<double> &operator[](int b) { return blocks[b]; }
  const std::vector<double> &operator[](int b) const { return blocks[b]; }
};

//
// DG discretization of the z-system on a periodic mesh. With D(beta) the flux derivative
// of DerivativeOp1D:
//
//   P = u + D(2m) zeta / 2,       Q = eta + D(2n) v / 2,
//   dP/dt = -D(-2n) eta / 2,      dQ/dt = -D(-2m) u / 2,     dv/dt = u,  dzeta/dt = eta,
//
// and u, eta follow the 1D Maxwell drift with alpha = n - m. Noise terms are omitted.
//
class MspDiscretization
{
public:
  MspDiscretization(const Mesh1D &mesh, const BasisSpec &basis, const MspStructure &s);

  std::size_t BlockSize() const { return mesh_.NumCells() * std::size_t(basis_.NumModes()); }

  // Fills P and Q from the constraint equations.
  ZState Close(std::vector<double> u, std::vector<double> eta, std::vector<double> v,
               std::vector<double> zeta) const;

  // Largest constraint violation relative to the block magnitudes.
  double ClosureDefect(const ZState &z) const;

  // Time derivative of every block.
  ZState Drift(const ZState &z) const;

  // R_j = d/dt int_{I_j} M U . V dx - (F_K(U, V)_{j+1/2} - F_K(U, V)_{j-1/2}).
  std::vector<double> ConservationResidual(const ZState &u, const ZState &v) const;

  // Per-cell magnitude of the terms entering R_j; used to make residuals relative.
  std::vector<double> ResidualScale(const ZState &u, const ZState &v) const;

  // Traces of all six blocks at interface j + 1/2 (cell j right end, cell j + 1 left end).
  TracePair Traces(const ZState &z, int j) const;

  const MspStructure &Structure() const { return s_; }

private:
  Mesh1D mesh_;
  BasisSpec basis_;
  MspStructure s_;
  DerivativeOp1D d_zeta_, d_v_, d_eta_, d_u_, d_alpha_, d_malpha_;
  std::vector<double> mass_;
};

}  // namespace smaxdg

#endif  // SMAXDG_MSP1D_HPP
