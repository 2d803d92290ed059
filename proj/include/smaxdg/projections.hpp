// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_PROJECTIONS_HPP
#define SMAXDG_PROJECTIONS_HPP

#include <span>
#include <vector>

#include "smaxdg/field.hpp"
#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"

namespace smaxdg
{

//
// Projection onto V_h along one direction: cell-local L2, or the generalized Radau
// projection that keeps the k lowest moments and matches g at every interface through the
// flux {v} + alpha [v] = (1/2 + alpha) v^+ + (1/2 - alpha) v^-.
//
struct ProjectionSpec
{
  enum class Kind
  {
    L2,
    RADAU
  };

  Kind kind = Kind::L2;
  double alpha = 0.0;

  static ProjectionSpec L2() { return {Kind::L2, 0.0}; }
  static ProjectionSpec Radau(double alpha);
};

// Default number of Gauss points per cell used to sample non-polynomial data.
inline int DefaultProjectionPoints(int k)
{
  return k + 4;
}

//
// Projection acting on sampled data: values at the Gauss points of every cell plus values
// at the right interface x_{j+1/2} of every cell. The periodic Radau system is a cyclic
// bidiagonal system in the top coefficient of each cell.
//
class Projector1D
{
public:
  Projector1D(const Mesh1D &mesh, const BasisSpec &basis, const ProjectionSpec &spec,
              int quad_points);

  int NumCells() const { return static_cast<int>(widths_.size()); }
  int QuadPoints() const { return rule_.Size(); }
  const QuadratureRule &Rule() const { return rule_; }

  // Physical sample locations (cell-major) and interface locations x_{j+1/2}.
  std::vector<double> SamplePoints(const Mesh1D &mesh) const;
  std::vector<double> InterfacePoints(const Mesh1D &mesh) const;

  // samples: NumCells * QuadPoints values; interface: NumCells values (ignored for L2);
  // out: NumCells * (k + 1) coefficients.
  void Apply(std::span<const double> samples, std::span<const double> interface,
             std::span<double> out) const;

private:
  int degree_;
  ProjectionSpec spec_;
  QuadratureRule rule_;
  std::vector<double> widths_;
  std::vector<double> weighted_basis_;  // w_q P_l(xi_q) (2l + 1) / 2, q-major
};

FieldCoeffs1D Project1D(const Function1D &g, const Mesh1D &mesh, const BasisSpec &basis,
                        const ProjectionSpec &spec, int quad_points = -1);

// Tensor-product projection P_x (x) P_y: the y projection is applied first along every
// sampled x line, then the x projection to the resulting coefficient functions.
FieldCoeffs2D Project2D(const Function2D &g, const Mesh2D &mesh, const BasisSpec &basis,
                        const ProjectionSpec &spec_x, const ProjectionSpec &spec_y,
                        int quad_points = -1);

// Same operator with the x projection applied first; used to check commutativity.
FieldCoeffs2D Project2DXFirst(const Function2D &g, const Mesh2D &mesh,
                              const BasisSpec &basis, const ProjectionSpec &spec_x,
                              const ProjectionSpec &spec_y, int quad_points = -1);

}  // namespace smaxdg

#endif  // SMAXDG_PROJECTIONS_HPP
