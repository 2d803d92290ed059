// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_POLYBASIS_HPP
#define SMAXDG_POLYBASIS_HPP

#include <vector>

namespace smaxdg
{

//
// Modal Legendre basis on mesh cells. Basis functions are the unnormalized Legendre
// polynomials P_l on the reference interval [-1, 1] (P_l(1) = 1), mapped affinely to
// each cell, so the cell mass matrix is diagonal with entries h / (2l + 1).
//
struct BasisSpec
{
  int degree = 1;

  BasisSpec() = default;
  explicit BasisSpec(int k);

  int NumModes() const { return degree + 1; }
};

// P_l(xi) by the three-term recurrence.
double LegendreP(int l, double xi);

// dP_l/dxi.
double LegendreDerivative(int l, double xi);

// Evaluates P_0..P_k at xi into out (size k + 1).
void LegendreAll(int k, double xi, double *out);

struct QuadratureRule
{
  std::vector<double> nodes;
  std::vector<double> weights;

  int Size() const { return static_cast<int>(nodes.size()); }
};

// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
QuadratureRule GaussRule(int n);

// Inverse diagonal mass entries mu^l = (2l + 1) / h for one cell of width h.
struct MassData
{
  std::vector<double> mass;      // h / (2l + 1)
  std::vector<double> inv_mass;  // mu^l
};

MassData ComputeMassData(double h, int k);

inline double InverseMass(double h, int l)
{
  return (2.0 * l + 1.0) / h;
}

}  // namespace smaxdg

#endif  // SMAXDG_POLYBASIS_HPP
