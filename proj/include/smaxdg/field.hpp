// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_FIELD_HPP
#define SMAXDG_FIELD_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "smaxdg/mesh.hpp"

namespace smaxdg
{

using Function1D = std::function<double(double)>;
using Function2D = std::function<double(double, double)>;

//
// Modal coefficients of one scalar DG field on a 1D mesh. Layout is cell-major, mode
// minor: index (j, l) -> j * (k + 1) + l.
//
struct FieldCoeffs1D
{
  int degree = 0;
  int cells = 0;
  std::vector<double> values;

  FieldCoeffs1D() = default;
  FieldCoeffs1D(int k, int n) : degree(k), cells(n), values(std::size_t(n) * (k + 1), 0.0) {}

  int NumModes() const { return degree + 1; }
  std::size_t Size() const { return values.size(); }
  double &operator()(int j, int l) { return values[std::size_t(j) * (degree + 1) + l]; }
  double operator()(int j, int l) const { return values[std::size_t(j) * (degree + 1) + l]; }
};

//
// Modal coefficients on a 2D tensor mesh. Cell c = i + Nx * j, local mode
// l = a + (k + 1) * b for x-mode a and y-mode b; index c * (k + 1)^2 + l.
//
struct FieldCoeffs2D
{
  int degree = 0;
  int nx = 0, ny = 0;
  std::vector<double> values;

  FieldCoeffs2D() = default;
  FieldCoeffs2D(int k, int nx_, int ny_)
    : degree(k), nx(nx_), ny(ny_),
      values(std::size_t(nx_) * ny_ * (k + 1) * (k + 1), 0.0)
  {
  }

  int ModesPerCell() const { return (degree + 1) * (degree + 1); }
  std::size_t Size() const { return values.size(); }
  std::size_t Index(int i, int j, int a, int b) const
  {
    const int np = degree + 1;
    return (std::size_t(i) + std::size_t(nx) * j) * np * np + a + np * b;
  }
  double &operator()(int i, int j, int a, int b) { return values[Index(i, j, a, b)]; }
  double operator()(int i, int j, int a, int b) const { return values[Index(i, j, a, b)]; }
};

// Point evaluation; x is located in the mesh (left cell wins at interfaces except the
// domain's left end).
double EvaluateField(const Mesh1D &mesh, const FieldCoeffs1D &f, double x);
double EvaluateField(const Mesh2D &mesh, const FieldCoeffs2D &f, double x, double y);

// Value of cell j's polynomial at reference coordinate xi.
double EvaluateInCell(const FieldCoeffs1D &f, int j, double xi);

// Mass-weighted inner products (exact L2 inner products of the DG functions).
double MassInnerProduct(const Mesh1D &mesh, int k, std::span<const double> a,
                        std::span<const double> b);
double MassInnerProduct(const Mesh2D &mesh, int k, std::span<const double> a,
                        std::span<const double> b);

// Diagonal mass entries h_j / (2l + 1) for every dof (2D: product of both directions).
std::vector<double> MassDiagonal(const Mesh1D &mesh, int k);
std::vector<double> MassDiagonal(const Mesh2D &mesh, int k);

// ||f_h - g|| in L2 by Gauss quadrature with nq points per cell (per direction).
double L2Error(const Mesh1D &mesh, const FieldCoeffs1D &f, const Function1D &g, int nq);
double L2Error(const Mesh2D &mesh, const FieldCoeffs2D &f, const Function2D &g, int nq);

}  // namespace smaxdg

#endif  // SMAXDG_FIELD_HPP
