// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_MESH_HPP
#define SMAXDG_MESH_HPP

#include <cstddef>
#include <vector>

namespace smaxdg
{

//
// Periodic partition of an interval into cells I_j = [x_{j-1/2}, x_{j+1/2}]. Only
// periodic connectivity is supported: the left neighbor of cell 0 is cell N - 1.
//
class Mesh1D
{
public:
  // Boundaries must be strictly increasing, at least two entries.
  explicit Mesh1D(std::vector<double> boundaries, bool periodic = true);

  int NumCells() const { return static_cast<int>(boundaries_.size()) - 1; }
  double Left() const { return boundaries_.front(); }
  double Right() const { return boundaries_.back(); }
  double Length() const { return Right() - Left(); }

  // x_{j-1/2} and x_{j+1/2}.
  double CellLeft(int j) const { return boundaries_[j]; }
  double CellRight(int j) const { return boundaries_[j + 1]; }
  double Center(int j) const { return 0.5 * (boundaries_[j] + boundaries_[j + 1]); }
  double Width(int j) const { return widths_[j]; }
  const std::vector<double> &Widths() const { return widths_; }
  const std::vector<double> &Boundaries() const { return boundaries_; }
  double MaxWidth() const { return max_width_; }
  double MinWidth() const { return min_width_; }

  int LeftNeighbor(int j) const { return (j == 0) ? NumCells() - 1 : j - 1; }
  int RightNeighbor(int j) const { return (j == NumCells() - 1) ? 0 : j + 1; }

  // Maps reference coordinate xi in [-1, 1] to physical x in cell j.
  double MapToPhysical(int j, double xi) const { return Center(j) + 0.5 * Width(j) * xi; }

  // Cell containing x (x clamped into the domain, right boundary belongs to the last cell).
  int Locate(double x) const;

private:
  std::vector<double> boundaries_;
  std::vector<double> widths_;
  double max_width_ = 0.0, min_width_ = 0.0;
};

Mesh1D UniformMesh1D(double a, double b, int n, bool periodic = true);

//
// Cartesian tensor mesh with cells I_i x J_j. Cells are enumerated with the x-index
// fastest: c = i + Nx * j.
//
class Mesh2D
{
public:
  Mesh2D(Mesh1D mx, Mesh1D my);

  const Mesh1D &X() const { return mx_; }
  const Mesh1D &Y() const { return my_; }
  int Nx() const { return mx_.NumCells(); }
  int Ny() const { return my_.NumCells(); }
  int NumCells() const { return Nx() * Ny(); }
  int CellIndex(int i, int j) const { return i + Nx() * j; }
  double Area() const { return mx_.Length() * my_.Length(); }
  double MaxWidth() const;

private:
  Mesh1D mx_, my_;
};

Mesh2D TensorMesh2D(const Mesh1D &mx, const Mesh1D &my);

}  // namespace smaxdg

#endif  // SMAXDG_MESH_HPP
