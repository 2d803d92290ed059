// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/dgops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smaxdg
{

namespace
{

// int_{-1}^{1} P_l P_m' dxi: 2 when l < m and l + m is odd, else 0.
double StiffnessEntry(int m, int l)
{
  return (l < m && (l + m) % 2 == 1) ? 2.0 : 0.0;
}

double Sign(int l)
{
  return (l % 2 == 0) ? 1.0 : -1.0;
}

// Block application y[m] += s * sum_l B[m][l] x[l * stride], with output stride too.
template <int NP>
inline void BlockMult(const double *blk, const double *x, std::size_t stride, double s,
                      double *y, int np_runtime)
{
  const int np = (NP > 0) ? NP : np_runtime;
  for (int m = 0; m < np; m++)
  {
    double acc = 0.0;
    for (int l = 0; l < np; l++)
    {
      acc += blk[m * np + l] * x[l * stride];
    }
    y[m * stride] += s * acc;
  }
}

// Generic sweep over lines: for every line index t, cells c = 0..n-1 sit at
// base(t) + c * cell_stride and modes at + l * mode_stride.
template <int NP>
void Sweep(const DerivativeOp1D &op, const double *f, double *out, double scale, int lines,
           std::size_t line_stride_outer, std::size_t line_stride_inner, int inner_count,
           std::size_t cell_stride, std::size_t mode_stride)
{
  const int n = op.NumCells();
  const int np = op.Degree() + 1;
  for (int t = 0; t < lines; t++)
  {
    for (int u = 0; u < inner_count; u++)
    {
      const std::size_t base = t * line_stride_outer + u * line_stride_inner;
      for (int c = 0; c < n; c++)
      {
        const int cl = (c == 0) ? n - 1 : c - 1;
        const int cr = (c == n - 1) ? 0 : c + 1;
        double *y = out + base + c * cell_stride;
        BlockMult<NP>(op.Lower(c), f + base + cl * cell_stride, mode_stride, scale, y, np);
        BlockMult<NP>(op.Diag(c), f + base + c * cell_stride, mode_stride, scale, y, np);
        BlockMult<NP>(op.Upper(c), f + base + cr * cell_stride, mode_stride, scale, y, np);
      }
    }
  }
}

void Dispatch(const DerivativeOp1D &op, const double *f, double *out, double scale,
              int lines, std::size_t lso, std::size_t lsi, int inner_count,
              std::size_t cell_stride, std::size_t mode_stride)
{
  switch (op.Degree() + 1)
  {
    case 1:
      Sweep<1>(op, f, out, scale, lines, lso, lsi, inner_count, cell_stride, mode_stride);
      break;
    case 2:
      Sweep<2>(op, f, out, scale, lines, lso, lsi, inner_count, cell_stride, mode_stride);
      break;
    case 3:
      Sweep<3>(op, f, out, scale, lines, lso, lsi, inner_count, cell_stride, mode_stride);
      break;
    case 4:
      Sweep<4>(op, f, out, scale, lines, lso, lsi, inner_count, cell_stride, mode_stride);
      break;
    default:
      Sweep<0>(op, f, out, scale, lines, lso, lsi, inner_count, cell_stride, mode_stride);
      break;
  }
}

}  // namespace

DerivativeOp1D::DerivativeOp1D(const Mesh1D &mesh, const BasisSpec &basis, double beta)
  : DerivativeOp1D(mesh, basis, beta, true)
{
}

DerivativeOp1D DerivativeOp1D::Unrestricted(const Mesh1D &mesh, const BasisSpec &basis,
                                            double beta)
{
  return DerivativeOp1D(mesh, basis, beta, false);
}

DerivativeOp1D::DerivativeOp1D(const Mesh1D &mesh, const BasisSpec &basis, double beta,
                               bool checked)
  : cells_(mesh.NumCells()), degree_(basis.degree), beta_(beta)
{
  if (!std::isfinite(beta))
  {
    throw std::invalid_argument("Flux parameter must be finite");
  }
  if (checked && (beta == 0.0 || std::abs(beta) > 1.0))
  {
    throw std::invalid_argument("Flux parameter must be nonzero and in [-1, 1]");
  }
  const int np = degree_ + 1;
  lower_.resize(std::size_t(cells_) * np * np);
  diag_.resize(lower_.size());
  upper_.resize(lower_.size());
  const double wp = 0.5 + beta, wm = 0.5 - beta;
  for (int j = 0; j < cells_; j++)
  {
    const double h = mesh.Width(j);
    for (int m = 0; m < np; m++)
    {
      const double row = -InverseMass(h, m);
      for (int l = 0; l < np; l++)
      {
        const std::size_t e = Offset(j) + std::size_t(m) * np + l;
        diag_[e] = row * (StiffnessEntry(m, l) - wm + wp * Sign(l + m));
        upper_[e] = row * (-wp * Sign(l));
        lower_[e] = row * (wm * Sign(m));
      }
    }
  }
}

void DerivativeOp1D::Apply(std::span<const double> f, double scale, std::span<double> out) const
{
  if (f.size() != NumDofs() || out.size() != NumDofs())
  {
    throw std::invalid_argument("Derivative operator size mismatch");
  }
  const std::size_t np = degree_ + 1;
  Dispatch(*this, f.data(), out.data(), scale, 1, 0, 0, 1, np, 1);
}

void DerivativeOp1D::ApplyX(std::span<const double> f, int ny, double scale,
                            std::span<double> out) const
{
  const std::size_t np = degree_ + 1;
  const std::size_t size = std::size_t(cells_) * ny * np * np;
  if (ny < 1 || f.size() != size || out.size() != size)
  {
    throw std::invalid_argument("Directional operator size mismatch");
  }
  // Lines: y cell j (stride Nx np^2) and y mode b (stride np); cells stride np^2; modes 1.
  Dispatch(*this, f.data(), out.data(), scale, ny, std::size_t(cells_) * np * np, np,
           static_cast<int>(np), np * np, 1);
}

void DerivativeOp1D::ApplyY(std::span<const double> f, int nx, double scale,
                            std::span<double> out) const
{
  const std::size_t np = degree_ + 1;
  const std::size_t size = std::size_t(cells_) * nx * np * np;
  if (nx < 1 || f.size() != size || out.size() != size)
  {
    throw std::invalid_argument("Directional operator size mismatch");
  }
  // Lines: x cell i (stride np^2) and x mode a (stride 1); cells stride Nx np^2; modes np.
  Dispatch(*this, f.data(), out.data(), scale, nx, np * np, 1, static_cast<int>(np),
           std::size_t(nx) * np * np, np);
}

Eigen::MatrixXd DerivativeOp1D::Dense() const
{
  const int n = static_cast<int>(NumDofs());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> e(n, 0.0), col(n);
  for (int c = 0; c < n; c++)
  {
    e[c] = 1.0;
    std::fill(col.begin(), col.end(), 0.0);
    Apply(e, 1.0, col);
    d.col(c) = Eigen::Map<Eigen::VectorXd>(col.data(), n);
    e[c] = 0.0;
  }
  return d;
}

}  // namespace smaxdg
