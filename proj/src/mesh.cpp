// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smaxdg
{

Mesh1D::Mesh1D(std::vector<double> boundaries, bool periodic)
  : boundaries_(std::move(boundaries))
{
  if (!periodic)
  {
    throw std::invalid_argument("Only periodic meshes are supported");
  }
  if (boundaries_.size() < 2)
  {
    throw std::invalid_argument("Mesh needs at least one cell");
  }
  widths_.resize(boundaries_.size() - 1);
  for (std::size_t j = 0; j + 1 < boundaries_.size(); j++)
  {
    const double h = boundaries_[j + 1] - boundaries_[j];
    if (!(h > 0.0) || !std::isfinite(h))
    {
      throw std::invalid_argument("Mesh boundaries must be strictly increasing");
    }
    widths_[j] = h;
  }
  max_width_ = *std::max_element(widths_.begin(), widths_.end());
  min_width_ = *std::min_element(widths_.begin(), widths_.end());
}

int Mesh1D::Locate(double x) const
{
  if (x <= Left())
  {
    return 0;
  }
  if (x >= Right())
  {
    return NumCells() - 1;
  }
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
  return std::clamp(static_cast<int>(it - boundaries_.begin()) - 1, 0, NumCells() - 1);
}

Mesh1D UniformMesh1D(double a, double b, int n, bool periodic)
{
  if (!(a < b))
  {
    throw std::invalid_argument("Degenerate interval");
  }
  if (n < 1)
  {
    throw std::invalid_argument("Number of cells must be positive");
  }
  std::vector<double> x(n + 1);
  const double h = (b - a) / n;
  for (int j = 0; j <= n; j++)
  {
    x[j] = a + j * h;
  }
  x[n] = b;
  return Mesh1D(std::move(x), periodic);
}

Mesh2D::Mesh2D(Mesh1D mx, Mesh1D my) : mx_(std::move(mx)), my_(std::move(my)) {}

double Mesh2D::MaxWidth() const
{
  return std::max(mx_.MaxWidth(), my_.MaxWidth());
}

Mesh2D TensorMesh2D(const Mesh1D &mx, const Mesh1D &my)
{
  return Mesh2D(mx, my);
}

}  // namespace smaxdg
