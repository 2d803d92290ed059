// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/drift_system.hpp"

#include <stdexcept>

namespace smaxdg
{

double DriftSystem::Energy(std::span<const double> p, std::span<const double> q) const
{
  const auto &pw = PWeights();
  const auto &qw = QWeights();
  if (p.size() != pw.size() || q.size() != qw.size())
  {
    throw std::invalid_argument("State size does not match the system");
  }
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); i++)
  {
    e += pw[i] * p[i] * p[i];
  }
  for (std::size_t i = 0; i < q.size(); i++)
  {
    e += qw[i] * q[i] * q[i];
  }
  return e;
}

DenseDriftSystem::DenseDriftSystem(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd l,
                                   Eigen::MatrixXd n)
  : a_(std::move(a)), b_(std::move(b)), l_(std::move(l)), n_(std::move(n))
{
  if (a_.cols() != b_.rows() || b_.cols() != a_.rows() || l_.rows() != a_.rows() ||
      n_.rows() != b_.rows() || l_.cols() != n_.cols())
  {
    throw std::invalid_argument("Inconsistent drift system dimensions");
  }
  pw_.assign(a_.rows(), 1.0);
  qw_.assign(b_.rows(), 1.0);
}

namespace
{

using ConstMap = Eigen::Map<const Eigen::VectorXd>;
using Map = Eigen::Map<Eigen::VectorXd>;

}  // namespace

void DenseDriftSystem::AddA(std::span<const double> q, double s, std::span<double> p_out) const
{
  Map(p_out.data(), p_out.size()).noalias() += s * (a_ * ConstMap(q.data(), q.size()));
}

void DenseDriftSystem::AddB(std::span<const double> p, double s, std::span<double> q_out) const
{
  Map(q_out.data(), q_out.size()).noalias() += s * (b_ * ConstMap(p.data(), p.size()));
}

void DenseDriftSystem::NoiseLoads(std::span<const double> w, std::span<double> p_out,
                                  std::span<double> q_out) const
{
  const ConstMap wv(w.data(), w.size());
  Map(p_out.data(), p_out.size()).noalias() = l_ * wv;
  Map(q_out.data(), q_out.size()).noalias() = n_ * wv;
}

}  // namespace smaxdg
