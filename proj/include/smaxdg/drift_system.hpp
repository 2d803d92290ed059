// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_DRIFT_SYSTEM_HPP
#define SMAXDG_DRIFT_SYSTEM_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace smaxdg
{

//
// Linear partitioned system dp = A q dt + L dB, dq = B p dt + N dB with constant operators.
// Implementations are immutable after construction; all methods are const and safe to
// call concurrently from different sample paths.
//
class DriftSystem
{
public:
  virtual ~DriftSystem() = default;

  virtual std::size_t PSize() const = 0;
  virtual std::size_t QSize() const = 0;
  virtual int NumModes() const = 0;

  // p_out += s * A q and q_out += s * B p.
  virtual void AddA(std::span<const double> q, double s, std::span<double> p_out) const = 0;
  virtual void AddB(std::span<const double> p, double s, std::span<double> q_out) const = 0;

  // p_out = L w and q_out = N w (overwrite).
  virtual void NoiseLoads(std::span<const double> w, std::span<double> p_out,
                          std::span<double> q_out) const = 0;

  // Diagonal weights of the energy ||p||^2 + ||q||^2 (the DG mass matrices).
  virtual const std::vector<double> &PWeights() const = 0;
  virtual const std::vector<double> &QWeights() const = 0;

  double Energy(std::span<const double> p, std::span<const double> q) const;
};

//
// Explicit matrices; for small test systems.
//
class DenseDriftSystem : public DriftSystem
{
public:
  DenseDriftSystem(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd l,
                   Eigen::MatrixXd n);

  std::size_t PSize() const override { return a_.rows(); }
  std::size_t QSize() const override { return b_.rows(); }
  int NumModes() const override { return static_cast<int>(l_.cols()); }

  void AddA(std::span<const double> q, double s, std::span<double> p_out) const override;
  void AddB(std::span<const double> p, double s, std::span<double> q_out) const override;
  void NoiseLoads(std::span<const double> w, std::span<double> p_out,
                  std::span<double> q_out) const override;

  const std::vector<double> &PWeights() const override { return pw_; }
  const std::vector<double> &QWeights() const override { return qw_; }

  const Eigen::MatrixXd &A() const { return a_; }
  const Eigen::MatrixXd &B() const { return b_; }
  const Eigen::MatrixXd &L() const { return l_; }
  const Eigen::MatrixXd &N() const { return n_; }

private:
  Eigen::MatrixXd a_, b_, l_, n_;
  std::vector<double> pw_, qw_;
};

}  // namespace smaxdg

#endif  // SMAXDG_DRIFT_SYSTEM_HPP
