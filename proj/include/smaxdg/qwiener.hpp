// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_QWIENER_HPP
#define SMAXDG_QWIENER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smaxdg/mesh.hpp"
#include "smaxdg/polybasis.hpp"

namespace smaxdg
{

//
// One-dimensional factor of a noise mode, orthonormal on [a, a + length].
//
struct ModeFunction
{
  enum class Kind
  {
    CONSTANT,  // 1 / sqrt(length)
    SINE       // sqrt(2 / length) sin(index * pi * (x - a) / length)
  };

  Kind kind = Kind::CONSTANT;
  int index = 0;
  double a = 0.0, length = 1.0;

  double operator()(double x) const;
  bool operator==(const ModeFunction &other) const = default;
};

// sqrt(gamma) e(x) or sqrt(gamma) e_x(x) e_y(y) for tensor-product modes in 2D.
struct NoiseMode
{
  double gamma = 0.0;
  ModeFunction fx;
  std::optional<ModeFunction> fy;
};

//
// Truncated Q-Wiener process W = sum_m sqrt(gamma_m) e_m(x) B_m(t) with one independent
// Brownian motion per listed mode.
//
class SpectralNoiseModel
{
public:
  // 1D model on [ax, bx].
  SpectralNoiseModel(double ax, double bx, std::vector<NoiseMode> modes);
  // 2D model on [ax, bx] x [ay, by]; every mode needs a y factor.
  SpectralNoiseModel(double ax, double bx, double ay, double by, std::vector<NoiseMode> modes);

  int Dimension() const { return dim_; }
  int NumModes() const { return static_cast<int>(modes_.size()); }
  const std::vector<NoiseMode> &Modes() const { return modes_; }
  double Trace() const;
  double DomainMeasure() const;
  double XMin() const { return ax_; }
  double XMax() const { return bx_; }
  double YMin() const { return ay_; }
  double YMax() const { return by_; }

  // sqrt(gamma_m) e_m at a point.
  double EvaluateMode(int m, double x, double y = 0.0) const;

  // Sum over modes of sqrt(gamma_m) e_m(x) w_m, e.g. the spatial increment for w = dB.
  double EvaluateField(std::span<const double> w, double x, double y = 0.0) const;

private:
  int dim_;
  double ax_, bx_, ay_ = 0.0, by_ = 0.0;
  std::vector<NoiseMode> modes_;
};

// Standard Brownian motion in space-constant form: gamma_1 = |D|, e_1 = 1 / sqrt(|D|).
SpectralNoiseModel StandardBrownianNoise(double a, double b);
SpectralNoiseModel StandardBrownianNoise(double ax, double bx, double ay, double by);

// Sine family on [a, b] with gamma_m = m^-decay, m = 1..count.
SpectralNoiseModel SineNoise1D(double a, double b, int count, double decay = 3.0);

// Colored noise with sqrt(gamma_mn) e_mn = 2 sqrt(3 / (m^3 + n^3)) sin(3 m pi x / 2)
// sin(2 n pi y) on [0, 2/3] x [0, 1/2] for m, n = 1..m_max; other rectangles use the
// orthonormal sines of that rectangle with gamma_mn = 1 / (m^3 + n^3).
SpectralNoiseModel SineProductNoise(int m_max, double ax = 0.0, double bx = 2.0 / 3.0,
                                    double ay = 0.0, double by = 0.5);

//
// Counter-based random bit generator: output i of stream (seed, path, mode) is a hash of
// the key and the counter, so streams are independent of evaluation order.
//
class CounterRng
{
public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t path, std::uint64_t mode);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Per-mode Brownian increment dB and time average J = (1/tau) int (B_s - B_t) ds over one
// step. J is empty when it was not requested.
struct NoiseIncrement
{
  double tau = 0.0;
  std::vector<double> dB;
  std::vector<double> J;

  bool HasJ() const { return J.size() == dB.size(); }
};

//
// Draws increments for one sample path. Per mode, (dB, J) is bivariate Gaussian with
// covariance [[tau, tau/2], [tau/2, tau/3]].
//
class NoiseSampler
{
public:
  NoiseSampler(std::uint64_t seed, std::uint64_t path, int num_modes);

  void Sample(double tau, bool need_j, NoiseIncrement &inc);
  NoiseIncrement Sample(double tau, bool need_j);

  int NumModes() const { return static_cast<int>(streams_.size()); }

private:
  std::vector<CounterRng> streams_;
  std::vector<std::normal_distribution<double>> normals_;
};

// Generates n_fine increments of width tau_fine, always with J.
std::vector<NoiseIncrement> SampleIncrements(NoiseSampler &sampler, double tau_fine,
                                             int n_fine);

// Coarsens a fine increment sequence by an integer factor on the same Brownian path:
// dB is summed, and tau * J = sum_i [(B_{t_i} - B_{t_k}) + J_i] delta.
std::vector<NoiseIncrement> AggregateIncrements(std::span<const NoiseIncrement> fine,
                                                int factor);

//
// Mass-inverted projection of the noise onto the DG space, scaled by lambda: applying it
// to a per-mode vector w gives the modal coefficients of lambda * sum_m sqrt(gamma_m)
// e_m w_m projected onto V_h. Tensor-product modes are applied as Gx C Gy^T so the dense
// (dof x modes) matrix is never formed.
//
class NoiseLoad
{
public:
  NoiseLoad(const SpectralNoiseModel &model, const Mesh1D &mesh, const BasisSpec &basis,
            double lambda, int quad_points = 10);
  NoiseLoad(const SpectralNoiseModel &model, const Mesh2D &mesh, const BasisSpec &basis,
            double lambda, int quad_points = 10);

  std::size_t NumDofs() const { return num_dofs_; }
  int NumModes() const { return static_cast<int>(mode_x_.size()); }
  double Lambda() const { return lambda_; }

  // out += scale * G w.
  void Apply(std::span<const double> w, double scale, std::span<double> out) const;

  // Explicit G; intended for small problems and tests.
  Eigen::MatrixXd Dense() const;

  // sum_m gamma_m ||Pi_h e_m||^2 with Pi_h the L2 projection onto V_h (independent of
  // lambda).
  double ProjectedTrace() const;

private:
  int dim_;
  int degree_;
  int nx_ = 0, ny_ = 1;
  std::size_t num_dofs_ = 0;
  double lambda_;
  Eigen::MatrixXd gx_, gy_;            // mass-inverted projections of unique factors
  Eigen::VectorXd inv_mass_x_, inv_mass_y_;
  std::vector<int> mode_x_, mode_y_;   // mode -> factor column
  std::vector<double> sqrt_gamma_;
};

}  // namespace smaxdg

#endif  // SMAXDG_QWIENER_HPP
