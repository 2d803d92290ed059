// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_LAB_HPP
#define SMAXDG_LAB_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smaxdg/qwiener.hpp"
#include "smaxdg/sympint.hpp"

namespace smaxdg
{

// Exact solutions driven by a standard Brownian motion with lambda1 = lambda2 = 1.
// 1D returns (eta, u); 2D returns (E, S, T).
std::pair<double, double> ExactSolution1D(double t, double x, double b);
std::array<double, 3> ExactSolution2D(double t, double x, double y, double b);

//
// Noise selection for experiments: "standard" (space-constant Brownian motion),
// "sine:<M>" (M sine modes with gamma_m = m^-3, 1D only) and "sine-product:<M>"
// (M^2 tensor sine modes, 2D only).
//
struct NoiseSpec
{
  enum class Kind
  {
    STANDARD,
    SINE,
    SINE_PRODUCT
  };

  Kind kind = Kind::STANDARD;
  int modes = 1;

  static NoiseSpec Parse(const std::string &text);
  std::string ToString() const;
  SpectralNoiseModel Build1D(double a, double b) const;
  SpectralNoiseModel Build2D(double ax, double bx, double ay, double by) const;
};

// Ordinary least squares fit values ~ slope * t + intercept.
std::pair<double, double> FitSlope(const std::vector<double> &t, const std::vector<double> &v);

struct ConvergenceConfig
{
  int dim = 1;
  int k = 1;
  double alpha1 = 0.5;  // alpha in 1D
  double alpha2 = 0.5;
  std::vector<int> nx = {20, 40, 80, 160};
  double nt_ratio = 30.0;  // Nt = nt_ratio * Nx
  double t_final = 3.0;
  StepperKind stepper = StepperKind::PRK2;
  std::uint64_t seed = 7;
  bool deterministic = false;  // lambda = 0, B = 0 with the same trigonometric data
  bool radau_initial = true;   // Radau projections of the initial data, else L2
  int threads = 1;
};

struct ConvergenceRow
{
  int nx = 0, ny = 0, nt = 0;
  std::vector<double> errors;
  std::vector<double> orders;  // NaN on the first row
};

struct ConvergenceResult
{
  std::vector<std::string> fields;
  std::vector<ConvergenceRow> rows;
  double brownian_final = 0.0;
};

// Every resolution runs on the same Brownian path: increments are generated on the finest
// time grid and aggregated for the coarser ones.
ConvergenceResult ConvergenceStudy(const ConvergenceConfig &config);

struct EnergyConfig
{
  int dim = 1;
  int k = 1;
  int nx = 80, ny = 80;
  double t_final = 3.0;
  int nt = 400;
  double alpha1 = 0.5, alpha2 = 0.5;
  double lambda1 = 1.0, lambda2 = 1.0;
  NoiseSpec noise;
  StepperKind stepper = StepperKind::PRK2;
  int n_samples = 1000;
  std::uint64_t seed = 7;
  int max_points = 4000;
  int threads = 1;
};

struct EnergySeries
{
  std::vector<double> times;
  std::vector<double> mean;
  std::vector<double> stderr_;
  int n_samples = 0;
  double slope = 0.0, intercept = 0.0;
  double theory_slope = 0.0;
  double k_constant = 0.0;
  double initial_energy = 0.0;
  double max_relative_drift = 0.0;  // max_t |mean(t) - E(0)| / E(0)
};

// Averaged discrete energy over independent paths. With lambda1 = lambda2 = 0 all paths
// coincide and a single path is integrated.
EnergySeries EnergyGrowthStudy(const EnergyConfig &config);

struct TemporalOrderConfig
{
  int k = 1;
  int nx = 16;
  double alpha = 0.5;
  double lambda1 = 1.0, lambda2 = 1.0;
  NoiseSpec noise = NoiseSpec{NoiseSpec::Kind::SINE, 4};
  double t_final = 1.0;
  std::vector<int> nt = {20, 40, 80, 160, 320};
  int ref_factor = 8;
  StepperKind stepper = StepperKind::PRK2;
  int n_paths = 200;
  std::uint64_t seed = 7;
  int threads = 1;
};

struct TemporalOrderResult
{
  std::vector<double> taus;
  std::vector<double> rms_errors;
  double slope = 0.0;
  int n_paths = 0;
};

// RMS (over paths) of the mass-norm distance between the final state and TAYLOR2_REF run
// at ref_factor times the finest step on the same path; slope of log error vs log tau.
TemporalOrderResult TemporalOrderStudy(const TemporalOrderConfig &config);

struct ShowcaseConfig
{
  int k = 1;
  int nx = 80, ny = 80;
  int m_max = 50;
  double t_final = 1.0;
  int nt = 1200;
  double alpha1 = 0.5, alpha2 = 0.5;
  std::vector<double> lambdas = {0.1, 0.2, 0.3, 0.5, 0.7, 1.0};
  int grid_x = 81, grid_y = 61;
  StepperKind stepper = StepperKind::PRK2;
  std::uint64_t seed = 7;
  int threads = 1;
};

struct FieldGrid
{
  int nx = 0, ny = 0;
  std::vector<double> x, y;
  std::vector<double> values;  // values[ix + nx * iy]

  double Variance() const;
};

struct ShowcaseRun
{
  double lambda = 0.0;
  FieldGrid s, t;
  double initial_energy = 0.0;
  double final_energy = 0.0;
};

struct ShowcaseResult
{
  ShowcaseRun deterministic;     // lambda = 0
  std::vector<ShowcaseRun> runs; // one per configured lambda, same Brownian path
};

struct MspCheckConfig
{
  double alpha = 0.5;
  int trials = 100;
  int nx = 8;
  int k = 2;
  bool random_split = true;  // random m per trial (n = m + alpha), else (-alpha/2, alpha/2)
  std::uint64_t seed = 7;
};

struct MspCheckResult
{
  int trials = 0;
  double max_interface_gap = 0.0;   // relative to |U| |V| of the traces
  double max_residual = 0.0;    // max_j |R_j| / max_j scale_j
  double max_elimination = 0.0; // z-system vs 1D Maxwell drift, relative
};

// Random closed states and random interface traces; all quantities should be round-off.
MspCheckResult MspCheck(const MspCheckConfig &config);

// Colored noise on [0, 2/3] x [0, 1/2] with lambda1 = lambda2 = lambda; S_h and T_h are
// sampled on a uniform output grid at the final time.
ShowcaseResult ShowcaseColored2D(const ShowcaseConfig &config);

}  // namespace smaxdg

#endif  // SMAXDG_LAB_HPP
