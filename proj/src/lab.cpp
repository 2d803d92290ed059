// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "smaxdg/dg1d.hpp"
#include "smaxdg/dg2d.hpp"
#include "smaxdg/errors.hpp"
#include "smaxdg/field.hpp"
#include "smaxdg/msp1d.hpp"
#include "smaxdg/parallel.hpp"
#include "smaxdg/projections.hpp"

namespace smaxdg
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ProjectionSpec RadauOrL2(bool radau, double alpha)
{
  return radau ? ProjectionSpec::Radau(alpha) : ProjectionSpec::L2();
}

void CheckFinite(const PQState &s)
{
  for (double v : s.p)
  {
    if (!std::isfinite(v))
    {
      throw NumericalError("Non-finite state; the time step is likely unstable");
    }
  }
  for (double v : s.q)
  {
    if (!std::isfinite(v))
    {
      throw NumericalError("Non-finite state; the time step is likely unstable");
    }
  }
}

// Radau (or L2) projections of the 1D initial data: eta with -alpha, u with +alpha.
PQState Initial1D(const Mesh1D &mesh, const BasisSpec &basis, double alpha, bool radau,
                  const Function1D &eta, const Function1D &u)
{
  PQState s;
  s.p = Project1D(eta, mesh, basis, RadauOrL2(radau, -alpha)).values;
  s.q = Project1D(u, mesh, basis, RadauOrL2(radau, alpha)).values;
  return s;
}

// E with (-alpha1, alpha2), S with (L2, -alpha2), T with (alpha1, L2).
PQState Initial2D(const Mesh2D &mesh, const BasisSpec &basis, double alpha1, double alpha2,
                  bool radau, const Function2D &e, const Function2D &s_fn,
                  const Function2D &t_fn)
{
  PQState s;
  s.p = Project2D(e, mesh, basis, RadauOrL2(radau, -alpha1), RadauOrL2(radau, alpha2)).values;
  s.q = Project2D(s_fn, mesh, basis, ProjectionSpec::L2(), RadauOrL2(radau, -alpha2)).values;
  const auto t = Project2D(t_fn, mesh, basis, RadauOrL2(radau, alpha1), ProjectionSpec::L2());
  s.q.insert(s.q.end(), t.values.begin(), t.values.end());
  return s;
}

double Log2Ratio(double coarse, double fine, double h_coarse, double h_fine)
{
  return std::log(coarse / fine) / std::log(h_coarse / h_fine);
}

}  // namespace

std::pair<double, double> ExactSolution1D(double t, double x, double b)
{
  const double eta = std::sin(x - t) + std::cos(x + t) - b;
  const double u = std::sin(x - t) - std::cos(x + t) + b;
  return {eta, u};
}

std::array<double, 3> ExactSolution2D(double t, double x, double y, double b)
{
  return {std::sin(x + t) - std::cos(y + t) - b, std::cos(y + t) + b, std::sin(x + t) + b};
}

NoiseSpec NoiseSpec::Parse(const std::string &text)
{
  if (text == "standard")
  {
    return {Kind::STANDARD, 1};
  }
  auto parse_count = [&](const std::string &prefix, Kind kind) -> NoiseSpec
  {
    const std::string rest = text.substr(prefix.size());
    std::size_t used = 0;
    int m = 0;
    try
    {
      m = std::stoi(rest, &used);
    }
    catch (const std::exception &)
    {
      used = 0;
    }
    if (used != rest.size() || m < 1)
    {
      throw std::invalid_argument("Bad mode count in noise spec '" + text + "'");
    }
    return {kind, m};
  };
  if (text.rfind("sine-product:", 0) == 0)
  {
    return parse_count("sine-product:", Kind::SINE_PRODUCT);
  }
  if (text.rfind("sine:", 0) == 0)
  {
    return parse_count("sine:", Kind::SINE);
  }
  throw std::invalid_argument("Unknown noise spec '" + text +
                              "' (expected standard, sine:<M> or sine-product:<M>)");
}

std::string NoiseSpec::ToString() const
{
  switch (kind)
  {
    case Kind::STANDARD:
      return "standard";
    case Kind::SINE:
      return "sine:" + std::to_string(modes);
    case Kind::SINE_PRODUCT:
      return "sine-product:" + std::to_string(modes);
  }
  return "unknown";
}

SpectralNoiseModel NoiseSpec::Build1D(double a, double b) const
{
  switch (kind)
  {
    case Kind::STANDARD:
      return StandardBrownianNoise(a, b);
    case Kind::SINE:
      return SineNoise1D(a, b, modes);
    case Kind::SINE_PRODUCT:
      break;
  }
  throw std::invalid_argument("Noise '" + ToString() + "' is not available in 1D");
}

SpectralNoiseModel NoiseSpec::Build2D(double ax, double bx, double ay, double by) const
{
  switch (kind)
  {
    case Kind::STANDARD:
      return StandardBrownianNoise(ax, bx, ay, by);
    case Kind::SINE_PRODUCT:
      return SineProductNoise(modes, ax, bx, ay, by);
    case Kind::SINE:
      break;
  }
  throw std::invalid_argument("Noise '" + ToString() + "' is not available in 2D");
}

std::pair<double, double> FitSlope(const std::vector<double> &t, const std::vector<double> &v)
{
  if (t.size() != v.size() || t.size() < 2)
  {
    throw std::invalid_argument("Slope fit needs at least two (t, value) pairs");
  }
  const double n = static_cast<double>(t.size());
  double tm = 0.0, vm = 0.0;
  for (std::size_t i = 0; i < t.size(); i++)
  {
    tm += t[i];
    vm += v[i];
  }
  tm /= n;
  vm /= n;
  double stt = 0.0, stv = 0.0;
  for (std::size_t i = 0; i < t.size(); i++)
  {
    stt += (t[i] - tm) * (t[i] - tm);
    stv += (t[i] - tm) * (v[i] - vm);
  }
  if (!(stt > 0.0))
  {
    throw std::invalid_argument("Slope fit needs at least two distinct times");
  }
  const double slope = stv / stt;
  return {slope, vm - slope * tm};
}

ConvergenceResult ConvergenceStudy(const ConvergenceConfig &config)
{
  if (config.dim != 1 && config.dim != 2)
  {
    throw std::invalid_argument("Dimension must be 1 or 2");
  }
  if (config.nx.empty())
  {
    throw std::invalid_argument("Convergence study needs at least one resolution");
  }
  if (!(config.t_final > 0.0) || !(config.nt_ratio > 0.0))
  {
    throw std::invalid_argument("Final time and Nt/Nx ratio must be positive");
  }
  std::vector<int> nts;
  for (int n : config.nx)
  {
    if (n < 1)
    {
      throw std::invalid_argument("Mesh sizes must be positive");
    }
    const double nt = config.nt_ratio * n;
    if (std::abs(nt - std::round(nt)) > 1e-9 || nt < 1.0)
    {
      throw std::invalid_argument("nt_ratio * Nx must be a positive integer");
    }
    nts.push_back(static_cast<int>(std::lround(nt)));
  }
  int nt_max = 0;
  for (int nt : nts)
  {
    nt_max = std::max(nt_max, nt);
  }
  for (int nt : nts)
  {
    if (nt_max % nt != 0)
    {
      throw std::invalid_argument("Every Nt must divide the finest Nt for path coupling");
    }
  }

  const BasisSpec basis(config.k);
  const double lambda = config.deterministic ? 0.0 : 1.0;
  std::vector<NoiseIncrement> fine;
  double b_final = 0.0;
  {
    NoiseSampler sampler(config.seed, 0, 1);
    fine = SampleIncrements(sampler, config.t_final / nt_max, nt_max);
    for (const auto &inc : fine)
    {
      b_final += inc.dB[0];
    }
  }
  if (config.deterministic)
  {
    b_final = 0.0;
  }

  ConvergenceResult result;
  result.fields = (config.dim == 1) ? std::vector<std::string>{"u", "eta"}
                                    : std::vector<std::string>{"E", "S", "T"};
  result.brownian_final = b_final;
  result.rows.resize(config.nx.size());
  const double t_end = config.t_final;
  const int nq = config.k + 4;

  ParallelFor(static_cast<int>(config.nx.size()), config.threads, [&](int level)
  {
    const int n = config.nx[level];
    auto coarse = AggregateIncrements(fine, nt_max / nts[level]);
    if (config.deterministic)
    {
      for (auto &inc : coarse)
      {
        inc.dB.assign(1, 0.0);
        inc.J.assign(1, 0.0);
      }
    }
    ConvergenceRow &row = result.rows[level];
    row.nx = n;
    row.ny = (config.dim == 2) ? n : 1;
    row.nt = nts[level];
    if (config.dim == 1)
    {
      const Mesh1D mesh = UniformMesh1D(0.0, kTwoPi, n);
      const Maxwell1D sys(mesh, basis, config.alpha1, lambda, lambda,
                          StandardBrownianNoise(0.0, kTwoPi));
      const PQState s0 = Initial1D(
          mesh, basis, config.alpha1, config.radau_initial,
          [](double x) { return ExactSolution1D(0.0, x, 0.0).first; },
          [](double x) { return ExactSolution1D(0.0, x, 0.0).second; });
      const PQState s = Integrate(s0, sys, coarse, config.stepper);
      CheckFinite(s);
      FieldCoeffs1D eta(config.k, n), u(config.k, n);
      eta.values = s.p;
      u.values = s.q;
      row.errors = {
          L2Error(mesh, u, [&](double x) { return ExactSolution1D(t_end, x, b_final).second; },
                  nq),
          L2Error(mesh, eta, [&](double x) { return ExactSolution1D(t_end, x, b_final).first; },
                  nq)};
    }
    else
    {
      const Mesh1D m1 = UniformMesh1D(0.0, kTwoPi, n);
      const Mesh2D mesh(m1, m1);
      const Maxwell2D sys(mesh, basis, config.alpha1, config.alpha2, lambda, lambda,
                          StandardBrownianNoise(0.0, kTwoPi, 0.0, kTwoPi));
      const PQState s0 = Initial2D(
          mesh, basis, config.alpha1, config.alpha2, config.radau_initial,
          [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[0]; },
          [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[1]; },
          [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[2]; });
      const PQState s = Integrate(s0, sys, coarse, config.stepper);
      CheckFinite(s);
      const std::size_t nd = sys.PSize();
      FieldCoeffs2D e(config.k, n, n), sf(config.k, n, n), tf(config.k, n, n);
      e.values = s.p;
      sf.values.assign(s.q.begin(), s.q.begin() + nd);
      tf.values.assign(s.q.begin() + nd, s.q.end());
      row.errors.resize(3);
      const FieldCoeffs2D *fields[3] = {&e, &sf, &tf};
      for (int c = 0; c < 3; c++)
      {
        row.errors[c] = L2Error(
            mesh, *fields[c],
            [&](double x, double y) { return ExactSolution2D(t_end, x, y, b_final)[c]; }, nq);
      }
    }
  });

  for (std::size_t r = 0; r < result.rows.size(); r++)
  {
    auto &row = result.rows[r];
    row.orders.assign(row.errors.size(), std::numeric_limits<double>::quiet_NaN());
    if (r > 0)
    {
      const auto &prev = result.rows[r - 1];
      for (std::size_t c = 0; c < row.errors.size(); c++)
      {
        row.orders[c] = Log2Ratio(prev.errors[c], row.errors[c], 1.0 / prev.nx, 1.0 / row.nx);
      }
    }
  }
  return result;
}

namespace
{

struct EnergySetup
{
  std::unique_ptr<DriftSystem> sys;
  PQState s0;
  double k_constant = 0.0;
  double theory_slope = 0.0;
};

EnergySetup SetupEnergy(const EnergyConfig &c)
{
  EnergySetup e;
  const BasisSpec basis(c.k);
  if (c.dim == 1)
  {
    const Mesh1D mesh = UniformMesh1D(0.0, kTwoPi, c.nx);
    const auto noise = c.noise.Build1D(0.0, kTwoPi);
    e.sys = std::make_unique<Maxwell1D>(mesh, basis, c.alpha1, c.lambda1, c.lambda2, noise);
    e.s0 = Initial1D(
        mesh, basis, c.alpha1, true, [](double x) { return ExactSolution1D(0.0, x, 0.0).first; },
        [](double x) { return ExactSolution1D(0.0, x, 0.0).second; });
    e.k_constant = ComputeK1D(noise, mesh, basis);
    e.theory_slope = (c.lambda1 * c.lambda1 + c.lambda2 * c.lambda2) * e.k_constant;
  }
  else if (c.dim == 2)
  {
    const Mesh2D mesh(UniformMesh1D(0.0, kTwoPi, c.nx), UniformMesh1D(0.0, kTwoPi, c.ny));
    const auto noise = c.noise.Build2D(0.0, kTwoPi, 0.0, kTwoPi);
    e.sys = std::make_unique<Maxwell2D>(mesh, basis, c.alpha1, c.alpha2, c.lambda1,
                                        c.lambda2, noise);
    e.s0 = Initial2D(
        mesh, basis, c.alpha1, c.alpha2, true,
        [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[0]; },
        [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[1]; },
        [](double x, double y) { return ExactSolution2D(0.0, x, y, 0.0)[2]; });
    e.k_constant = ComputeK2D(noise, mesh, basis);
    e.theory_slope = (c.lambda1 * c.lambda1 + 2.0 * c.lambda2 * c.lambda2) * e.k_constant;
  }
  else
  {
    throw std::invalid_argument("Dimension must be 1 or 2");
  }
  return e;
}

}  // namespace

EnergySeries EnergyGrowthStudy(const EnergyConfig &config)
{
  if (config.n_samples < 1)
  {
    throw std::invalid_argument("Energy study needs at least one sample");
  }
  if (config.nt < 1 || !(config.t_final > 0.0) || config.max_points < 2)
  {
    throw std::invalid_argument("Energy study needs nt >= 1, T > 0 and max_points >= 2");
  }
  const EnergySetup setup = SetupEnergy(config);
  const DriftSystem &sys = *setup.sys;
  const double tau = config.t_final / config.nt;

  // Record every `stride` steps so that at most max_points samples (incl. t = 0) are kept.
  const int stride = (config.nt + 1 <= config.max_points)
                         ? 1
                         : (config.nt + config.max_points - 2) / (config.max_points - 1);
  std::vector<int> record_steps;
  for (int n = 0; n <= config.nt; n += stride)
  {
    record_steps.push_back(n);
  }
  if (record_steps.back() != config.nt)
  {
    record_steps.push_back(config.nt);
  }
  const std::size_t npts = record_steps.size();

  const bool deterministic = (config.lambda1 == 0.0 && config.lambda2 == 0.0);
  const int paths = deterministic ? 1 : config.n_samples;
  std::vector<std::vector<double>> per_path(paths);
  const double e0 = sys.Energy(setup.s0.p, setup.s0.q);

  ParallelFor(paths, config.threads, [&](int path)
  {
    std::vector<double> &rec = per_path[path];
    rec.assign(npts, 0.0);
    rec[0] = e0;
    std::size_t next = 1;
    NoiseSampler sampler(config.seed, static_cast<std::uint64_t>(path), sys.NumModes());
    const PQState s = Integrate(setup.s0, sys, tau, config.nt, config.stepper, sampler,
                                [&](int n, const PQState &st)
                                {
                                  if (next < npts && record_steps[next] == n)
                                  {
                                    rec[next++] = sys.Energy(st.p, st.q);
                                  }
                                });
    CheckFinite(s);
  });

  EnergySeries out;
  out.n_samples = paths;
  out.k_constant = setup.k_constant;
  out.theory_slope = setup.theory_slope;
  out.initial_energy = e0;
  out.times.resize(npts);
  out.mean.assign(npts, 0.0);
  out.stderr_.assign(npts, 0.0);
  for (std::size_t i = 0; i < npts; i++)
  {
    out.times[i] = record_steps[i] * tau;
    double sum = 0.0;
    for (int p = 0; p < paths; p++)
    {
      sum += per_path[p][i];
    }
    const double mean = sum / paths;
    double ss = 0.0;
    for (int p = 0; p < paths; p++)
    {
      ss += (per_path[p][i] - mean) * (per_path[p][i] - mean);
    }
    out.mean[i] = mean;
    out.stderr_[i] = (paths > 1) ? std::sqrt(ss / (paths - 1) / paths) : 0.0;
    out.max_relative_drift = std::max(out.max_relative_drift, std::abs(mean - e0) / e0);
  }
  std::tie(out.slope, out.intercept) = FitSlope(out.times, out.mean);
  return out;
}

TemporalOrderResult TemporalOrderStudy(const TemporalOrderConfig &config)
{
  if (config.n_paths < 2)
  {
    throw std::invalid_argument("Temporal order study needs at least two paths");
  }
  if (config.nt.size() < 2 || config.ref_factor < 1)
  {
    throw std::invalid_argument("Temporal order study needs two or more step sizes");
  }
  int nt_max = 0;
  for (int nt : config.nt)
  {
    if (nt < 1)
    {
      throw std::invalid_argument("Step counts must be positive");
    }
    nt_max = std::max(nt_max, nt);
  }
  const int n_ref = nt_max * config.ref_factor;
  for (int nt : config.nt)
  {
    if (n_ref % nt != 0)
    {
      throw std::invalid_argument("Every step count must divide the reference step count");
    }
  }

  const BasisSpec basis(config.k);
  const Mesh1D mesh = UniformMesh1D(0.0, kTwoPi, config.nx);
  const auto noise = config.noise.Build1D(0.0, kTwoPi);
  const Maxwell1D sys(mesh, basis, config.alpha, config.lambda1, config.lambda2, noise);
  const PQState s0 = Initial1D(
      mesh, basis, config.alpha, true, [](double x) { return ExactSolution1D(0.0, x, 0.0).first; },
      [](double x) { return ExactSolution1D(0.0, x, 0.0).second; });
  const std::size_t levels = config.nt.size();

  std::vector<std::vector<double>> sq(config.n_paths);
  ParallelFor(config.n_paths, config.threads, [&](int path)
  {
    NoiseSampler sampler(config.seed, static_cast<std::uint64_t>(path), sys.NumModes());
    const auto fine = SampleIncrements(sampler, config.t_final / n_ref, n_ref);
    const PQState ref = Integrate(s0, sys, fine, StepperKind::TAYLOR2_REF);
    CheckFinite(ref);
    sq[path].resize(levels);
    for (std::size_t l = 0; l < levels; l++)
    {
      const auto coarse = AggregateIncrements(fine, n_ref / config.nt[l]);
      const PQState s = Integrate(s0, sys, coarse, config.stepper);
      CheckFinite(s);
      std::vector<double> dp(s.p.size()), dq(s.q.size());
      for (std::size_t i = 0; i < dp.size(); i++)
      {
        dp[i] = s.p[i] - ref.p[i];
      }
      for (std::size_t i = 0; i < dq.size(); i++)
      {
        dq[i] = s.q[i] - ref.q[i];
      }
      sq[path][l] = sys.Energy(dp, dq);
    }
  });

  TemporalOrderResult out;
  out.n_paths = config.n_paths;
  std::vector<double> log_tau, log_err;
  for (std::size_t l = 0; l < levels; l++)
  {
    double sum = 0.0;
    for (int p = 0; p < config.n_paths; p++)
    {
      sum += sq[p][l];
    }
    const double tau = config.t_final / config.nt[l];
    const double rms = std::sqrt(sum / config.n_paths);
    out.taus.push_back(tau);
    out.rms_errors.push_back(rms);
    log_tau.push_back(std::log(tau));
    log_err.push_back(std::log(rms));
  }
  out.slope = FitSlope(log_tau, log_err).first;
  return out;
}

double FieldGrid::Variance() const
{
  if (values.empty())
  {
    return 0.0;
  }
  double mean = 0.0;
  for (double v : values)
  {
    mean += v;
  }
  mean /= values.size();
  double ss = 0.0;
  for (double v : values)
  {
    ss += (v - mean) * (v - mean);
  }
  return ss / values.size();
}

ShowcaseResult ShowcaseColored2D(const ShowcaseConfig &config)
{
  if (config.grid_x < 2 || config.grid_y < 2 || config.nt < 1)
  {
    throw std::invalid_argument("Showcase needs an output grid of at least 2 x 2 and nt >= 1");
  }
  const double lx = 2.0 / 3.0, ly = 0.5;
  const BasisSpec basis(config.k);
  const Mesh2D mesh(UniformMesh1D(0.0, lx, config.nx), UniformMesh1D(0.0, ly, config.ny));
  const auto noise = SineProductNoise(config.m_max, 0.0, lx, 0.0, ly);
  const double pi = std::numbers::pi;
  const double tau = config.t_final / config.nt;

  std::vector<double> lambdas = {0.0};
  lambdas.insert(lambdas.end(), config.lambdas.begin(), config.lambdas.end());
  std::vector<ShowcaseRun> runs(lambdas.size());

  ParallelFor(static_cast<int>(lambdas.size()), config.threads, [&](int r)
  {
    const double lambda = lambdas[r];
    const Maxwell2D sys(mesh, basis, config.alpha1, config.alpha2, lambda, lambda, noise);
    const PQState s0 = Initial2D(
        mesh, basis, config.alpha1, config.alpha2, true,
        [&](double x, double y) { return std::sin(3 * pi * x) * std::sin(4 * pi * y); },
        [&](double x, double y) { return -0.8 * std::cos(3 * pi * x) * std::cos(4 * pi * y); },
        [&](double x, double y) { return -0.6 * std::sin(3 * pi * x) * std::cos(4 * pi * y); });
    // Same Brownian path for every lambda.
    NoiseSampler sampler(config.seed, 0, sys.NumModes());
    const PQState s = Integrate(s0, sys, tau, config.nt, config.stepper, sampler);
    CheckFinite(s);

    ShowcaseRun &run = runs[r];
    run.lambda = lambda;
    run.initial_energy = sys.Energy(s0.p, s0.q);
    run.final_energy = sys.Energy(s.p, s.q);
    const std::size_t nd = sys.PSize();
    FieldCoeffs2D sf(config.k, config.nx, config.ny), tf(config.k, config.nx, config.ny);
    sf.values.assign(s.q.begin(), s.q.begin() + nd);
    tf.values.assign(s.q.begin() + nd, s.q.end());
    for (auto *grid : {&run.s, &run.t})
    {
      grid->nx = config.grid_x;
      grid->ny = config.grid_y;
      grid->x.resize(config.grid_x);
      grid->y.resize(config.grid_y);
      for (int i = 0; i < config.grid_x; i++)
      {
        grid->x[i] = lx * i / (config.grid_x - 1);
      }
      for (int j = 0; j < config.grid_y; j++)
      {
        grid->y[j] = ly * j / (config.grid_y - 1);
      }
      grid->values.resize(std::size_t(config.grid_x) * config.grid_y);
    }
    for (int j = 0; j < config.grid_y; j++)
    {
      for (int i = 0; i < config.grid_x; i++)
      {
        const std::size_t idx = i + std::size_t(config.grid_x) * j;
        run.s.values[idx] = EvaluateField(mesh, sf, run.s.x[i], run.s.y[j]);
        run.t.values[idx] = EvaluateField(mesh, tf, run.t.x[i], run.t.y[j]);
      }
    }
  });

  ShowcaseResult out;
  out.deterministic = runs.front();
  out.runs.assign(runs.begin() + 1, runs.end());
  return out;
}

MspCheckResult MspCheck(const MspCheckConfig &config)
{
  if (config.trials < 1 || config.nx < 1 || config.k < 0)
  {
    throw std::invalid_argument("msp check needs trials >= 1, nx >= 1 and k >= 0");
  }
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const BasisSpec basis(config.k);
  const Mesh1D mesh = UniformMesh1D(0.0, kTwoPi, config.nx);
  const std::size_t n = mesh.NumCells() * std::size_t(basis.NumModes());
  auto random_block = [&]()
  {
    std::vector<double> b(n);
    for (double &x : b)
    {
      x = normal(rng);
    }
    return b;
  };

  MspCheckResult out;
  out.trials = config.trials;
  for (int trial = 0; trial < config.trials; trial++)
  {
    const double m = (config.random_split && trial > 0) ? uniform(rng) : -0.5 * config.alpha;
    const MspStructure st(m, m + config.alpha);

    TracePair tu, tv;
    for (int i = 0; i < 6; i++)
    {
      tu.minus(i) = normal(rng);
      tu.plus(i) = normal(rng);
      tv.minus(i) = normal(rng);
      tv.plus(i) = normal(rng);
    }
    const auto [gl, gr] = InterfaceIdentityGap(tu, tv, st);
    const double scale = (tu.minus.norm() + tu.plus.norm()) * (tv.minus.norm() + tv.plus.norm());
    out.max_interface_gap = std::max(out.max_interface_gap, std::max(std::abs(gl), std::abs(gr)) / scale);

    const MspDiscretization disc(mesh, basis, st);
    const ZState u = disc.Close(random_block(), random_block(), random_block(), random_block());
    const ZState v = disc.Close(random_block(), random_block(), random_block(), random_block());
    const auto r = disc.ConservationResidual(u, v);
    const auto sc = disc.ResidualScale(u, v);
    double rmax = 0.0, smax = 0.0;
    for (std::size_t j = 0; j < r.size(); j++)
    {
      rmax = std::max(rmax, std::abs(r[j]));
      smax = std::max(smax, sc[j]);
    }
    out.max_residual = std::max(out.max_residual, rmax / std::max(smax, 1e-300));

    // d/dt of u and eta recovered from the constraints: u' = P' - D(2m) zeta' / 2 with
    // zeta' = eta, and eta' = Q' - D(2n) v' / 2 with v' = u; compare with the 1D scheme.
    const ZState d = disc.Drift(u);
    std::vector<double> du = d[Z_P], deta = d[Z_Q];
    DerivativeOp1D::Unrestricted(mesh, basis, 2.0 * st.M()).Apply(u[Z_ETA], -0.5, du);
    DerivativeOp1D::Unrestricted(mesh, basis, 2.0 * st.N()).Apply(u[Z_U], -0.5, deta);
    const Maxwell1D sys(mesh, basis, config.alpha, 0.0, 0.0, StandardBrownianNoise(0.0, kTwoPi));
    std::vector<double> ref_du(n, 0.0), ref_deta(n, 0.0);
    sys.AddB(u[Z_ETA], 1.0, ref_du);
    sys.AddA(u[Z_U], 1.0, ref_deta);
    double diff = 0.0, mag = 0.0;
    for (std::size_t i = 0; i < n; i++)
    {
      diff = std::max(diff, std::max(std::abs(du[i] - ref_du[i]), std::abs(deta[i] - ref_deta[i])));
      mag = std::max(mag, std::max(std::abs(ref_du[i]), std::abs(ref_deta[i])));
    }
    out.max_elimination = std::max(out.max_elimination, diff / std::max(mag, 1e-300));
  }
  return out;
}

}  // namespace smaxdg
