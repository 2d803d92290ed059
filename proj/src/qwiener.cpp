// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/qwiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smaxdg
{

double ModeFunction::operator()(double x) const
{
  switch (kind)
  {
    case Kind::CONSTANT:
      return 1.0 / std::sqrt(length);
    case Kind::SINE:
      return std::sqrt(2.0 / length) * std::sin(index * std::numbers::pi * (x - a) / length);
  }
  return 0.0;
}

namespace
{

// L2 norm squared of a factor on its own interval, composite Gauss quadrature.
double FactorNormSquared(const ModeFunction &f)
{
  const int panels = std::max(4, 2 * f.index);
  const auto rule = GaussRule(10);
  const double h = f.length / panels;
  double s = 0.0;
  for (int p = 0; p < panels; p++)
  {
    const double c = f.a + (p + 0.5) * h;
    for (int q = 0; q < rule.Size(); q++)
    {
      const double v = f(c + 0.5 * h * rule.nodes[q]);
      s += 0.5 * h * rule.weights[q] * v * v;
    }
  }
  return s;
}

void ValidateFactor(const ModeFunction &f, double a, double b)
{
  if (std::abs(f.a - a) > 1e-12 * (1.0 + std::abs(a)) ||
      std::abs(f.a + f.length - b) > 1e-12 * (1.0 + std::abs(b)))
  {
    throw std::invalid_argument("Noise mode interval does not match the model domain");
  }
  if (f.kind == ModeFunction::Kind::SINE && f.index < 1)
  {
    throw std::invalid_argument("Sine mode index must be at least 1");
  }
  if (std::abs(FactorNormSquared(f) - 1.0) > 1e-10)
  {
    throw std::invalid_argument("Noise mode is not normalized");
  }
}

void ValidateModes(const std::vector<NoiseMode> &modes, int dim, double ax, double bx,
                   double ay, double by)
{
  std::vector<ModeFunction> checked;
  auto check_once = [&](const ModeFunction &f, double a, double b)
  {
    if (std::find(checked.begin(), checked.end(), f) == checked.end())
    {
      ValidateFactor(f, a, b);
      checked.push_back(f);
    }
  };
  for (const auto &m : modes)
  {
    if (!(m.gamma >= 0.0) || !std::isfinite(m.gamma))
    {
      throw std::invalid_argument("Noise eigenvalues must be finite and non-negative");
    }
    check_once(m.fx, ax, bx);
    if (dim == 2)
    {
      if (!m.fy)
      {
        throw std::invalid_argument("2D noise modes need a y factor");
      }
      check_once(*m.fy, ay, by);
    }
  }
}

}  // namespace

SpectralNoiseModel::SpectralNoiseModel(double ax, double bx, std::vector<NoiseMode> modes)
  : dim_(1), ax_(ax), bx_(bx), modes_(std::move(modes))
{
  if (!(ax < bx))
  {
    throw std::invalid_argument("Degenerate noise domain");
  }
  ValidateModes(modes_, 1, ax_, bx_, 0.0, 0.0);
}

SpectralNoiseModel::SpectralNoiseModel(double ax, double bx, double ay, double by,
                                       std::vector<NoiseMode> modes)
  : dim_(2), ax_(ax), bx_(bx), ay_(ay), by_(by), modes_(std::move(modes))
{
  if (!(ax < bx) || !(ay < by))
  {
    throw std::invalid_argument("Degenerate noise domain");
  }
  ValidateModes(modes_, 2, ax_, bx_, ay_, by_);
}

double SpectralNoiseModel::Trace() const
{
  double t = 0.0;
  for (const auto &m : modes_)
  {
    t += m.gamma;
  }
  return t;
}

double SpectralNoiseModel::DomainMeasure() const
{
  return (dim_ == 1) ? (bx_ - ax_) : (bx_ - ax_) * (by_ - ay_);
}

double SpectralNoiseModel::EvaluateMode(int m, double x, double y) const
{
  const auto &mode = modes_.at(m);
  double v = std::sqrt(mode.gamma) * mode.fx(x);
  if (dim_ == 2)
  {
    v *= (*mode.fy)(y);
  }
  return v;
}

double SpectralNoiseModel::EvaluateField(std::span<const double> w, double x, double y) const
{
  if (w.size() != modes_.size())
  {
    throw std::invalid_argument("Mode vector size does not match the noise model");
  }
  double s = 0.0;
  for (std::size_t m = 0; m < modes_.size(); m++)
  {
    s += w[m] * EvaluateMode(static_cast<int>(m), x, y);
  }
  return s;
}

SpectralNoiseModel StandardBrownianNoise(double a, double b)
{
  const double len = b - a;
  ModeFunction f{ModeFunction::Kind::CONSTANT, 0, a, len};
  return SpectralNoiseModel(a, b, {NoiseMode{len, f, std::nullopt}});
}

SpectralNoiseModel StandardBrownianNoise(double ax, double bx, double ay, double by)
{
  ModeFunction fx{ModeFunction::Kind::CONSTANT, 0, ax, bx - ax};
  ModeFunction fy{ModeFunction::Kind::CONSTANT, 0, ay, by - ay};
  return SpectralNoiseModel(ax, bx, ay, by, {NoiseMode{(bx - ax) * (by - ay), fx, fy}});
}

SpectralNoiseModel SineNoise1D(double a, double b, int count, double decay)
{
  if (count < 1)
  {
    throw std::invalid_argument("Sine noise needs at least one mode");
  }
  std::vector<NoiseMode> modes;
  for (int m = 1; m <= count; m++)
  {
    modes.push_back({std::pow(double(m), -decay),
                     ModeFunction{ModeFunction::Kind::SINE, m, a, b - a}, std::nullopt});
  }
  return SpectralNoiseModel(a, b, std::move(modes));
}

SpectralNoiseModel SineProductNoise(int m_max, double ax, double bx, double ay, double by)
{
  if (m_max < 1)
  {
    throw std::invalid_argument("Sine product noise needs at least one mode per direction");
  }
  std::vector<NoiseMode> modes;
  modes.reserve(std::size_t(m_max) * m_max);
  for (int m = 1; m <= m_max; m++)
  {
    for (int n = 1; n <= m_max; n++)
    {
      const double gamma = 1.0 / (double(m) * m * m + double(n) * n * n);
      modes.push_back({gamma, ModeFunction{ModeFunction::Kind::SINE, m, ax, bx - ax},
                       ModeFunction{ModeFunction::Kind::SINE, n, ay, by - ay}});
    }
  }
  return SpectralNoiseModel(ax, bx, ay, by, std::move(modes));
}

namespace
{

constexpr std::uint64_t SplitMix(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t path, std::uint64_t mode)
  : key_(SplitMix(SplitMix(SplitMix(seed) ^ path) ^ (mode * 0xd1b54a32d192ed03ULL)))
{
}

CounterRng::result_type CounterRng::operator()()
{
  // Two rounds over key + counter: a bijective mix of a unique 64-bit input per draw.
  return SplitMix(SplitMix(key_ + 0x632be59bd9b4e019ULL * counter_++) ^ key_);
}

NoiseSampler::NoiseSampler(std::uint64_t seed, std::uint64_t path, int num_modes)
{
  if (num_modes < 0)
  {
    throw std::invalid_argument("Negative number of noise modes");
  }
  streams_.reserve(num_modes);
  for (int m = 0; m < num_modes; m++)
  {
    streams_.emplace_back(seed, path, static_cast<std::uint64_t>(m));
  }
  normals_.resize(num_modes);
}

void NoiseSampler::Sample(double tau, bool need_j, NoiseIncrement &inc)
{
  if (!(tau > 0.0))
  {
    throw std::invalid_argument("Time step must be positive");
  }
  const std::size_t n = streams_.size();
  inc.tau = tau;
  inc.dB.resize(n);
  inc.J.resize(need_j ? n : 0);
  const double s = std::sqrt(tau);
  const double s12 = std::sqrt(tau / 12.0);
  for (std::size_t m = 0; m < n; m++)
  {
    const double z1 = normals_[m](streams_[m]);
    inc.dB[m] = s * z1;
    if (need_j)
    {
      const double z2 = normals_[m](streams_[m]);
      inc.J[m] = 0.5 * s * z1 + s12 * z2;
    }
  }
}

NoiseIncrement NoiseSampler::Sample(double tau, bool need_j)
{
  NoiseIncrement inc;
  Sample(tau, need_j, inc);
  return inc;
}

std::vector<NoiseIncrement> SampleIncrements(NoiseSampler &sampler, double tau_fine,
                                             int n_fine)
{
  std::vector<NoiseIncrement> out(n_fine);
  for (auto &inc : out)
  {
    sampler.Sample(tau_fine, true, inc);
  }
  return out;
}

std::vector<NoiseIncrement> AggregateIncrements(std::span<const NoiseIncrement> fine,
                                                int factor)
{
  if (factor < 1 || fine.size() % factor != 0)
  {
    throw std::invalid_argument("Aggregation factor must divide the number of fine steps");
  }
  std::vector<NoiseIncrement> coarse(fine.size() / factor);
  for (std::size_t c = 0; c < coarse.size(); c++)
  {
    const auto &first = fine[c * factor];
    const std::size_t modes = first.dB.size();
    auto &out = coarse[c];
    out.tau = 0.0;
    out.dB.assign(modes, 0.0);
    out.J.assign(modes, 0.0);
    for (int i = 0; i < factor; i++)
    {
      const auto &f = fine[c * factor + i];
      if (!f.HasJ() || f.dB.size() != modes)
      {
        throw std::invalid_argument("Fine increments need J and a fixed mode count");
      }
      for (std::size_t m = 0; m < modes; m++)
      {
        // out.dB currently holds B_{t_i} - B_{t_k}; out.J accumulates tau * J.
        out.J[m] += (out.dB[m] + f.J[m]) * f.tau;
        out.dB[m] += f.dB[m];
      }
      out.tau += f.tau;
    }
    for (std::size_t m = 0; m < modes; m++)
    {
      out.J[m] /= out.tau;
    }
  }
  return coarse;
}

namespace
{

// Mass-inverted projections mu^a int_{I_i} phi^a f dx for each unique factor, as the
// columns of a (cells * (k + 1)) x (#factors) matrix.
Eigen::MatrixXd ProjectFactors(const std::vector<ModeFunction> &factors, const Mesh1D &mesh,
                               int k, int nq)
{
  const auto rule = GaussRule(nq);
  const int np = k + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(mesh.NumCells() * np, factors.size());
  std::vector<double> p(np);
  for (std::size_t f = 0; f < factors.size(); f++)
  {
    const auto &fn = factors[f];
    for (int i = 0; i < mesh.NumCells(); i++)
    {
      const double half = 0.5 * mesh.Width(i);
      for (int q = 0; q < nq; q++)
      {
        const double v = fn(mesh.MapToPhysical(i, rule.nodes[q])) * rule.weights[q] * half;
        LegendreAll(k, rule.nodes[q], p.data());
        for (int a = 0; a < np; a++)
        {
          g(i * np + a, f) += v * p[a];
        }
      }
      for (int a = 0; a < np; a++)
      {
        g(i * np + a, f) *= InverseMass(mesh.Width(i), a);
      }
    }
  }
  return g;
}

Eigen::VectorXd InverseMassVector(const Mesh1D &mesh, int k)
{
  Eigen::VectorXd v(mesh.NumCells() * (k + 1));
  for (int i = 0; i < mesh.NumCells(); i++)
  {
    for (int a = 0; a <= k; a++)
    {
      v(i * (k + 1) + a) = InverseMass(mesh.Width(i), a);
    }
  }
  return v;
}

int FactorIndex(std::vector<ModeFunction> &factors, const ModeFunction &f)
{
  auto it = std::find(factors.begin(), factors.end(), f);
  if (it != factors.end())
  {
    return static_cast<int>(it - factors.begin());
  }
  factors.push_back(f);
  return static_cast<int>(factors.size()) - 1;
}

void CheckDomain(double model_a, double model_b, const Mesh1D &mesh)
{
  const double tol = 1e-12 * (1.0 + std::abs(model_a) + std::abs(model_b));
  if (std::abs(model_a - mesh.Left()) > tol || std::abs(model_b - mesh.Right()) > tol)
  {
    throw std::invalid_argument("Noise model domain does not match the mesh");
  }
}

}  // namespace

NoiseLoad::NoiseLoad(const SpectralNoiseModel &model, const Mesh1D &mesh,
                     const BasisSpec &basis, double lambda, int quad_points)
  : dim_(1), degree_(basis.degree), nx_(mesh.NumCells()), lambda_(lambda)
{
  if (model.Dimension() != 1)
  {
    throw std::invalid_argument("1D noise load needs a 1D noise model");
  }
  CheckDomain(model.XMin(), model.XMax(), mesh);
  std::vector<ModeFunction> factors;
  for (const auto &m : model.Modes())
  {
    mode_x_.push_back(FactorIndex(factors, m.fx));
    mode_y_.push_back(0);
    sqrt_gamma_.push_back(std::sqrt(m.gamma));
  }
  gx_ = ProjectFactors(factors, mesh, degree_, quad_points);
  gy_ = Eigen::MatrixXd::Ones(1, 1);
  inv_mass_x_ = InverseMassVector(mesh, degree_);
  inv_mass_y_ = Eigen::VectorXd::Ones(1);
  num_dofs_ = std::size_t(nx_) * (degree_ + 1);
}

NoiseLoad::NoiseLoad(const SpectralNoiseModel &model, const Mesh2D &mesh,
                     const BasisSpec &basis, double lambda, int quad_points)
  : dim_(2), degree_(basis.degree), nx_(mesh.Nx()), ny_(mesh.Ny()), lambda_(lambda)
{
  if (model.Dimension() != 2)
  {
    throw std::invalid_argument("2D noise load needs a 2D noise model");
  }
  CheckDomain(model.XMin(), model.XMax(), mesh.X());
  CheckDomain(model.YMin(), model.YMax(), mesh.Y());
  std::vector<ModeFunction> fx, fy;
  for (const auto &m : model.Modes())
  {
    mode_x_.push_back(FactorIndex(fx, m.fx));
    mode_y_.push_back(FactorIndex(fy, *m.fy));
    sqrt_gamma_.push_back(std::sqrt(m.gamma));
  }
  gx_ = ProjectFactors(fx, mesh.X(), degree_, quad_points);
  gy_ = ProjectFactors(fy, mesh.Y(), degree_, quad_points);
  inv_mass_x_ = InverseMassVector(mesh.X(), degree_);
  inv_mass_y_ = InverseMassVector(mesh.Y(), degree_);
  const int np = degree_ + 1;
  num_dofs_ = std::size_t(nx_) * ny_ * np * np;
}

void NoiseLoad::Apply(std::span<const double> w, double scale, std::span<double> out) const
{
  if (w.size() != mode_x_.size() || out.size() != num_dofs_)
  {
    throw std::invalid_argument("Noise load dimension mismatch");
  }
  const double s = scale * lambda_;
  if (s == 0.0)
  {
    return;
  }
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(gx_.cols(), gy_.cols());
  for (std::size_t m = 0; m < w.size(); m++)
  {
    c(mode_x_[m], mode_y_[m]) += sqrt_gamma_[m] * w[m];
  }
  if (dim_ == 1)
  {
    Eigen::Map<Eigen::VectorXd> o(out.data(), out.size());
    o.noalias() += s * (gx_ * c.col(0));
    return;
  }
  // r((i, a), (j, b)) = sum gx((i, a), p) c(p, q) gy((j, b), q)
  const Eigen::MatrixXd r = gx_ * c * gy_.transpose();
  const int np = degree_ + 1;
  for (int j = 0; j < ny_; j++)
  {
    for (int i = 0; i < nx_; i++)
    {
      const std::size_t base = (std::size_t(i) + std::size_t(nx_) * j) * np * np;
      for (int b = 0; b < np; b++)
      {
        for (int a = 0; a < np; a++)
        {
          out[base + a + np * b] += s * r(i * np + a, j * np + b);
        }
      }
    }
  }
}

Eigen::MatrixXd NoiseLoad::Dense() const
{
  const int modes = NumModes();
  Eigen::MatrixXd g(num_dofs_, modes);
  std::vector<double> w(modes, 0.0), col(num_dofs_);
  for (int m = 0; m < modes; m++)
  {
    std::fill(w.begin(), w.end(), 0.0);
    std::fill(col.begin(), col.end(), 0.0);
    w[m] = 1.0;
    Apply(w, 1.0, col);
    g.col(m) = Eigen::Map<Eigen::VectorXd>(col.data(), col.size());
  }
  return g;
}

double NoiseLoad::ProjectedTrace() const
{
  // ||Pi f||^2 = sum over dofs of (mu-inverted coefficient)^2 / mu.
  auto norms = [](const Eigen::MatrixXd &g, const Eigen::VectorXd &inv_mass)
  {
    Eigen::VectorXd n(g.cols());
    for (Eigen::Index f = 0; f < g.cols(); f++)
    {
      n(f) = (g.col(f).array().square() / inv_mass.array()).sum();
    }
    return n;
  };
  const Eigen::VectorXd nx = norms(gx_, inv_mass_x_);
  const Eigen::VectorXd ny = (dim_ == 2) ? norms(gy_, inv_mass_y_) : Eigen::VectorXd::Ones(1);
  double k = 0.0;
  for (std::size_t m = 0; m < mode_x_.size(); m++)
  {
    k += sqrt_gamma_[m] * sqrt_gamma_[m] * nx(mode_x_[m]) * ny(mode_y_[m]);
  }
  return k;
}

}  // namespace smaxdg
