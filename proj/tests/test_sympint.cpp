// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "smaxdg/dg1d.hpp"
#include "smaxdg/drift_system.hpp"
#include "smaxdg/projections.hpp"
#include "smaxdg/sympint.hpp"

using namespace smaxdg;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace
{

DenseDriftSystem Scalar(double a, double b, double l, double n)
{
  return DenseDriftSystem(MatrixXd::Constant(1, 1, a), MatrixXd::Constant(1, 1, b),
                          MatrixXd::Constant(1, 1, l), MatrixXd::Constant(1, 1, n));
}

NoiseIncrement Increment(double tau, std::vector<double> db, std::vector<double> j)
{
  NoiseIncrement inc;
  inc.tau = tau;
  inc.dB = std::move(db);
  inc.J = std::move(j);
  return inc;
}

PQState Step(StepperKind kind, const PQState &s, const DriftSystem &sys,
             const NoiseIncrement &inc)
{
  switch (kind)
  {
    case StepperKind::SYMPLECTIC_EULER:
      return StepSymplecticEuler(s, sys, inc);
    case StepperKind::PRK2:
      return StepPrk2(s, sys, inc);
    case StepperKind::TAYLOR2_REF:
      return StepTaylor2Ref(s, sys, inc);
  }
  return s;
}

// One-step map of the deterministic scalar oscillator A = 1, B = -1.
Eigen::Matrix2d OneStepMatrix(StepperKind kind, double tau)
{
  const auto sys = Scalar(1.0, -1.0, 0.0, 0.0);
  const auto inc = Increment(tau, {0.0}, {0.0});
  Eigen::Matrix2d m;
  for (int c = 0; c < 2; c++)
  {
    PQState s{{c == 0 ? 1.0 : 0.0}, {c == 1 ? 1.0 : 0.0}, 0.0};
    const auto r = Step(kind, s, sys, inc);
    m(0, c) = r.p[0];
    m(1, c) = r.q[0];
  }
  return m;
}

const StepperKind kAll[] = {StepperKind::SYMPLECTIC_EULER, StepperKind::PRK2,
                            StepperKind::TAYLOR2_REF};

}  // namespace

TEST_CASE("pure noise steps")
{
  for (auto kind : kAll)
  {
    const auto sys = Scalar(0.0, 0.0, 1.0, 1.0);
    const auto r = Step(kind, PQState{{0.5}, {-0.25}, 0.0}, sys, Increment(0.1, {0.3}, {0.07}));
    CHECK(r.p[0] == doctest::Approx(0.8));
    CHECK(r.q[0] == doctest::Approx(0.05));
    CHECK(r.t == doctest::Approx(0.1));
  }
}

TEST_CASE("symplectic Euler one-step matrix")
{
  const double tau = 0.13;
  const auto m = OneStepMatrix(StepperKind::SYMPLECTIC_EULER, tau);
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(0, 1) == doctest::Approx(tau));
  CHECK(m(1, 0) == doctest::Approx(-tau));
  CHECK(m(1, 1) == doctest::Approx(1 - tau * tau));
  CHECK(std::abs(m.determinant() - 1.0) < 1e-14);

  const auto tiny = OneStepMatrix(StepperKind::SYMPLECTIC_EULER, 1e-12);
  CHECK((tiny - Eigen::Matrix2d::Identity()).norm() < 1e-11);
}

TEST_CASE("symplectic one-step maps on the scalar oscillator")
{
  Eigen::Matrix2d omega;
  omega << 0, 1, -1, 0;
  for (auto kind : {StepperKind::SYMPLECTIC_EULER, StepperKind::PRK2})
  {
    for (double tau : {0.01, 0.1, 0.5})
    {
      const auto m = OneStepMatrix(kind, tau);
      CHECK((m.transpose() * omega * m - omega).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("PRK2 local error is third order on the oscillator")
{
  std::vector<double> taus, errs;
  for (double tau : {0.1, 0.05, 0.025, 0.0125})
  {
    const auto m = OneStepMatrix(StepperKind::PRK2, tau);
    Eigen::Matrix2d exact;
    exact << std::cos(tau), std::sin(tau), -std::sin(tau), std::cos(tau);
    taus.push_back(tau);
    errs.push_back((m - exact).norm());
  }
  CHECK(oracle::LogLogSlope(taus, errs) == doctest::Approx(3.0).epsilon(0.07));
}

TEST_CASE("Taylor reference matches the second-order series")
{
  std::mt19937_64 rng(12);
  const int np = 3, nq = 4, nm = 2;
  auto rnd = [&](int r, int c)
  {
    const auto v = oracle::RandomVector(rng, r * c);
    return MatrixXd(Eigen::Map<const MatrixXd>(v.data(), r, c));
  };
  const MatrixXd a = rnd(np, nq), b = rnd(nq, np), l = rnd(np, nm), n = rnd(nq, nm);
  const DenseDriftSystem sys(a, b, l, n);
  const auto p = oracle::RandomVector(rng, np), q = oracle::RandomVector(rng, nq);
  const std::vector<double> db = {0.2, -0.1}, j = {0.05, 0.3};
  const double tau = 0.07;
  const auto r = StepTaylor2Ref(PQState{p, q, 0.0}, sys, Increment(tau, db, j));

  const VectorXd pv = Eigen::Map<const VectorXd>(p.data(), np);
  const VectorXd qv = Eigen::Map<const VectorXd>(q.data(), nq);
  const VectorXd dbv = Eigen::Map<const VectorXd>(db.data(), nm);
  const VectorXd jv = Eigen::Map<const VectorXd>(j.data(), nm);
  const VectorXd pe = pv + tau * a * qv + 0.5 * tau * tau * a * (b * pv) + tau * a * (n * jv) + l * dbv;
  const VectorXd qe = qv + tau * b * pv + 0.5 * tau * tau * b * (a * qv) + tau * b * (l * jv) + n * dbv;
  for (int i = 0; i < np; i++)
  {
    CHECK(r.p[i] == doctest::Approx(pe[i]).epsilon(1e-13));
  }
  for (int i = 0; i < nq; i++)
  {
    CHECK(r.q[i] == doctest::Approx(qe[i]).epsilon(1e-13));
  }

  // Deterministic scalar: the series of exp(tau [[0, a], [b, 0]]).
  const auto scalar = OneStepMatrix(StepperKind::TAYLOR2_REF, tau);
  Eigen::Matrix2d gen;
  gen << 0, 1, -1, 0;
  const Eigen::Matrix2d series =
      Eigen::Matrix2d::Identity() + tau * gen + 0.5 * tau * tau * gen * gen;
  CHECK((scalar - series).norm() < 1e-15);
}

TEST_CASE("PRK2 and Taylor reference agree to one-step order 5/2 in mean square")
{
  std::mt19937_64 rng(99);
  const int np = 3, nq = 3, nm = 2;
  auto rnd = [&](int r, int c)
  {
    const auto v = oracle::RandomVector(rng, r * c);
    return MatrixXd(Eigen::Map<const MatrixXd>(v.data(), r, c));
  };
  const DenseDriftSystem sys(rnd(np, nq), rnd(nq, np), rnd(np, nm), rnd(nq, nm));
  const PQState s{oracle::RandomVector(rng, np), oracle::RandomVector(rng, nq), 0.0};
  std::vector<double> taus, rms, mean;
  const int paths = 4000;
  for (double tau : {0.04, 0.02, 0.01, 0.005})
  {
    NoiseSampler sampler(3, 0, nm);
    double sq = 0.0;
    VectorXd acc = VectorXd::Zero(np + nq);
    for (int i = 0; i < paths; i++)
    {
      const auto inc = sampler.Sample(tau, true);
      const auto a = StepPrk2(s, sys, inc), b = StepTaylor2Ref(s, sys, inc);
      for (int c = 0; c < np; c++)
      {
        sq += std::pow(a.p[c] - b.p[c], 2);
        acc[c] += a.p[c] - b.p[c];
      }
      for (int c = 0; c < nq; c++)
      {
        sq += std::pow(a.q[c] - b.q[c], 2);
        acc[np + c] += a.q[c] - b.q[c];
      }
    }
    taus.push_back(tau);
    rms.push_back(std::sqrt(sq / paths));
    // The difference is affine in the increments; its mean is the deterministic part.
    const auto a0 = StepPrk2(s, sys, Increment(tau, {0, 0}, {0, 0}));
    const auto b0 = StepTaylor2Ref(s, sys, Increment(tau, {0, 0}, {0, 0}));
    double dm = 0.0;
    for (int c = 0; c < np; c++)
    {
      dm += std::pow(a0.p[c] - b0.p[c], 2);
    }
    for (int c = 0; c < nq; c++)
    {
      dm += std::pow(a0.q[c] - b0.q[c], 2);
    }
    mean.push_back(std::sqrt(dm));
  }
  CHECK(oracle::LogLogSlope(taus, rms) == doctest::Approx(2.5).epsilon(0.08));
  CHECK(oracle::LogLogSlope(taus, mean) >= 2.9);
}

TEST_CASE("stepper preconditions")
{
  const auto sys = Scalar(1.0, -1.0, 1.0, 1.0);
  PQState s{{1.0}, {0.0}, 0.0};
  Stepper prk(sys, StepperKind::PRK2);
  CHECK_THROWS_AS(prk.Step(s, Increment(0.1, {0.1}, {})), std::invalid_argument);
  CHECK_THROWS_AS(prk.Step(s, Increment(0.0, {0.1}, {0.1})), std::invalid_argument);
  Stepper se(sys, StepperKind::SYMPLECTIC_EULER);
  CHECK_NOTHROW(se.Step(s, Increment(0.1, {0.1}, {})));
  PQState bad{{1.0, 2.0}, {0.0}, 0.0};
  CHECK_THROWS_AS(se.Step(bad, Increment(0.1, {0.1}, {})), std::invalid_argument);
  CHECK_THROWS_AS(se.Step(s, Increment(0.1, {0.1, 0.2}, {})), std::invalid_argument);
  CHECK(ParseStepperKind("prk2") == StepperKind::PRK2);
  CHECK(ParseStepperKind(ToString(StepperKind::SYMPLECTIC_EULER)) ==
        StepperKind::SYMPLECTIC_EULER);
  CHECK_THROWS_AS(ParseStepperKind("rk4"), std::invalid_argument);
  CHECK(NeedsJ(StepperKind::TAYLOR2_REF));
  CHECK_FALSE(NeedsJ(StepperKind::SYMPLECTIC_EULER));
}

TEST_CASE("integration on the 1D Maxwell system")
{
  using std::numbers::pi;
  const auto mesh = UniformMesh1D(0.0, 2 * pi, 80);
  const BasisSpec basis(1);
  const auto noise = StandardBrownianNoise(0.0, 2 * pi);
  const auto eta = Project1D([](double x) { return std::sin(x) + std::cos(x); }, mesh, basis,
                             ProjectionSpec::Radau(-0.5));
  const auto u = Project1D([](double x) { return std::sin(x) - std::cos(x); }, mesh, basis,
                           ProjectionSpec::Radau(0.5));
  const PQState s0{eta.values, u.values, 0.0};

  SUBCASE("zero steps return the initial state")
  {
    const Maxwell1D sys(mesh, basis, 0.5, 1.0, 1.0, noise);
    NoiseSampler sampler(1, 0, 1);
    const auto r = Integrate(s0, sys, 0.01, 0, StepperKind::PRK2, sampler);
    CHECK(r.p == s0.p);
    CHECK(r.q == s0.q);
  }

  SUBCASE("deterministic energy is conserved to 1e-4")
  {
    const Maxwell1D sys(mesh, basis, 0.5, 0.0, 0.0, noise);
    NoiseSampler sampler(1, 0, 1);
    const double e0 = sys.Energy(s0.p, s0.q);
    double drift = 0.0;
    Integrate(s0, sys, 0.0075, 400, StepperKind::PRK2, sampler,
              [&](int, const PQState &s)
              { drift = std::max(drift, std::abs(sys.Energy(s.p, s.q) - e0) / e0); });
    CHECK(drift <= 1e-4);
  }

  SUBCASE("same seed gives a bit-identical trajectory")
  {
    const Maxwell1D sys(mesh, basis, 0.5, 1.0, 1.0, noise);
    NoiseSampler a(42, 3, 1), b(42, 3, 1);
    const auto ra = Integrate(s0, sys, 0.01, 50, StepperKind::PRK2, a);
    const auto rb = Integrate(s0, sys, 0.01, 50, StepperKind::PRK2, b);
    CHECK(ra.p == rb.p);
    CHECK(ra.q == rb.q);
    CHECK(ra.t == doctest::Approx(0.5));
  }
}
