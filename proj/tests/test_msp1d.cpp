// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "smaxdg/dg1d.hpp"
#include "smaxdg/msp1d.hpp"

using namespace smaxdg;
using std::numbers::pi;

namespace
{

TracePair RandomTraces(std::mt19937_64 &rng)
{
  std::normal_distribution<double> nd;
  TracePair t;
  for (int i = 0; i < 6; i++)
  {
    t.minus(i) = nd(rng);
    t.plus(i) = nd(rng);
  }
  return t;
}

}  // namespace

TEST_CASE("structure matrices")
{
  const auto s = MspStructure(-0.1, 0.4);
  CHECK((s.MMatrix() + s.MMatrix().transpose()).norm() == 0.0);
  CHECK((s.KMatrix() + s.KMatrix().transpose()).norm() == 0.0);
  CHECK((s.AMatrix() - s.AMatrix().transpose()).norm() < 1e-15);
  CHECK(s.AMatrix()(Z_U, Z_ZETA) == doctest::Approx(-0.1));
  CHECK(s.AMatrix()(Z_ETA, Z_V) == doctest::Approx(0.4));
  CHECK(s.Alpha() == doctest::Approx(0.5));
  CHECK(MspStructure::Symmetric(0.5).M() == doctest::Approx(-0.25));
  CHECK_THROWS_AS(MspStructure(0.3, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(MspStructure(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("interface identity gaps")
{
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 2000; trial++)
  {
    const double m = u(rng);
    double alpha = u(rng);
    if (alpha == 0.0)
    {
      alpha = 0.5;
    }
    const MspStructure s(m, m + alpha);
    const auto tu = RandomTraces(rng), tv = RandomTraces(rng);
    const auto [gl, gr] = InterfaceIdentityGap(tu, tv, s);
    const double scale = (tu.minus.norm() + tu.plus.norm()) * (tv.minus.norm() + tv.plus.norm());
    CHECK(std::abs(gl) <= 1e-12 * scale);
    CHECK(std::abs(gr) <= 1e-12 * scale);
  }
}

TEST_CASE("flux form special cases")
{
  std::mt19937_64 rng(5);
  const auto s = MspStructure::Symmetric(0.5);
  // Continuous traces, U = V: {KU.U} = 0 by antisymmetry and the hat terms cancel.
  auto t = RandomTraces(rng);
  t.plus = t.minus;
  CHECK(std::abs(FluxForm(t, t, s)) < 1e-14);

  const auto zero = s.WithK(Mat6::Zero());
  const auto tu = RandomTraces(rng), tv = RandomTraces(rng);
  CHECK(FluxForm(tu, tv, zero) == 0.0);
  const auto [gl, gr] = InterfaceIdentityGap(tu, tv, zero);
  CHECK(gl == 0.0);
  CHECK(gr == 0.0);
}

TEST_CASE("closing the constraints")
{
  const int k = 2, n = 7;
  const auto mesh = UniformMesh1D(0.0, 2 * pi, n);
  const double h = 2 * pi / n;
  const auto s = MspStructure::Symmetric(0.5);
  const MspDiscretization disc(mesh, BasisSpec(k), s);
  const std::size_t size = disc.BlockSize();
  std::mt19937_64 rng(8);

  auto u = oracle::RandomVector(rng, size), eta = oracle::RandomVector(rng, size);
  std::vector<double> v(size, 0.0), zeta(size, 0.0);
  for (int j = 0; j < n; j++)
  {
    v[j * (k + 1)] = 1.5;
    zeta[j * (k + 1)] = -0.5;
  }
  auto z = disc.Close(u, eta, v, zeta);
  for (std::size_t i = 0; i < size; i++)
  {
    CHECK(std::abs(z[Z_P][i] - u[i]) < 1e-12);
    CHECK(std::abs(z[Z_Q][i] - eta[i]) < 1e-12);
  }
  CHECK(disc.ClosureDefect(z) < 1e-15);

  const std::vector<double> zeros(size, 0.0);
  z = disc.Close(zeros, zeros, zeros, zeros);
  for (int b = 0; b < 6; b++)
  {
    for (double x : z[b])
    {
      CHECK(x == 0.0);
    }
  }

  // P = u + D(2m) zeta / 2 from the weak-form oracle.
  zeta = oracle::RandomVector(rng, size);
  v = oracle::RandomVector(rng, size);
  z = disc.Close(u, eta, v, zeta);
  const Eigen::MatrixXd dz = oracle::WeakDerivative(n, h, k, 2 * s.M());
  const Eigen::MatrixXd dv = oracle::WeakDerivative(n, h, k, 2 * s.N());
  const Eigen::VectorXd pz = dz * Eigen::Map<const Eigen::VectorXd>(zeta.data(), size);
  const Eigen::VectorXd qv = dv * Eigen::Map<const Eigen::VectorXd>(v.data(), size);
  for (std::size_t i = 0; i < size; i++)
  {
    CHECK(std::abs(z[Z_P][i] - (u[i] + 0.5 * pz[i])) < 1e-10);
    CHECK(std::abs(z[Z_Q][i] - (eta[i] + 0.5 * qv[i])) < 1e-10);
  }

  z[Z_P][3] += 1.0;
  CHECK(disc.ClosureDefect(z) > 1e-3);
  CHECK_THROWS_AS(disc.ConservationResidual(z, z), std::invalid_argument);
}

TEST_CASE("z-system drift")
{
  const int k = 1, n = 6;
  const auto mesh = UniformMesh1D(0.0, 2 * pi, n);
  const MspDiscretization disc(mesh, BasisSpec(k), MspStructure(0.2, -0.3));
  const std::size_t size = disc.BlockSize();
  std::mt19937_64 rng(2);
  const std::vector<double> zeros(size, 0.0);

  auto d = disc.Drift(disc.Close(zeros, zeros, oracle::RandomVector(rng, size),
                                 oracle::RandomVector(rng, size)));
  for (int b = 0; b < 6; b++)
  {
    for (double x : d[b])
    {
      CHECK(std::abs(x) < 1e-13);
    }
  }

  std::vector<double> u(size, 0.0), eta(size, 0.0);
  for (int j = 0; j < n; j++)
  {
    u[j * (k + 1)] = 0.8;
    eta[j * (k + 1)] = -1.1;
  }
  d = disc.Drift(disc.Close(u, eta, zeros, zeros));
  for (std::size_t i = 0; i < size; i++)
  {
    CHECK(std::abs(d[Z_P][i]) < 1e-13);
    CHECK(std::abs(d[Z_Q][i]) < 1e-13);
    CHECK(d[Z_V][i] == u[i]);
    CHECK(d[Z_ZETA][i] == eta[i]);
  }
}

TEST_CASE("eliminating the auxiliary fields recovers the 1D scheme")
{
  const int k = 2, n = 9;
  const auto mesh = UniformMesh1D(0.0, 2 * pi, n);
  std::mt19937_64 rng(13);
  for (double alpha : {0.5, -0.5, 0.25, -0.25, 1.0})
  {
    for (double m : {-0.5 * alpha, 0.1, -0.7})
    {
      const MspStructure s(m, m + alpha);
      const MspDiscretization disc(mesh, BasisSpec(k), s);
      const std::size_t size = disc.BlockSize();
      const auto z = disc.Close(oracle::RandomVector(rng, size), oracle::RandomVector(rng, size),
                                oracle::RandomVector(rng, size), oracle::RandomVector(rng, size));
      const auto d = disc.Drift(z);
      // u' = P' - D(2m) eta / 2 and eta' = Q' - D(2n) u / 2, using zeta' = eta and v' = u.
      const Eigen::MatrixXd dz = oracle::WeakDerivative(n, 2 * pi / n, k, 2 * s.M());
      const Eigen::MatrixXd dv = oracle::WeakDerivative(n, 2 * pi / n, k, 2 * s.N());
      const Eigen::VectorXd ev = Eigen::Map<const Eigen::VectorXd>(z[Z_ETA].data(), size);
      const Eigen::VectorXd uv = Eigen::Map<const Eigen::VectorXd>(z[Z_U].data(), size);
      const Eigen::VectorXd du =
          Eigen::Map<const Eigen::VectorXd>(d[Z_P].data(), size) - 0.5 * dz * ev;
      const Eigen::VectorXd deta =
          Eigen::Map<const Eigen::VectorXd>(d[Z_Q].data(), size) - 0.5 * dv * uv;

      const Maxwell1D sys(mesh, BasisSpec(k), alpha, 0.0, 0.0, StandardBrownianNoise(0, 2 * pi));
      std::vector<double> ru(size, 0.0), reta(size, 0.0);
      sys.AddB(z[Z_ETA], 1.0, ru);
      sys.AddA(z[Z_U], 1.0, reta);
      double scale = 0.0;
      for (std::size_t i = 0; i < size; i++)
      {
        scale = std::max({scale, std::abs(ru[i]), std::abs(reta[i])});
      }
      for (std::size_t i = 0; i < size; i++)
      {
        CHECK(std::abs(du[i] - ru[i]) <= 1e-11 * scale);
        CHECK(std::abs(deta[i] - reta[i]) <= 1e-11 * scale);
      }
    }
  }
}

TEST_CASE("discrete multi-symplectic conservation")
{
  std::mt19937_64 rng(21);
  const auto mesh = UniformMesh1D(0.0, 2 * pi, 8);
  for (double alpha : {0.5, -0.5, 0.25, -0.25, 1.0})
  {
    for (int k : {0, 1, 2, 3})
    {
      const MspDiscretization disc(mesh, BasisSpec(k), MspStructure::Symmetric(alpha));
      const std::size_t size = disc.BlockSize();
      auto closed = [&]
      {
        return disc.Close(oracle::RandomVector(rng, size), oracle::RandomVector(rng, size),
                          oracle::RandomVector(rng, size), oracle::RandomVector(rng, size));
      };
      const auto u = closed(), v = closed();
      const auto r = disc.ConservationResidual(u, v);
      const auto sc = disc.ResidualScale(u, v);
      double smax = 0.0, total = 0.0;
      for (double x : sc)
      {
        smax = std::max(smax, x);
      }
      for (double x : r)
      {
        CHECK(std::abs(x) <= 1e-10 * smax);
        total += x;
      }
      CHECK(std::abs(total) <= 1e-10 * smax);

      const std::vector<double> zeros(size, 0.0);
      const auto z0 = disc.Close(zeros, zeros, zeros, zeros);
      for (double x : disc.ConservationResidual(z0, v))
      {
        CHECK(x == 0.0);
      }
    }
  }
}
