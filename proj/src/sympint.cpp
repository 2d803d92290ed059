// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/sympint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smaxdg
{

std::string ToString(StepperKind kind)
{
  switch (kind)
  {
    case StepperKind::SYMPLECTIC_EULER:
      return "symplectic-euler";
    case StepperKind::PRK2:
      return "prk2";
    case StepperKind::TAYLOR2_REF:
      return "taylor2";
  }
  return "unknown";
}

StepperKind ParseStepperKind(const std::string &name)
{
  if (name == "symplectic-euler" || name == "se")
  {
    return StepperKind::SYMPLECTIC_EULER;
  }
  if (name == "prk2" || name == "prk")
  {
    return StepperKind::PRK2;
  }
  if (name == "taylor2" || name == "taylor")
  {
    return StepperKind::TAYLOR2_REF;
  }
  throw std::invalid_argument("Unknown stepper '" + name + "'");
}

bool NeedsJ(StepperKind kind)
{
  return kind != StepperKind::SYMPLECTIC_EULER;
}

Stepper::Stepper(const DriftSystem &sys, StepperKind kind) : sys_(sys), kind_(kind)
{
  const std::size_t np = sys.PSize(), nq = sys.QSize();
  l_db_.resize(np);
  n_db_.resize(nq);
  if (NeedsJ(kind))
  {
    l_j_.resize(np);
    n_j_.resize(nq);
    p1_.resize(np);
    q1_.resize(nq);
    aq1_.resize(np);
    bp1_.resize(nq);
  }
  if (kind == StepperKind::PRK2)
  {
    q2_.resize(nq);
    aq2_.resize(np);
    bp2_.resize(nq);
  }
}

void Stepper::Step(PQState &state, const NoiseIncrement &inc)
{
  if (state.p.size() != sys_.PSize() || state.q.size() != sys_.QSize())
  {
    throw std::invalid_argument("State size does not match the system");
  }
  if (inc.dB.size() != std::size_t(sys_.NumModes()))
  {
    throw std::invalid_argument("Increment mode count does not match the system");
  }
  if (!(inc.tau > 0.0))
  {
    throw std::invalid_argument("Time step must be positive");
  }
  if (NeedsJ(kind_) && !inc.HasJ())
  {
    throw std::invalid_argument(ToString(kind_) + " needs the time-averaged increment J");
  }
  switch (kind_)
  {
    case StepperKind::SYMPLECTIC_EULER:
      StepSymplecticEuler(state, inc);
      break;
    case StepperKind::PRK2:
      StepPrk2(state, inc);
      break;
    case StepperKind::TAYLOR2_REF:
      StepTaylor2(state, inc);
      break;
  }
  state.t += inc.tau;
}

void Stepper::StepSymplecticEuler(PQState &s, const NoiseIncrement &inc)
{
  const double tau = inc.tau;
  sys_.NoiseLoads(inc.dB, l_db_, n_db_);
  sys_.AddA(s.q, tau, s.p);
  for (std::size_t i = 0; i < s.p.size(); i++)
  {
    s.p[i] += l_db_[i];
  }
  sys_.AddB(s.p, tau, s.q);
  for (std::size_t i = 0; i < s.q.size(); i++)
  {
    s.q[i] += n_db_[i];
  }
}

void Stepper::StepPrk2(PQState &s, const NoiseIncrement &inc)
{
  const double tau = inc.tau;
  const double c1 = 1.0 / std::sqrt(2.0);          // Q1: J + dB / sqrt(2)
  const double c2 = 1.0 / (2.0 * std::sqrt(3.0));  // P1: J + dB / (2 sqrt(3))
  const double c3 = -1.0 / (3.0 * std::sqrt(2.0)); // Q2: J - dB / (3 sqrt(2))
  const double c4 = -1.0 / std::sqrt(3.0);         // P2: J - dB / sqrt(3)
  sys_.NoiseLoads(inc.dB, l_db_, n_db_);
  sys_.NoiseLoads(inc.J, l_j_, n_j_);
  const std::size_t np = s.p.size(), nq = s.q.size();

  for (std::size_t i = 0; i < nq; i++)
  {
    q1_[i] = s.q[i] + n_j_[i] + c1 * n_db_[i];
  }
  std::fill(aq1_.begin(), aq1_.end(), 0.0);
  sys_.AddA(q1_, 1.0, aq1_);
  for (std::size_t i = 0; i < np; i++)
  {
    p1_[i] = s.p[i] + 0.25 * tau * aq1_[i] + l_j_[i] + c2 * l_db_[i];
  }
  std::fill(bp1_.begin(), bp1_.end(), 0.0);
  sys_.AddB(p1_, 1.0, bp1_);
  for (std::size_t i = 0; i < nq; i++)
  {
    q2_[i] = s.q[i] + (2.0 * tau / 3.0) * bp1_[i] + n_j_[i] + c3 * n_db_[i];
  }
  std::fill(aq2_.begin(), aq2_.end(), 0.0);
  sys_.AddA(q2_, 1.0, aq2_);
  // p1_ now holds P2; the drift combination is shared with the final p update.
  for (std::size_t i = 0; i < np; i++)
  {
    const double drift = tau * (0.25 * aq1_[i] + 0.75 * aq2_[i]);
    p1_[i] = s.p[i] + drift + l_j_[i] + c4 * l_db_[i];
    s.p[i] += l_db_[i] + drift;
  }
  std::fill(bp2_.begin(), bp2_.end(), 0.0);
  sys_.AddB(p1_, 1.0, bp2_);
  for (std::size_t i = 0; i < nq; i++)
  {
    s.q[i] += n_db_[i] + tau * ((2.0 / 3.0) * bp1_[i] + (1.0 / 3.0) * bp2_[i]);
  }
}

void Stepper::StepTaylor2(PQState &s, const NoiseIncrement &inc)
{
  const double tau = inc.tau;
  sys_.NoiseLoads(inc.dB, l_db_, n_db_);
  sys_.NoiseLoads(inc.J, l_j_, n_j_);
  // q1_ = q + tau/2 B p + N J, p1_ = p + tau/2 A q + L J, both from the old state.
  for (std::size_t i = 0; i < s.q.size(); i++)
  {
    q1_[i] = s.q[i] + n_j_[i];
  }
  sys_.AddB(s.p, 0.5 * tau, q1_);
  for (std::size_t i = 0; i < s.p.size(); i++)
  {
    p1_[i] = s.p[i] + l_j_[i];
  }
  sys_.AddA(s.q, 0.5 * tau, p1_);
  sys_.AddA(q1_, tau, s.p);
  sys_.AddB(p1_, tau, s.q);
  for (std::size_t i = 0; i < s.p.size(); i++)
  {
    s.p[i] += l_db_[i];
  }
  for (std::size_t i = 0; i < s.q.size(); i++)
  {
    s.q[i] += n_db_[i];
  }
}

namespace
{

PQState StepOnce(const PQState &state, const DriftSystem &sys, const NoiseIncrement &inc,
                 StepperKind kind)
{
  PQState out = state;
  Stepper(sys, kind).Step(out, inc);
  return out;
}

}  // namespace

PQState StepSymplecticEuler(const PQState &state, const DriftSystem &sys,
                            const NoiseIncrement &inc)
{
  return StepOnce(state, sys, inc, StepperKind::SYMPLECTIC_EULER);
}

PQState StepPrk2(const PQState &state, const DriftSystem &sys, const NoiseIncrement &inc)
{
  return StepOnce(state, sys, inc, StepperKind::PRK2);
}

PQState StepTaylor2Ref(const PQState &state, const DriftSystem &sys, const NoiseIncrement &inc)
{
  return StepOnce(state, sys, inc, StepperKind::TAYLOR2_REF);
}

PQState Integrate(const PQState &state0, const DriftSystem &sys, double tau, int n_steps,
                  StepperKind kind, NoiseSampler &sampler, const StepObserver &observer)
{
  if (n_steps < 0)
  {
    throw std::invalid_argument("Number of steps must be non-negative");
  }
  if (sampler.NumModes() != sys.NumModes())
  {
    throw std::invalid_argument("Sampler mode count does not match the system");
  }
  PQState s = state0;
  Stepper stepper(sys, kind);
  NoiseIncrement inc;
  for (int n = 1; n <= n_steps; n++)
  {
    sampler.Sample(tau, NeedsJ(kind), inc);
    stepper.Step(s, inc);
    if (observer)
    {
      observer(n, s);
    }
  }
  return s;
}

PQState Integrate(const PQState &state0, const DriftSystem &sys,
                  std::span<const NoiseIncrement> increments, StepperKind kind,
                  const StepObserver &observer)
{
  PQState s = state0;
  Stepper stepper(sys, kind);
  int n = 0;
  for (const auto &inc : increments)
  {
    stepper.Step(s, inc);
    if (observer)
    {
      observer(++n, s);
    }
  }
  return s;
}

}  // namespace smaxdg
