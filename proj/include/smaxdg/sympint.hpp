// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_SYMPINT_HPP
#define SMAXDG_SYMPINT_HPP

#include <functional>
#include <string>
#include <vector>

#include "smaxdg/drift_system.hpp"
#include "smaxdg/qwiener.hpp"

namespace smaxdg
{

struct PQState
{
  std::vector<double> p, q;
  double t = 0.0;
};

enum class StepperKind
{
  SYMPLECTIC_EULER,
  PRK2,
  TAYLOR2_REF
};

std::string ToString(StepperKind kind);
StepperKind ParseStepperKind(const std::string &name);
bool NeedsJ(StepperKind kind);

//
// One-step maps for a DriftSystem. The stepper owns its work vectors, so use one instance
// per sample path; the system itself is shared read-only.
//
//   SYMPLECTIC_EULER  p' = p + tau A q + L dB,  q' = q + tau B p' + N dB
//   PRK2              two-stage partitioned Runge-Kutta driven by (dB, J)
//   TAYLOR2_REF       p' = p + tau A (q + tau/2 B p + N J) + L dB,
//                     q' = q + tau B (p + tau/2 A q + L J) + N dB
//
class Stepper
{
public:
  Stepper(const DriftSystem &sys, StepperKind kind);

  StepperKind Kind() const { return kind_; }

  // Advances state by inc.tau using the increments in inc.
  void Step(PQState &state, const NoiseIncrement &inc);

private:
  void StepSymplecticEuler(PQState &s, const NoiseIncrement &inc);
  void StepPrk2(PQState &s, const NoiseIncrement &inc);
  void StepTaylor2(PQState &s, const NoiseIncrement &inc);

  const DriftSystem &sys_;
  StepperKind kind_;
  std::vector<double> l_db_, n_db_, l_j_, n_j_;
  std::vector<double> p1_, q1_, q2_, aq1_, aq2_, bp1_, bp2_;
};

PQState StepSymplecticEuler(const PQState &state, const DriftSystem &sys,
                            const NoiseIncrement &inc);
PQState StepPrk2(const PQState &state, const DriftSystem &sys, const NoiseIncrement &inc);
PQState StepTaylor2Ref(const PQState &state, const DriftSystem &sys, const NoiseIncrement &inc);

// Called after every step with (step index starting at 1, state).
using StepObserver = std::function<void(int, const PQState &)>;

// Fixed-step integration with increments drawn from sampler.
PQState Integrate(const PQState &state0, const DriftSystem &sys, double tau, int n_steps,
                  StepperKind kind, NoiseSampler &sampler, const StepObserver &observer = {});

// Integration along a precomputed increment sequence.
PQState Integrate(const PQState &state0, const DriftSystem &sys,
                  std::span<const NoiseIncrement> increments, StepperKind kind,
                  const StepObserver &observer = {});

}  // namespace smaxdg

#endif  // SMAXDG_SYMPINT_HPP
