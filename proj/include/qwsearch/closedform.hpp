#pragma once

#include "qwsearch/model.hpp"

namespace qws::closedform {

// Phase arguments of the closed forms: A = delta + t*phi, B = delta - t*phi,
// and the parity offset h = ((-1)^t - 1)/2 (0 for even t, -1 for odd t).
struct PhaseArgs {
  double A = 0.0;
  double B = 0.0;
  int h = 0;
};

PhaseArgs phase_args(const model::SearchInstance& inst, long t);

// The exact state after t steps on the invariant basis. t = 0 uses the
// even branch and reproduces initial_amplitudes.
model::SubspaceAmplitudes state_at(const model::SearchInstance& inst, long t);

// Probability mass on arcs leaving marked vertices after t steps;
// always equals m_ab^2 of state_at.
double success_probability(const model::SearchInstance& inst, long t);

// l1 coherence of the t-step state in the invariant basis, via the
// closed trigonometric form.
double coherence_at(const model::SearchInstance& inst, long t);

// c / 3 for the four-dimensional subspace (l1 coherence is bounded by d-1).
// Throws OutOfRange above 3 + 1e-9.
double normalized_coherence(double c);

// P_t + C_l1(t) - target, where the asymptotic target is sin(2*theta) for
// the vertex-uniform start and 1 for the edge-uniform start. Reported,
// never asserted to vanish: the claim is asymptotic in n1, n2.
double complementarity_residual(const model::SearchInstance& inst, long t);

}  // namespace qws::closedform
