#pragma once

#include <vector>

#include "qwsearch/model.hpp"
#include "qwsearch/resources.hpp"

namespace qws::noise {

// Generalized depolarizing channel E(rho) = (1-alpha)/d * I + alpha * rho.
struct NoiseConfig {
  double alpha = 1.0;
};

NoiseConfig make_noise_config(double alpha);

resources::DensityMatrix depolarize(const resources::DensityMatrix& rho,
                                    const NoiseConfig& cfg);

// delta_0 = |psi(0)><psi(0)|, delta_t = U E(delta_{t-1}) U^dagger in the
// four-dimensional invariant subspace; U comes from the full simulator's
// extracted subspace operator. Returns delta_0 .. delta_{t_max}.
std::vector<resources::DensityMatrix> noisy_evolution(
    const model::SearchInstance& inst, const NoiseConfig& cfg, long t_max);

// <ab| delta_t |ab>, measured on the evolved density matrix.
double noisy_success_probability(const model::SearchInstance& inst,
                                 const NoiseConfig& cfg, long t);

// The closed counterpart (1 - alpha^t)/4 + alpha^t * P_t.
double noisy_success_closed(const model::SearchInstance& inst,
                            const NoiseConfig& cfg, long t);

// l1 coherence of delta_t, measured on the evolved density matrix.
double noisy_coherence(const model::SearchInstance& inst,
                       const NoiseConfig& cfg, long t);

// The closed counterpart alpha^t * C_l1(rho_t).
double noisy_coherence_closed(const model::SearchInstance& inst,
                              const NoiseConfig& cfg, long t);

}  // namespace qws::noise
