#include "qwsearch/noise.hpp"

#include <cmath>
#include <string>

#include "qwsearch/closedform.hpp"
#include "qwsearch/fullsim.hpp"

namespace qws::noise {

using resources::DensityMatrix;

NoiseConfig make_noise_config(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw OutOfRange("depolarizing retention must lie in [0, 1]; got " +
                     std::to_string(alpha));
  }
  return NoiseConfig{alpha};
}

DensityMatrix depolarize(const DensityMatrix& rho, const NoiseConfig& cfg) {
  const double d = static_cast<double>(rho.rows());
  return (1.0 - cfg.alpha) / d *
             DensityMatrix::Identity(rho.rows(), rho.cols()) +
         cfg.alpha * rho;
}

std::vector<DensityMatrix> noisy_evolution(const model::SearchInstance& inst,
                                           const NoiseConfig& cfg,
                                           long t_max) {
  const Eigen::Matrix4cd u =
      fullsim::extract_subspace_operator(inst).cast<std::complex<double>>();
  const Eigen::Vector4d m0 = model::initial_amplitudes(inst).vec();
  const Eigen::Vector4cd psi0 = m0.cast<std::complex<double>>();
  std::vector<DensityMatrix> out;
  out.reserve(t_max + 1);
  DensityMatrix rho = psi0 * psi0.adjoint();
  out.push_back(rho);
  for (long t = 1; t <= t_max; ++t) {
    rho = u * depolarize(rho, cfg) * u.adjoint();
    out.push_back(rho);
  }
  return out;
}

double noisy_success_probability(const model::SearchInstance& inst,
                                 const NoiseConfig& cfg, long t) {
  const auto traj = noisy_evolution(inst, cfg, t);
  return traj.back()(0, 0).real();
}

double noisy_success_closed(const model::SearchInstance& inst,
                            const NoiseConfig& cfg, long t) {
  const double at = std::pow(cfg.alpha, static_cast<double>(t));
  return (1.0 - at) / 4.0 + at * closedform::success_probability(inst, t);
}

double noisy_coherence(const model::SearchInstance& inst,
                       const NoiseConfig& cfg, long t) {
  const auto traj = noisy_evolution(inst, cfg, t);
  return resources::l1_coherence(traj.back());
}

double noisy_coherence_closed(const model::SearchInstance& inst,
                              const NoiseConfig& cfg, long t) {
  const double at = std::pow(cfg.alpha, static_cast<double>(t));
  return at * closedform::coherence_at(inst, t);
}

}  // namespace qws::noise
