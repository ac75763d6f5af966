#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwsearch/model.hpp"

namespace qws::resources {

// Hermitian, trace-one, positive-semidefinite matrix.
using DensityMatrix = Eigen::MatrixXcd;

// Pure state over m qubits, big-endian: qubit 0 is the most significant
// bit of the amplitude index.
struct QubitRegisterState {
  Eigen::VectorXcd amplitudes;
  int qubits = 0;
};

// Qubit encoding of the invariant basis: each vertex label takes n qubits,
// the first one flagging the partition (0 for X, 1 for Y), so the full
// walk state occupies 2n qubits (tail register then head register).
// Requires n1 = n2 = 2^(n-1) and k = 1; the marked vertex is the all-zeros
// X label.
struct EncodingParams {
  int n = 2;
};

// Brute-force caps: pair and subset enumerations stay tractable.
inline constexpr int kMaxMeterQubits = 12;
// encode_subspace_state allocates 2^(2n) amplitudes; cap the register size.
inline constexpr int kMaxEncodeQubits = 24;

// Sum of |rho_ij| over i != j. For a pure state this equals
// (sum_i |c_i|)^2 - 1.
double l1_coherence(const DensityMatrix& rho);

// The four invariant-basis states written out over 2n qubits, combined
// with the given amplitudes. Unit norm for unit-norm input.
QubitRegisterState encode_subspace_state(const model::SubspaceAmplitudes& amps,
                                         const EncodingParams& p);

// Reduced density matrix on the kept qubit positions (given order).
DensityMatrix partial_trace(const QubitRegisterState& state,
                            const std::vector<int>& keep);

// Wootters concurrence of a two-qubit density matrix:
// max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
// eigenvalues of rho * rho_tilde, rho_tilde = (sy x sy) rho* (sy x sy).
// The square roots are computed as the singular values of L^T (sy x sy) L
// with rho = L L^dagger, which stays exact on rank-deficient input.
double wootters_concurrence(const DensityMatrix& rho);

// Sum of wootters_concurrence over all two-qubit reductions of the state.
double pairwise_concurrence_sum(const QubitRegisterState& state);

// Closed-form counterpart of the pairwise sum for encoded walk states:
//   max(m1 m2 / D + (sqrt(D-1)/D)(m1 m3 + m2 m4) + ((D-1)/D) m3 m4, 0)
// with D = 2^(n-1). Approximate: the brute-force sum is the ground truth
// (see the per-pair diagnostics in the validation suite).
double sC_closed_form(const model::SubspaceAmplitudes& amps, int n);

// Multipartite concurrence 2*sqrt((2^m - 2 - S)/2^m) where S sums the
// purities of all proper nonempty qubit subsets. The default reduction
// pairs each subset with its complement (equal purity for pure states);
// the full enumeration is kept for cross-checking.
double multipartite_concurrence(const QubitRegisterState& state);
double multipartite_concurrence_fullsum(const QubitRegisterState& state);

// Purity of the reduction onto the given subset.
double subset_purity(const QubitRegisterState& state,
                     const std::vector<int>& keep);

enum class Parity { Even, Odd, All };

struct ResourceRow {
  long t = 0;
  double P = 0.0;
  double C_l1 = 0.0;
  double C_norm = 0.0;
  double sC_closed = 0.0;
  std::optional<double> sC_brute;
  std::optional<double> MC;
};

// Per-step resource traces driven by the closed-form state. Brute-force
// columns (sC_brute, MC) are filled only when 2n <= kMaxMeterQubits.
// Throws EncodingMismatch unless n1 = n2 = 2^(n-1) and k = 1.
std::vector<ResourceRow> resource_series(const model::SearchInstance& inst,
                                         const EncodingParams& p, long t_max,
                                         Parity parity);

}  // namespace qws::resources
