#include "qwsearch/resources.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qwsearch/closedform.hpp"

namespace qws::resources {

namespace {

// sigma_y tensor sigma_y; real despite the complex factors.
const Eigen::Matrix4cd kSpinFlip = [] {
  Eigen::Matrix4cd m;
  m << 0, 0, 0, -1,
       0, 0, 1, 0,
       0, 1, 0, 0,
       -1, 0, 0, 0;
  return m;
}();

void check_positions(const QubitRegisterState& state,
                     const std::vector<int>& keep) {
  if (keep.empty()) {
    throw InvalidQubitIndex("keep set must be nonempty");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= state.qubits) {
      throw InvalidQubitIndex("qubit position " + std::to_string(keep[i]) +
                              " outside register of " +
                              std::to_string(state.qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (keep[j] == keep[i]) {
        throw InvalidQubitIndex("duplicate qubit position " +
                                std::to_string(keep[i]));
      }
    }
  }
}

// Regroups the amplitudes as a (2^|keep|) x (2^rest) matrix whose Gram
// matrix is the reduced density matrix on the kept qubits.
Eigen::MatrixXcd group_amplitudes(const QubitRegisterState& state,
                                  const std::vector<int>& keep) {
  const int m = state.qubits;
  const int nk = static_cast<int>(keep.size());
  std::vector<int> rest;
  rest.reserve(m - nk);
  for (int q = 0; q < m; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
      rest.push_back(q);
    }
  }
  const long dk = 1L << nk;
  const long dr = 1L << (m - nk);
  Eigen::MatrixXcd grouped(dk, dr);
  const long dim = 1L << m;
  for (long x = 0; x < dim; ++x) {
    long r = 0;
    for (int b = 0; b < nk; ++b) {
      r = (r << 1) | ((x >> (m - 1 - keep[b])) & 1L);
    }
    long e = 0;
    for (int q : rest) {
      e = (e << 1) | ((x >> (m - 1 - q)) & 1L);
    }
    grouped(r, e) = state.amplitudes[x];
  }
  return grouped;
}

void check_meter_cap(const QubitRegisterState& state) {
  if (state.qubits > kMaxMeterQubits) {
    throw TooManyQubits("brute-force meters are capped at " +
                        std::to_string(kMaxMeterQubits) + " qubits; got " +
                        std::to_string(state.qubits));
  }
}

double purity_of_grouped(const Eigen::MatrixXcd& grouped) {
  // Tr(rho^2) with rho = G G^dagger equals the squared Frobenius norm of
  // G^dagger G computed on the smaller side.
  if (grouped.rows() <= grouped.cols()) {
    return (grouped * grouped.adjoint()).squaredNorm();
  }
  return (grouped.adjoint() * grouped).squaredNorm();
}

}  // namespace

double l1_coherence(const DensityMatrix& rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (i != j) {
        sum += std::abs(rho(i, j));
      }
    }
  }
  return sum;
}

QubitRegisterState encode_subspace_state(const model::SubspaceAmplitudes& amps,
                                         const EncodingParams& p) {
  const int n = p.n;
  if (n < 2) {
    throw EncodingMismatch("label registers need n >= 2 qubits; got n=" +
                           std::to_string(n));
  }
  if (2 * n > kMaxEncodeQubits) {
    throw TooManyQubits("encoded register of " + std::to_string(2 * n) +
                        " qubits exceeds the cap " +
                        std::to_string(kMaxEncodeQubits));
  }
  const long labels = 1L << (n - 1);  // vertices per partition
  const long half = 1L << n;          // register values per side
  const long dim = half * half;
  QubitRegisterState state{Eigen::VectorXcd::Zero(dim), 2 * n};
  const double wm = 1.0 / std::sqrt(static_cast<double>(labels));
  const double wu =
      1.0 / std::sqrt(static_cast<double>(labels) * (labels - 1));
  const auto index = [half](long tail, long head) {
    return tail * half + head;
  };
  const long marked = 0;  // X flag 0, all-zeros label
  for (long w = 0; w < labels; ++w) {
    const long y = labels + w;  // Y flag 1, label w
    state.amplitudes[index(marked, y)] += amps.m_ab * wm;
    state.amplitudes[index(y, marked)] += amps.m_ba * wm;
    for (long v = 1; v < labels; ++v) {
      state.amplitudes[index(y, v)] += amps.m_bc * wu;
      state.amplitudes[index(v, y)] += amps.m_cb * wu;
    }
  }
  return state;
}

DensityMatrix partial_trace(const QubitRegisterState& state,
                            const std::vector<int>& keep) {
  check_positions(state, keep);
  const Eigen::MatrixXcd grouped = group_amplitudes(state, keep);
  return grouped * grouped.adjoint();
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw NotTwoQubit("wootters_concurrence expects a 4x4 density matrix");
  }
  const Eigen::Matrix4cd r = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
  const Eigen::Vector4d lam = es.eigenvalues();
  // Thin factor rho = L L^dagger. The sqrt-eigenvalues of rho*rho_tilde are
  // the singular values of L^T (sy x sy) L; unlike the sqrt(rho) sandwich,
  // this keeps full precision on rank-deficient input.
  const double cutoff = std::max(lam.maxCoeff(), 0.0) * 1e-12;
  std::vector<int> keep;
  for (int i = 0; i < 4; ++i) {
    if (lam[i] > cutoff) {
      keep.push_back(i);
    }
  }
  if (keep.empty()) {
    return 0.0;
  }
  Eigen::MatrixXcd l(4, static_cast<long>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    l.col(static_cast<long>(j)) =
        es.eigenvectors().col(keep[j]) * std::sqrt(lam[keep[j]]);
  }
  const Eigen::MatrixXcd t = l.transpose() * kSpinFlip * l;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
  const auto& sv = svd.singularValues();
  double c = sv[0];
  for (long i = 1; i < sv.size(); ++i) {
    c -= sv[i];
  }
  return std::max(0.0, c);
}

double pairwise_concurrence_sum(const QubitRegisterState& state) {
  check_meter_cap(state);
  double sum = 0.0;
  for (int i = 0; i < state.qubits; ++i) {
    for (int j = i + 1; j < state.qubits; ++j) {
      sum += wootters_concurrence(partial_trace(state, {i, j}));
    }
  }
  return sum;
}

double sC_closed_form(const model::SubspaceAmplitudes& amps, int n) {
  const double d = static_cast<double>(1L << (n - 1));
  const double v = amps.m_ab * amps.m_ba / d +
                   std::sqrt(d - 1.0) / d *
                       (amps.m_ab * amps.m_bc + amps.m_ba * amps.m_cb) +
                   (d - 1.0) / d * amps.m_bc * amps.m_cb;
  return std::max(v, 0.0);
}

double subset_purity(const QubitRegisterState& state,
                     const std::vector<int>& keep) {
  check_positions(state, keep);
  return purity_of_grouped(group_amplitudes(state, keep));
}

namespace {

double mc_from_purity_sum(int m, double sum) {
  const double total = static_cast<double>(1L << m);
  return 2.0 * std::sqrt(std::max(total - 2.0 - sum, 0.0) / total);
}

double purity_sum_halved(const QubitRegisterState& state) {
  // For a pure global state every subset has the purity of its complement,
  // so it suffices to visit one side of each complement pair: all subsets
  // of size below m/2, and when m is even the half-size subsets containing
  // qubit 0.
  const int m = state.qubits;
  double sum = 0.0;
  for (long mask = 1; mask < (1L << m) - 1; ++mask) {
    const int size = __builtin_popcountl(mask);
    const bool half = 2 * size == m;
    if (2 * size > m || (half && !(mask & (1L << (m - 1))))) {
      continue;  // the complement is (or was) visited instead
    }
    std::vector<int> keep;
    keep.reserve(size);
    for (int q = 0; q < m; ++q) {
      if (mask & (1L << (m - 1 - q))) {
        keep.push_back(q);
      }
    }
    sum += 2.0 * subset_purity(state, keep);
  }
  return sum;
}

}  // namespace

double multipartite_concurrence(const QubitRegisterState& state) {
  check_meter_cap(state);
  return mc_from_purity_sum(state.qubits, purity_sum_halved(state));
}

double multipartite_concurrence_fullsum(const QubitRegisterState& state) {
  check_meter_cap(state);
  const int m = state.qubits;
  double sum = 0.0;
  for (long mask = 1; mask < (1L << m) - 1; ++mask) {
    std::vector<int> keep;
    for (int q = 0; q < m; ++q) {
      if (mask & (1L << (m - 1 - q))) {
        keep.push_back(q);
      }
    }
    sum += subset_purity(state, keep);
  }
  return mc_from_purity_sum(m, sum);
}

std::vector<ResourceRow> resource_series(const model::SearchInstance& inst,
                                         const EncodingParams& p, long t_max,
                                         Parity parity) {
  const long labels = 1L << (p.n - 1);
  if (inst.n1 != labels || inst.n2 != labels || inst.k != 1) {
    throw EncodingMismatch(
        "the qubit encoding requires n1 = n2 = 2^(n-1) and k = 1; got n1=" +
        std::to_string(inst.n1) + ", n2=" + std::to_string(inst.n2) +
        ", k=" + std::to_string(inst.k) + " for n=" + std::to_string(p.n));
  }
  const bool brute = 2 * p.n <= kMaxMeterQubits;
  std::vector<ResourceRow> rows;
  for (long t = 0; t <= t_max; ++t) {
    if ((parity == Parity::Even && t % 2 != 0) ||
        (parity == Parity::Odd && t % 2 == 0)) {
      continue;
    }
    const auto amps = closedform::state_at(inst, t);
    ResourceRow row;
    row.t = t;
    row.P = closedform::success_probability(inst, t);
    row.C_l1 = closedform::coherence_at(inst, t);
    row.C_norm = closedform::normalized_coherence(row.C_l1);
    row.sC_closed = sC_closed_form(amps, p.n);
    if (brute) {
      const QubitRegisterState psi = encode_subspace_state(amps, p);
      row.sC_brute = pairwise_concurrence_sum(psi);
      row.MC = multipartite_concurrence(psi);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qws::resources
