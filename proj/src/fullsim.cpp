#include "qwsearch/fullsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qws::fullsim {

using model::SearchInstance;
using model::SubspaceAmplitudes;

namespace {

constexpr double kLeakTol = 1e-8;
constexpr double kImagTol = 1e-10;

void check_arc_cap(const SearchInstance& inst) {
  const long dim = arc_dimension(inst);
  if (dim > kArcDimCap) {
    throw DimensionTooLarge("arc dimension " + std::to_string(dim) +
                            " exceeds the cap " + std::to_string(kArcDimCap));
  }
}

}  // namespace

long arc_dimension(const SearchInstance& inst) {
  return 2L * inst.n1 * inst.n2;
}

long arc_linear_index(const SearchInstance& inst, const ArcIndex& arc) {
  const long n1 = inst.n1, n2 = inst.n2;
  if (arc.tail < n1) {
    return arc.tail * n2 + (arc.head - n1);
  }
  return n1 * n2 + (arc.tail - n1) * n1 + arc.head;
}

ArcIndex arc_from_linear(const SearchInstance& inst, long index) {
  const long n1 = inst.n1, n2 = inst.n2;
  if (index < n1 * n2) {
    return ArcIndex{static_cast<int>(index / n2),
                    static_cast<int>(n1 + index % n2)};
  }
  const long r = index - n1 * n2;
  return ArcIndex{static_cast<int>(n1 + r / n1), static_cast<int>(r % n1)};
}

SubspaceBasis subspace_basis(const SearchInstance& inst) {
  check_arc_cap(inst);
  const long n1 = inst.n1, n2 = inst.n2, k = inst.k;
  const long dim = arc_dimension(inst);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, 4);
  const double wm = 1.0 / std::sqrt(static_cast<double>(k * n2));
  const double wu = 1.0 / std::sqrt(static_cast<double>((n1 - k) * n2));
  for (long x = 0; x < n1; ++x) {
    for (long y = 0; y < n2; ++y) {
      const long xy = x * n2 + y;            // X->Y arc
      const long yx = n1 * n2 + y * n1 + x;  // Y->X arc
      if (x < k) {
        b(xy, 0) = wm;  // |ab>
        b(yx, 1) = wm;  // |ba>
      } else {
        b(yx, 2) = wu;  // |bc>
        b(xy, 3) = wu;  // |cb>
      }
    }
  }
  return SubspaceBasis{std::move(b)};
}

StepOperator::StepOperator(SearchInstance inst, bool with_oracle)
    : inst_(inst), with_oracle_(with_oracle) {
  check_arc_cap(inst_);
}

long StepOperator::dim() const { return arc_dimension(inst_); }

void StepOperator::apply_in_place(ArcState& psi) const {
  const long n1 = inst_.n1, n2 = inst_.n2, k = inst_.k;
  // Oracle: flip the sign on arcs leaving a marked vertex. Marked vertices
  // occupy X ids 0..k-1, so their arcs form the leading block.
  if (with_oracle_) {
    psi.head(k * n2) = -psi.head(k * n2);
  }
  // Grover coin at every vertex: a -> 2*mean - a over the outgoing arcs.
  for (long x = 0; x < n1; ++x) {
    auto block = psi.segment(x * n2, n2);
    const std::complex<double> shift = 2.0 * block.mean();
    block = Eigen::VectorXcd::Constant(n2, shift) - block;
  }
  for (long y = 0; y < n2; ++y) {
    auto block = psi.segment(n1 * n2 + y * n1, n1);
    const std::complex<double> shift = 2.0 * block.mean();
    block = Eigen::VectorXcd::Constant(n1, shift) - block;
  }
  // Shift: swap |i,j> with |j,i>.
  for (long x = 0; x < n1; ++x) {
    for (long y = 0; y < n2; ++y) {
      std::swap(psi[x * n2 + y], psi[n1 * n2 + y * n1 + x]);
    }
  }
}

ArcState StepOperator::apply(const ArcState& psi) const {
  ArcState out = psi;
  apply_in_place(out);
  return out;
}

Eigen::MatrixXd StepOperator::dense() const {
  const long d = dim();
  if (d > kDenseCap) {
    throw DimensionTooLarge("dense step operator at dimension " +
                            std::to_string(d) + " exceeds the cap " +
                            std::to_string(kDenseCap));
  }
  Eigen::MatrixXd u(d, d);
  ArcState col(d);
  for (long j = 0; j < d; ++j) {
    col.setZero();
    col[j] = 1.0;
    apply_in_place(col);
    u.col(j) = col.real();
  }
  return u;
}

StepOperator build_step_operator(const SearchInstance& inst) {
  return StepOperator(inst, true);
}

StepOperator build_walk_operator(const SearchInstance& inst) {
  return StepOperator(inst, false);
}

ArcState embed_initial(const SearchInstance& inst) {
  check_arc_cap(inst);
  const long n1 = inst.n1, n2 = inst.n2;
  const long dim = arc_dimension(inst);
  ArcState psi(dim);
  if (inst.init == model::Init::VertexUniform) {
    // 1/sqrt(N) on each vertex, split evenly over its outgoing arcs.
    const double wx = 1.0 / std::sqrt(static_cast<double>((n1 + n2) * n2));
    const double wy = 1.0 / std::sqrt(static_cast<double>((n1 + n2) * n1));
    psi.head(n1 * n2).setConstant(wx);
    psi.tail(n1 * n2).setConstant(wy);
  } else {
    psi.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
  }
  return psi;
}

ArcState evolve(const SearchInstance& inst, long t) {
  const StepOperator u = build_step_operator(inst);
  ArcState psi = embed_initial(inst);
  for (long s = 0; s < t; ++s) {
    u.apply_in_place(psi);
  }
  return psi;
}

std::pair<SubspaceAmplitudes, double> project_to_subspace(
    const ArcState& state, const SubspaceBasis& basis) {
  // The basis columns are real, so <b_i|psi> splits into two real products.
  const Eigen::Vector4d re = basis.columns.transpose() * state.real();
  const Eigen::Vector4d im = basis.columns.transpose() * state.imag();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(im[i]) > kImagTol) {
      throw SubspaceLeak("projection produced imaginary overlap " +
                         std::to_string(im[i]));
    }
  }
  // Norm of the component outside the subspace, measured on the difference
  // vector: the squared-norm route loses half the digits to cancellation.
  const Eigen::VectorXd out_re = state.real() - basis.columns * re;
  const Eigen::VectorXd out_im = state.imag() - basis.columns * im;
  const double residual = std::sqrt(out_re.squaredNorm() + out_im.squaredNorm());
  return {SubspaceAmplitudes::from_vec(re), residual};
}

double success_probability_full(const ArcState& state,
                                const SearchInstance& inst) {
  return state.head(static_cast<long>(inst.k) * inst.n2).squaredNorm();
}

Eigen::Matrix4d extract_subspace_operator(const SearchInstance& inst) {
  const StepOperator u = build_step_operator(inst);
  const SubspaceBasis basis = subspace_basis(inst);
  const long dim = arc_dimension(inst);
  Eigen::MatrixXd ub(dim, 4);
  for (int j = 0; j < 4; ++j) {
    ArcState col = basis.columns.col(j).cast<std::complex<double>>();
    u.apply_in_place(col);
    ub.col(j) = col.real();
  }
  const Eigen::Matrix4d m = basis.columns.transpose() * ub;
  const double leak = (ub - basis.columns * m).norm();
  if (leak > kLeakTol) {
    throw SubspaceLeak("walk leaves the invariant subspace; leak norm " +
                       std::to_string(leak));
  }
  return m;
}

}  // namespace qws::fullsim
