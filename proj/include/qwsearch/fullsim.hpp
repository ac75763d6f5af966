#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "qwsearch/model.hpp"

namespace qws::fullsim {

// Complex amplitude vector over the 2*n1*n2 directed arcs.
using ArcState = Eigen::VectorXcd;

// Largest arc dimension the simulator will touch.
inline constexpr long kArcDimCap = 1L << 22;
// Largest arc dimension for which the step operator may be materialized
// as a dense matrix (tests only; evolution never builds it).
inline constexpr long kDenseCap = 1L << 12;

// Directed arc (tail, head) with the canonical linear layout:
//   X->Y block first, index x*n2 + y for x in [0,n1), y in [0,n2);
//   Y->X block second, index n1*n2 + y*n1 + x.
// Vertex ids: X occupies 0..n1-1 with the k marked vertices first,
// Y occupies n1..n1+n2-1.
struct ArcIndex {
  int tail = 0;
  int head = 0;
};

long arc_dimension(const model::SearchInstance& inst);
long arc_linear_index(const model::SearchInstance& inst, const ArcIndex& arc);
ArcIndex arc_from_linear(const model::SearchInstance& inst, long index);

// Orthonormal columns spanning the invariant subspace, in the order
// |ab>, |ba>, |bc>, |cb>.
struct SubspaceBasis {
  Eigen::MatrixXd columns;  // arc_dimension x 4
};

SubspaceBasis subspace_basis(const model::SearchInstance& inst);

// One step of the search walk, U = S * G * Q: oracle sign flip on arcs with
// a marked tail, Grover coin 2|s_v><s_v| - I over the arcs leaving each
// vertex, then the swap |i,j> -> |j,i>. Applied as three structured passes;
// the dense matrix exists only for small-dimension tests.
class StepOperator {
 public:
  StepOperator(model::SearchInstance inst, bool with_oracle);

  long dim() const;
  void apply_in_place(ArcState& psi) const;
  ArcState apply(const ArcState& psi) const;

  // Dense real matrix of the operator; throws DimensionTooLarge above
  // kDenseCap.
  Eigen::MatrixXd dense() const;

 private:
  model::SearchInstance inst_;
  bool with_oracle_;
};

// The search operator U = S*G*Q. Throws DimensionTooLarge above kArcDimCap.
StepOperator build_step_operator(const model::SearchInstance& inst);

// The bare walk operator W = S*G (no oracle); fixes the edge-uniform state
// and serves as the broken-oracle fixture for harness self-tests.
StepOperator build_walk_operator(const model::SearchInstance& inst);

// Arc-space embedding of the instance's initial state.
ArcState embed_initial(const model::SearchInstance& inst);

// U^t applied to the embedded initial state.
ArcState evolve(const model::SearchInstance& inst, long t);

// Overlaps with the four subspace columns (real parts; imaginary parts
// above 1e-10 raise SubspaceLeak) and the norm of the component outside
// the subspace.
std::pair<model::SubspaceAmplitudes, double> project_to_subspace(
    const ArcState& state, const SubspaceBasis& basis);

// Probability mass on arcs whose tail is a marked vertex.
double success_probability_full(const ArcState& state,
                                const model::SearchInstance& inst);

// B^T U B, the walk restricted to the invariant subspace; orthogonal 4x4.
// Throws SubspaceLeak if ||U B - B M|| exceeds 1e-8.
Eigen::Matrix4d extract_subspace_operator(const model::SearchInstance& inst);

}  // namespace qws::fullsim
