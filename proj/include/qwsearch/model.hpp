#pragma once

#include <Eigen/Dense>

#include "qwsearch/errors.hpp"

namespace qws::model {

// Choice of initial state: uniform over vertices or uniform over directed
// edges of the complete bipartite graph.
enum class Init { VertexUniform, EdgeUniform };

// A search problem on K_{n1,n2}. All k marked vertices live in partition X.
// k == n1 is rejected: with no unmarked X vertex the four-dimensional
// invariant subspace degenerates.
struct SearchInstance {
  int n1 = 0;
  int n2 = 0;
  int k = 0;
  Init init = Init::VertexUniform;
};

// The three angles parameterizing the closed-form dynamics:
//   cos^2(theta) = n1/(n1+n2), sin^2(delta) = k/n1, cos^2(phi) = (n1-k)/n1.
struct AngleParams {
  double theta = 0.0;
  double delta = 0.0;
  double phi = 0.0;
};

// Real amplitudes on the invariant basis {|ab>, |ba>, |bc>, |cb>}:
// marked->Y, Y->marked, Y->unmarked and unmarked->Y arc classes.
struct SubspaceAmplitudes {
  double m_ab = 0.0;
  double m_ba = 0.0;
  double m_bc = 0.0;
  double m_cb = 0.0;

  Eigen::Vector4d vec() const { return {m_ab, m_ba, m_bc, m_cb}; }
  static SubspaceAmplitudes from_vec(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  double norm() const { return vec().norm(); }
};

// Validates and returns an instance.
// Throws InvalidPartition (n1 < 2 or n2 < 1) or InvalidMarkedCount
// (k < 1 or k >= n1).
SearchInstance make_instance(int n1, int n2, int k, Init init);

AngleParams angles(const SearchInstance& inst);

// Subspace coordinates of the chosen initial state; unit norm.
SubspaceAmplitudes initial_amplitudes(const SearchInstance& inst);

}  // namespace qws::model
