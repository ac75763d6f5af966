#include "qwsearch/model.hpp"

#include <cmath>
#include <string>

namespace qws::model {

SearchInstance make_instance(int n1, int n2, int k, Init init) {
  if (n1 < 2 || n2 < 1) {
    throw InvalidPartition("partition sizes must satisfy n1 >= 2, n2 >= 1; got n1=" +
                           std::to_string(n1) + ", n2=" + std::to_string(n2));
  }
  if (k < 1 || k >= n1) {
    throw InvalidMarkedCount("marked count must satisfy 1 <= k <= n1-1; got k=" +
                             std::to_string(k) + " with n1=" + std::to_string(n1));
  }
  return SearchInstance{n1, n2, k, init};
}

AngleParams angles(const SearchInstance& inst) {
  const double n1 = inst.n1;
  const double n2 = inst.n2;
  const double k = inst.k;
  return AngleParams{
      std::acos(std::sqrt(n1 / (n1 + n2))),
      std::asin(std::sqrt(k / n1)),
      std::acos(std::sqrt((n1 - k) / n1)),
  };
}

SubspaceAmplitudes initial_amplitudes(const SearchInstance& inst) {
  const double n1 = inst.n1;
  const double n2 = inst.n2;
  const double k = inst.k;
  if (inst.init == Init::VertexUniform) {
    const double N = n1 + n2;
    return SubspaceAmplitudes{
        std::sqrt(k / N),
        std::sqrt(n2 * k / (n1 * N)),
        std::sqrt(n2 * (n1 - k) / (n1 * N)),
        std::sqrt((n1 - k) / N),
    };
  }
  // Edge-uniform weights depend only on the tail partition split, so the
  // ab/ba and bc/cb components coincide exactly.
  const double ma = std::sqrt(k / (2.0 * n1));
  const double mc = std::sqrt((n1 - k) / (2.0 * n1));
  return SubspaceAmplitudes{ma, ma, mc, mc};
}

}  // namespace qws::model
