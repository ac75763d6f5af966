#include "qwsearch/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qws::closedform {

using model::SearchInstance;
using model::SubspaceAmplitudes;

PhaseArgs phase_args(const SearchInstance& inst, long t) {
  const auto ang = model::angles(inst);
  const double tf = static_cast<double>(t);
  return PhaseArgs{ang.delta + tf * ang.phi, ang.delta - tf * ang.phi,
                   (t % 2 == 0) ? 0 : -1};
}

SubspaceAmplitudes state_at(const SearchInstance& inst, long t) {
  const auto [th, de, ph] = model::angles(inst);
  const double tf = static_cast<double>(t);
  if (inst.init == model::Init::VertexUniform) {
    if (t % 2 == 0) {
      return SubspaceAmplitudes{
          std::cos(th) * std::sin(de + ph * tf),
          std::sin(th) * std::sin(de - ph * tf),
          std::sin(th) * std::cos(de - ph * tf),
          std::cos(th) * std::cos(de + ph * tf),
      };
    }
    return SubspaceAmplitudes{
        std::sin(th) * std::sin(ph * (1 + tf) - de),
        std::cos(th) * std::sin((1 - tf) * ph - de),
        std::cos(th) * std::cos((tf - 1) * ph + de),
        std::sin(th) * std::cos(ph * (1 + tf) - de),
    };
  }
  const double r = std::sqrt(0.5);
  if (t % 2 == 0) {
    return SubspaceAmplitudes{
        r * std::sin(ph * tf + de),
        r * std::sin(de - ph * tf),
        r * std::cos(ph * tf - de),
        r * std::cos(ph * tf + de),
    };
  }
  return SubspaceAmplitudes{
      r * std::sin(ph * tf + ph - de),
      r * std::sin(ph - de - ph * tf),
      r * std::cos(ph * tf - ph + de),
      r * std::cos(ph * tf + ph - de),
  };
}

double success_probability(const SearchInstance& inst, long t) {
  const auto [th, de, ph] = model::angles(inst);
  const double tf = static_cast<double>(t);
  if (inst.init == model::Init::VertexUniform) {
    const double s = (t % 2 == 0) ? std::cos(th) * std::sin(de + ph * tf)
                                  : std::sin(th) * std::sin(ph * (1 + tf) - de);
    return s * s;
  }
  const double s = (t % 2 == 0) ? std::sin(ph * tf + de)
                                : std::sin(ph * tf + ph - de);
  return 0.5 * s * s;
}

double coherence_at(const SearchInstance& inst, long t) {
  const auto [th, de, ph] = model::angles(inst);
  const auto pa = phase_args(inst, t);
  const double a = pa.A + pa.h * ph;
  const double b = pa.B + pa.h * ph;
  const double sa = std::abs(std::sin(a)), ca = std::abs(std::cos(a));
  const double sb = std::abs(std::sin(b)), cb = std::abs(std::cos(b));
  const double cross = (sa + ca) * (sb + cb);
  const double s2a = std::abs(std::sin(2 * a));
  const double s2b = std::abs(std::sin(2 * b));
  if (inst.init == model::Init::VertexUniform) {
    const double ct = std::cos(th), st = std::sin(th);
    return std::sin(2 * th) * cross + ct * ct * s2a + st * st * s2b;
  }
  return cross + 0.5 * (s2a + s2b);
}

double normalized_coherence(double c) {
  if (c < -1e-9 || c > 3.0 + 1e-9) {
    throw OutOfRange("l1 coherence in dimension 4 must lie in [0, 3]; got " +
                     std::to_string(c));
  }
  return std::max(c, 0.0) / 3.0;
}

double complementarity_residual(const SearchInstance& inst, long t) {
  const auto ang = model::angles(inst);
  const double target = (inst.init == model::Init::VertexUniform)
                            ? std::sin(2 * ang.theta)
                            : 1.0;
  return success_probability(inst, t) + coherence_at(inst, t) - target;
}

}  // namespace qws::closedform
