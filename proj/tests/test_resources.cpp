#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qwsearch/closedform.hpp"
#include "qwsearch/errors.hpp"
#include "qwsearch/model.hpp"
#include "qwsearch/resources.hpp"

using qws::model::Init;
using qws::model::make_instance;
namespace rs = qws::resources;

namespace {

rs::QubitRegisterState random_state(int qubits, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(1L << qubits);
  for (long i = 0; i < v.size(); ++i) {
    v[i] = std::complex<double>(gauss(rng), gauss(rng));
  }
  v.normalize();
  return {v, qubits};
}

rs::DensityMatrix pure_rho(const Eigen::VectorXcd& v) {
  return v * v.adjoint();
}

const Eigen::Vector4cd kBell((Eigen::Vector4cd() << 1.0 / std::sqrt(2.0), 0,
                              0, 1.0 / std::sqrt(2.0))
                                 .finished());

}  // namespace

TEST_CASE("l1 coherence on anchors") {
  rs::DensityMatrix diag = Eigen::Vector4cd(0.4, 0.3, 0.2, 0.1).asDiagonal();
  CHECK(rs::l1_coherence(diag) == 0.0);

  Eigen::Vector4cd max_coherent = Eigen::Vector4cd::Constant(0.5);
  CHECK(std::abs(rs::l1_coherence(pure_rho(max_coherent)) - 3.0) <= 1e-12);

  const auto ref = make_instance(4, 4, 1, Init::VertexUniform);
  const Eigen::Vector4cd t2 =
      qws::closedform::state_at(ref, 2).vec().cast<std::complex<double>>();
  CHECK(std::abs(rs::l1_coherence(pure_rho(t2)) - 1.7990381056766580) <=
        1e-10);
}

TEST_CASE("pure-state coherence identity over ten thousand random states") {
  std::mt19937 rng(20240814);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> dim_d(2, 8);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int d = dim_d(rng);
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = std::complex<double>(gauss(rng), gauss(rng));
    }
    v.normalize();
    double abs_sum = 0.0;
    for (int i = 0; i < d; ++i) {
      abs_sum += std::abs(v[i]);
    }
    worst = std::max(
        worst, std::abs(rs::l1_coherence(pure_rho(v)) -
                        (abs_sum * abs_sum - 1.0)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("qubit encoding of the basis states") {
  // |ab> alone at n=2: marked tail 00, head uniform over {10, 11}
  const auto ab = rs::encode_subspace_state({1.0, 0.0, 0.0, 0.0}, {2});
  CHECK(ab.qubits == 4);
  const double w = 1.0 / std::sqrt(2.0);
  for (long i = 0; i < 16; ++i) {
    const double expected = (i == 2 || i == 3) ? w : 0.0;
    CHECK(std::abs(ab.amplitudes[i].real() - expected) <= 1e-15);
    CHECK(ab.amplitudes[i].imag() == 0.0);
  }

  std::mt19937 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector4d raw;
    for (int i = 0; i < 4; ++i) {
      raw[i] = gauss(rng);
    }
    raw.normalize();
    const auto state = rs::encode_subspace_state(
        qws::model::SubspaceAmplitudes::from_vec(raw), {3});
    CHECK(std::abs(state.amplitudes.norm() - 1.0) <= 1e-12);
  }

  // success mass through the encoding equals k/(n1+n2)
  const auto inst = make_instance(8, 8, 1, Init::VertexUniform);
  const auto psi = rs::encode_subspace_state(
      qws::model::initial_amplitudes(inst), {4});
  double marked_mass = 0.0;
  for (long head = 0; head < 16; ++head) {
    marked_mass += std::norm(psi.amplitudes[head]);  // tail register 0000
  }
  CHECK(std::abs(marked_mass - 1.0 / 16.0) <= 1e-12);

  CHECK_THROWS_AS(rs::encode_subspace_state({1, 0, 0, 0}, {1}),
                  qws::EncodingMismatch);
  CHECK_THROWS_AS(rs::encode_subspace_state({1, 0, 0, 0}, {13}),
                  qws::TooManyQubits);
}

TEST_CASE("partial trace identities") {
  rs::QubitRegisterState zeros{Eigen::VectorXcd::Zero(8), 3};
  zeros.amplitudes[0] = 1.0;
  const auto rho0 = rs::partial_trace(zeros, {1, 2});
  rs::DensityMatrix expect0 = rs::DensityMatrix::Zero(4, 4);
  expect0(0, 0) = 1.0;
  CHECK((rho0 - expect0).cwiseAbs().maxCoeff() <= 1e-15);

  rs::QubitRegisterState ghz{Eigen::VectorXcd::Zero(8), 3};
  ghz.amplitudes[0] = 1.0 / std::sqrt(2.0);
  ghz.amplitudes[7] = 1.0 / std::sqrt(2.0);
  const auto rho01 = rs::partial_trace(ghz, {0, 1});
  rs::DensityMatrix expect01 = rs::DensityMatrix::Zero(4, 4);
  expect01(0, 0) = 0.5;
  expect01(3, 3) = 0.5;
  CHECK((rho01 - expect01).cwiseAbs().maxCoeff() <= 1e-15);

  // purities of a subset and its complement coincide for pure states
  std::mt19937 rng(17);
  const auto state = random_state(6, rng);
  const std::vector<std::vector<int>> subsets = {
      {0}, {1, 4}, {0, 2, 5}, {1, 2, 3, 4}};
  for (const auto& keep : subsets) {
    std::vector<int> rest;
    for (int q = 0; q < 6; ++q) {
      if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
        rest.push_back(q);
      }
    }
    CHECK(std::abs(rs::subset_purity(state, keep) -
                   rs::subset_purity(state, rest)) <= 1e-12);
  }

  CHECK_THROWS_AS(rs::partial_trace(ghz, {0, 3}), qws::InvalidQubitIndex);
  CHECK_THROWS_AS(rs::partial_trace(ghz, {1, 1}), qws::InvalidQubitIndex);
  CHECK_THROWS_AS(rs::partial_trace(ghz, {}), qws::InvalidQubitIndex);
}

TEST_CASE("Wootters concurrence on anchors") {
  CHECK(std::abs(rs::wootters_concurrence(pure_rho(kBell)) - 1.0) <= 1e-10);

  Eigen::Vector4cd product;
  product << 0.6, 0.8, 0, 0;  // |0> x (0.6|0> + 0.8|1>)
  CHECK(rs::wootters_concurrence(pure_rho(product)) <= 1e-10);

  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const rs::DensityMatrix iso =
        p * pure_rho(kBell) + (1.0 - p) * rs::DensityMatrix::Identity(4, 4) / 4.0;
    CHECK(std::abs(rs::wootters_concurrence(iso) -
                   std::max(0.0, (3.0 * p - 1.0) / 2.0)) <= 1e-8);
  }

  CHECK_THROWS_AS(rs::wootters_concurrence(rs::DensityMatrix::Identity(8, 8) / 8.0),
                  qws::NotTwoQubit);
}

TEST_CASE("Wootters concurrence of pure states matches the purity form") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = random_state(2, rng);
    const double c = rs::wootters_concurrence(pure_rho(psi.amplitudes));
    const double purity = rs::subset_purity(psi, {0});
    CHECK(std::abs(c - std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)))) <=
          1e-8);
  }
}

TEST_CASE("Wootters concurrence is invariant under local unitaries") {
  std::mt19937 rng(29);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto random_u2 = [&]() {
    Eigen::Matrix2cd a;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
      }
    }
    return Eigen::Matrix2cd(
        Eigen::HouseholderQR<Eigen::Matrix2cd>(a).householderQ());
  };
  for (int trial = 0; trial < 100; ++trial) {
    // random rank-2 mixture
    const auto a = random_state(2, rng);
    const auto b = random_state(2, rng);
    const double w = 0.3 + 0.4 * (trial % 10) / 10.0;
    const rs::DensityMatrix rho =
        w * pure_rho(a.amplitudes) + (1.0 - w) * pure_rho(b.amplitudes);
    const Eigen::Matrix2cd ua = random_u2();
    const Eigen::Matrix2cd ub = random_u2();
    Eigen::Matrix4cd local;
    local.block<2, 2>(0, 0) = ua(0, 0) * ub;
    local.block<2, 2>(0, 2) = ua(0, 1) * ub;
    local.block<2, 2>(2, 0) = ua(1, 0) * ub;
    local.block<2, 2>(2, 2) = ua(1, 1) * ub;
    const rs::DensityMatrix rotated = local * rho * local.adjoint();
    CHECK(std::abs(rs::wootters_concurrence(rho) -
                   rs::wootters_concurrence(rotated)) <= 1e-8);
  }
}

TEST_CASE("pairwise concurrence sums") {
  rs::QubitRegisterState product{Eigen::VectorXcd::Zero(16), 4};
  product.amplitudes[5] = 1.0;  // |0101>
  CHECK(rs::pairwise_concurrence_sum(product) <= 1e-10);

  rs::QubitRegisterState bell_pair{Eigen::VectorXcd::Zero(16), 4};
  // (|00> + |11>)/sqrt(2) on qubits {0,1}, |00> on qubits {2,3}
  bell_pair.amplitudes[0b0000] = 1.0 / std::sqrt(2.0);
  bell_pair.amplitudes[0b1100] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(rs::pairwise_concurrence_sum(bell_pair) - 1.0) <= 1e-10);

  rs::QubitRegisterState too_big{Eigen::VectorXcd::Zero(1L << 13), 13};
  too_big.amplitudes[0] = 1.0;
  CHECK_THROWS_AS(rs::pairwise_concurrence_sum(too_big), qws::TooManyQubits);
}

TEST_CASE("closed-form pairwise sum evaluations") {
  CHECK(rs::sC_closed_form({1, 0, 0, 0}, 3) == 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(rs::sC_closed_form({r, r, 0, 0}, 3) - 1.0 / 8.0) <= 1e-15);
  CHECK(rs::sC_closed_form({r, -r, 0, 0}, 3) == 0.0);  // clamped at zero
}

TEST_CASE("multipartite concurrence on anchors") {
  rs::QubitRegisterState product{Eigen::VectorXcd::Zero(8), 3};
  product.amplitudes[6] = 1.0;
  CHECK(rs::multipartite_concurrence(product) <= 1e-10);

  rs::QubitRegisterState bell{kBell, 2};
  CHECK(std::abs(rs::multipartite_concurrence(bell) - 1.0) <= 1e-10);

  rs::QubitRegisterState ghz{Eigen::VectorXcd::Zero(8), 3};
  ghz.amplitudes[0] = 1.0 / std::sqrt(2.0);
  ghz.amplitudes[7] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(rs::multipartite_concurrence(ghz) - 1.2247448713915890) <=
        1e-10);
}

TEST_CASE("half-sum and full-sum multipartite concurrence agree") {
  std::mt19937 rng(31);
  for (int qubits : {2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto state = random_state(qubits, rng);
      CHECK(std::abs(rs::multipartite_concurrence(state) -
                     rs::multipartite_concurrence_fullsum(state)) <= 1e-12);
    }
  }
  // and on encoded walk states
  const auto inst = make_instance(4, 4, 1, Init::VertexUniform);
  for (long t : {1L, 3L, 7L}) {
    const auto psi = rs::encode_subspace_state(
        qws::closedform::state_at(inst, t), {3});
    CHECK(std::abs(rs::multipartite_concurrence(psi) -
                   rs::multipartite_concurrence_fullsum(psi)) <= 1e-12);
  }
}

TEST_CASE("resource series layout and ranges") {
  const auto inst = make_instance(4, 4, 1, Init::VertexUniform);
  const auto odd = rs::resource_series(inst, {3}, 20, rs::Parity::Odd);
  CHECK(odd.size() == 10);
  for (const auto& row : odd) {
    CHECK(row.t % 2 == 1);
    CHECK(row.P >= 0.0);
    CHECK(row.P <= 1.0);
    CHECK(row.C_l1 >= 0.0);
    CHECK(row.sC_closed >= 0.0);
    CHECK(row.sC_brute.has_value());
    CHECK(*row.sC_brute >= -1e-12);
    CHECK(row.MC.has_value());
    CHECK(*row.MC >= 0.0);
    CHECK(*row.MC <= 2.0);
  }

  // brute-force columns switch off beyond the 12-qubit cap
  const auto big = make_instance(64, 64, 1, Init::VertexUniform);
  const auto rows = rs::resource_series(big, {7}, 4, rs::Parity::Even);
  CHECK(rows.size() == 3);
  CHECK(!rows[0].sC_brute.has_value());
  CHECK(!rows[0].MC.has_value());

  CHECK_THROWS_AS(
      rs::resource_series(make_instance(8, 8, 1, Init::VertexUniform), {3},
                          10, rs::Parity::Even),
      qws::EncodingMismatch);
  CHECK_THROWS_AS(
      rs::resource_series(make_instance(4, 4, 2, Init::VertexUniform), {3},
                          10, rs::Parity::Even),
      qws::EncodingMismatch);
}
