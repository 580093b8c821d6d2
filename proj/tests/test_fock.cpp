#include <doctest.h>

#include <array>
#include <random>

#include "discordq/error.hpp"
#include "discordq/fock.hpp"
#include "discordq/q_marker.hpp"
#include "discordq/wigner.hpp"
#include "oracles.hpp"

using namespace discordq;
using fock::FockState;
using Complex = std::complex<double>;

namespace {

bool rel_close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

// Commutator sum over every ordered pair of blocks, straight from the definition.
double brute_q(const FockState& s) {
  const auto blocks = fock::conditional_blocks(s);
  double q = 0.0;
  for (const auto& x : blocks)
    for (const auto& y : blocks) q += (x * y - y * x).squaredNorm();
  return q / 2;
}

Eigen::MatrixXcd product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("matrix exponential matches an eigendecomposition") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd a(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = g(rng);
    const Eigen::MatrixXd sym = (a + a.transpose()) * (0.5 + trial);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    const Eigen::MatrixXd want =
        es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() * es.eigenvectors().transpose();
    CHECK((fock::expm(sym) - want).norm() <= 1e-11 * want.norm());
    // antisymmetric generators give orthogonal matrices
    const Eigen::MatrixXd anti = (a - a.transpose()) * (1.0 + trial);
    const Eigen::MatrixXd u = fock::expm(anti);
    CHECK((u * u.transpose() - Eigen::MatrixXd::Identity(6, 6)).norm() <= 1e-12);
  }
  CHECK_THROWS_AS(fock::expm(Eigen::MatrixXd(2, 3)), Error);
}

TEST_CASE("classical-classical states have zero Q") {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(16, 16);
  const std::array<double, 4> w{0.1, 0.2, 0.3, 0.4};
  for (int i = 0; i < 4; ++i) rho(i * 4 + (3 - i), i * 4 + (3 - i)) = w[i];
  const auto s = fock::make_fock_state(rho, 4, 4);
  CHECK(fock::fock_q(s).q == 0.0);
}

TEST_CASE("photon-number mixed state is exact") {
  for (double k : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    const auto s = fock::fock_photon_number_mixed(k);
    CHECK(std::abs(fock::fock_q(s).q - oracle::photon_mixed_q(k)) <= 1e-15);
    CHECK(fock::fock_q(s).q == doctest::Approx(brute_q(s)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(fock::fock_photon_number_mixed(2.0), Error);
}

TEST_CASE("maximally entangled qubit pair") {
  // (|00> + |11>)/sqrt(2) embedded at dimension 2: Q = 3/8
  Eigen::Vector4cd psi(1.0, 0.0, 0.0, 1.0);
  psi /= std::sqrt(2.0);
  const auto s = fock::make_fock_state(psi * psi.adjoint(), 2, 2);
  const auto rep = fock::fock_q(s);
  CHECK(rep.q == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(rep.q == doctest::Approx(brute_q(s)).epsilon(1e-15));
  CHECK(rep.q == doctest::Approx(rep.term1 - rep.term2).epsilon(1e-14));
}

TEST_CASE("squeezed thermal Fock states") {
  const auto vac = fock::fock_squeezed_thermal(0, 0, 8);
  CHECK(std::abs(vac.rho(0, 0) - 1.0) <= 1e-15);
  CHECK(vac.rho.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fock::fock_q(vac).q == 0.0);

  // two-mode squeezed vacuum: sum_k tanh^k r / cosh r |kk>
  const double r = 0.3;
  const auto tmsv = fock::fock_squeezed_thermal(0, r, 15);
  for (int k = 0; k < 6; ++k) {
    const double want = std::pow(std::tanh(r), 2 * k) / std::pow(std::cosh(r), 2);
    CHECK(std::abs(tmsv.rho(k * 15 + k, k * 15 + k).real() - want) <= 1e-12);
  }
  CHECK(std::abs(tmsv.rho(1, 1)) <= 1e-15);

  const auto thermal = fock::fock_squeezed_thermal(0.5, 0.3, 20);
  CHECK(thermal.trace_deficit < 1e-6);
  CHECK(thermal.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("truncation error decreases towards the closed form") {
  const double n = 0.2, r = 0.4;
  const double closed = marker::q_squeezed_thermal_closed(n, r);
  double last = 1.0;
  for (int d : {8, 12, 16}) {
    const double err = std::abs(fock::fock_q(fock::fock_squeezed_thermal(n, r, d, {1.0})).q - closed) / closed;
    CHECK(err < last);
    last = err;
  }
  CHECK(last < 1e-3);
}

TEST_CASE("convergence loop") {
  const std::array<int, 3> dims{8, 12, 16};
  const auto c = fock::converge_q([](int d) { return fock::fock_squeezed_thermal(0.0, 0.3, d); }, dims);
  CHECK(c.history.size() == 3);
  CHECK(c.history[0].first == 8);
  CHECK(rel_close(c.q, oracle::sts_q(0.0, 0.3), 1e-4));

  const std::array<int, 2> tiny{2, 4};
  const auto exact = fock::converge_q([](int) { return fock::fock_photon_number_mixed(0.3); }, tiny);
  CHECK(exact.q == doctest::Approx(oracle::photon_mixed_q(0.3)));

  const std::array<int, 2> coarse{8, 12};
  const fock::TruncationPolicy loose{1.0};
  try {
    fock::converge_q([&](int d) { return fock::fock_squeezed_thermal(0.0, 1.2, d, loose); }, coarse);
    FAIL("expected NonConverged");
  } catch (const fock::NonConvergedError& e) {
    CHECK(e.code() == ErrorCode::NonConverged);
    CHECK(e.history().size() == 2);
  }
  const std::array<int, 2> unordered{12, 8};
  CHECK_THROWS_AS(fock::converge_q([](int d) { return fock::fock_squeezed_thermal(0, 0, d); }, unordered), Error);
  CHECK_THROWS_AS(fock::converge_q([](int d) { return fock::fock_squeezed_thermal(0, 0, d); }, {}), Error);
}

TEST_CASE("Q does not depend on the local basis") {
  std::mt19937_64 rng(10);
  const auto s = fock::fock_squeezed_thermal(0.1, 0.3, 6, {1.0});
  const double q0 = fock::fock_q(s).q;
  for (int i = 0; i < 5; ++i) {
    const auto moved =
        fock::apply_local_unitaries(s, oracle::random_unitary(6, rng), oracle::random_unitary(6, rng));
    CHECK(rel_close(fock::fock_q(moved).q, q0, 1e-10));
    CHECK(rel_close(brute_q(moved), q0, 1e-10));
  }
  CHECK_THROWS_AS(fock::apply_local_unitaries(s, oracle::random_unitary(5, rng), oracle::random_unitary(6, rng)),
                  Error);
}

TEST_CASE("random zero-discord states") {
  // sum_i p_i |e_i><e_i| (x) rho_i with an orthonormal basis on A: the
  // conditional blocks all commute
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int da = 3, db = 4;
    const Eigen::MatrixXcd u = oracle::random_unitary(da, rng);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da * db, da * db);
    for (int i = 0; i < da; ++i) {
      const Eigen::VectorXcd e = u.col(i);
      rho += product(e * e.adjoint(), oracle::random_density(db, rng)) / 3.0;
    }
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const auto s = fock::make_fock_state(rho, da, db);
    CHECK(fock::fock_q(s).q <= 1e-12);
  }
  // a generic random state is discordant
  const auto s = fock::make_fock_state(oracle::random_density(12, rng), 3, 4);
  CHECK(fock::fock_q(s).q > 1e-4);
  CHECK(fock::fock_q(s).q == doctest::Approx(brute_q(s)).epsilon(1e-12));
}

TEST_CASE("conditional blocks") {
  std::mt19937_64 rng(14);
  const auto s = fock::make_fock_state(oracle::random_density(12, rng), 3, 4);
  const auto blocks = fock::conditional_blocks(s);
  REQUIRE(blocks.size() == 16);
  Complex trace = 0.0;
  for (int m = 0; m < 4; ++m) {
    trace += blocks[m * 4 + m].trace();
    for (int n = 0; n < 4; ++n) CHECK((blocks[m * 4 + n].adjoint() - blocks[n * 4 + m]).norm() <= 1e-15);
  }
  CHECK(std::abs(trace - 1.0) <= 1e-14);
}

TEST_CASE("truncation policy") {
  try {
    fock::fock_squeezed_thermal(0.5, 1.5, 8);
    FAIL("expected TruncationError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationError);
  }
  const auto relaxed = fock::fock_squeezed_thermal(0.5, 1.5, 8, {1.0});
  CHECK(relaxed.trace_deficit > 1e-6);
  CHECK(fock::fock_q(relaxed).meta.trace_deficit == relaxed.trace_deficit);
  CHECK_THROWS_AS(fock::fock_squeezed_thermal(0.0, 0.1, 3), Error);
  CHECK_THROWS_AS(fock::fock_squeezed_thermal(0.0, 0.1, 65), Error);
  CHECK_THROWS_AS(fock::fock_squeezed_thermal(-0.1, 0.1, 8), Error);
}

TEST_CASE("photon-added Fock state matches the phase-space value") {
  const double n = 0.2, r = 0.3;
  const auto s = fock::fock_photon_added_squeezed_thermal(n, r, 16);
  const double general = marker::q_general(wigner::make_photon_added_squeezed_thermal(n, r)).q;
  CHECK(rel_close(fock::fock_q(s).q, general, 1e-6));
  // at r = 0 the photon is in mode B and the state is a product
  const auto fock01 = fock::fock_photon_added_squeezed_thermal(0.0, 0.0, 4);
  CHECK(std::abs(fock01.rho(1, 1) - 1.0) <= 1e-15);
  CHECK(fock::fock_q(fock01).q == 0.0);
}

TEST_CASE("Gaussian-vacuum mixture Fock state matches the closed form") {
  const double k = 0.6, r = 0.3;
  const auto s = fock::fock_gaussian_vacuum_mixture(k, 0.0, r, 16);
  const double closed = marker::q_mixture_closed(k, cv::squeezed_thermal_params(0.0, r));
  CHECK(rel_close(fock::fock_q(s).q, closed, 1e-6));
  CHECK_THROWS_AS(fock::fock_gaussian_vacuum_mixture(-0.1, 0.0, r, 16), Error);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(fock::make_fock_state(Eigen::MatrixXcd::Identity(5, 5), 2, 2), Error);
  CHECK_THROWS_AS(fock::make_fock_state(Eigen::MatrixXcd::Zero(4, 4), 2, 2), Error);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(4, 4);
  h(0, 1) = Complex(0, 0.1);
  CHECK_THROWS_AS(fock::make_fock_state(h, 2, 2), Error);
  Eigen::MatrixXcd neg = Eigen::MatrixXcd::Identity(4, 4);
  neg(0, 0) = -1.0;
  CHECK_THROWS_AS(fock::make_fock_state(neg, 2, 2), Error);
  // unnormalized input is rescaled
  const auto s = fock::make_fock_state(Eigen::MatrixXcd::Identity(4, 4) * 3.0, 2, 2);
  CHECK(s.rho.trace().real() == doctest::Approx(1.0));
}
