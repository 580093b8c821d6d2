#include <doctest.h>

#include <random>

#include "discordq/error.hpp"
#include "discordq/q_marker.hpp"
#include "discordq/wigner.hpp"
#include "oracles.hpp"

using namespace discordq;
using cv::GaussianParams;

namespace {

bool rel_close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

GaussianParams random_physical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ab(0.25, 1.5), unit(-0.95, 0.95);
  for (;;) {
    GaussianParams p{ab(rng), ab(rng), 0.0, 0.0};
    const double lim = std::sqrt(p.a * p.b);
    p.c1 = unit(rng) * lim;
    p.c2 = unit(rng) * lim;
    if (cv::validate_covariance(p.covariance()).valid()) return p;
  }
}

// Product of a Gaussian on mode A with a one-photon state on mode B.
wigner::WignerState vacuum_times_photon() {
  return wigner::make_photon_added_squeezed_thermal(0.0, 0.0);
}

}  // namespace

TEST_CASE("vacuum has zero Q") {
  const auto rep = marker::q_gaussian_closed({0.25, 0.25, 0, 0});
  CHECK(rep.q == 0.0);
  CHECK_FALSE(std::signbit(rep.q));
  CHECK(rep.term1 == doctest::Approx(rep.term2).epsilon(1e-15));
  CHECK(rep.method == Method::ClosedGaussian);
}

TEST_CASE("Gaussian closed form against reference formulas") {
  for (double n : {0.0, 0.3, 1.0, 2.5})
    for (double r : {0.05, 0.3, 0.8, 1.5}) {
      CAPTURE(n);
      CAPTURE(r);
      const auto p = cv::squeezed_thermal_params(n, r);
      CHECK(rel_close(marker::q_gaussian_closed(p).q, oracle::sts_q(n, r), 1e-10));
      CHECK(rel_close(marker::q_squeezed_thermal_closed(n, r), oracle::sts_q(n, r), 1e-14));
    }
  for (double a : {0.3, 0.6, 1.1})
    for (double b : {0.26, 0.5, 0.9})
      for (double frac : {0.1, 0.5, 0.9}) {
        // symmetric-c formula holds on c1 = c2 = c
        const double c = frac * std::sqrt(a * b) * 0.5;
        const GaussianParams p{a, b, c, c};
        if (!cv::validate_params(p).valid()) continue;
        CHECK(rel_close(marker::q_gaussian_closed(p).q, oracle::symmetric_c_q(a, b, c), 1e-9));
      }
}

TEST_CASE("stable and naive closed forms agree where no cancellation occurs") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_physical(rng);
    const double want = oracle::gaussian_q_naive(p.a, p.b, p.c1, p.c2);
    const auto rep = marker::q_gaussian_closed(p);
    CHECK(rep.q >= 0.0);
    // the naive form loses absolute precision of order eps * term1
    CHECK(std::abs(rep.q - want) <= 1e-12 * std::max(rep.term1, rep.term2));
    CHECK(std::abs(rep.q - (rep.term1 - rep.term2)) <= 1e-12 * std::max(rep.term1, rep.term2));
  }
}

TEST_CASE("general evaluation of the vacuum and the photon-mixed state") {
  const auto vac = marker::q_general(wigner::make_squeezed_thermal(0, 0));
  CHECK(std::abs(vac.q) <= 1e-15);
  CHECK(vac.method == Method::GeneralWigner);
  const auto mixed = marker::q_general(wigner::make_photon_number_mixed(0.5));
  CHECK(mixed.q == doctest::Approx(1.0 / 32).epsilon(1e-12));
  for (double k : {0.1, 0.3, 0.7}) {
    CHECK(rel_close(marker::q_general(wigner::make_photon_number_mixed(k)).q, oracle::photon_mixed_q(k), 1e-10));
    CHECK(marker::q_photon_mixed_closed(k) == oracle::photon_mixed_q(k));
  }
}

TEST_CASE("general evaluation matches the Gaussian closed form") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 6; ++i) {
    const auto p = random_physical(rng);
    const auto closed = marker::q_gaussian_closed(p);
    const auto general = marker::q_general(wigner::wigner_of_gaussian(p));
    CHECK(std::abs(general.q - closed.q) <= 1e-9 * std::max(closed.term1, 1e-3));
    CHECK(general.term1 == doctest::Approx(closed.term1).epsilon(1e-9));
    CHECK(general.term2 == doctest::Approx(closed.term2).epsilon(1e-9));
    CHECK(general.meta.imag_residue <= 1e-12);
  }
  const auto sts = marker::q_general(wigner::make_squeezed_thermal(0.5, 0.5));
  CHECK(rel_close(sts.q, oracle::sts_q(0.5, 0.5), 1e-9));
}

TEST_CASE("product states have zero Q") {
  CHECK(std::abs(marker::q_general(wigner::wigner_of_gaussian({0.7, 0.4, 0, 0})).q) <= 1e-15);
  CHECK(std::abs(marker::q_general(vacuum_times_photon()).q) <= 1e-14);
  CHECK(marker::q_gaussian_closed({0.9, 0.3, 0, 0}).q == 0.0);
}

TEST_CASE("Gaussian plus vacuum mixture") {
  for (double k : {0.0, 0.3, 0.7, 1.0})
    for (double r : {0.2, 0.4}) {
      CAPTURE(k);
      CAPTURE(r);
      const auto p = cv::squeezed_thermal_params(0.0, r);
      const double closed = marker::q_mixture_closed(k, p);
      CHECK(rel_close(closed, oracle::mixture_q(k, p.a, p.b, p.c1), 1e-14));
      const double general = marker::q_general(wigner::make_gaussian_vacuum_mixture(k, p)).q;
      CHECK(std::abs(general - closed) <= 1e-9 * std::max(closed, 1e-6));
    }
  const auto thermal = cv::squeezed_thermal_params(0.3, 0.5);
  CHECK(rel_close(marker::q_mixture_closed(1.0, thermal), marker::q_gaussian_closed(thermal).q, 1e-9));
  CHECK_THROWS_AS(marker::q_mixture_closed(1.2, thermal), Error);
  try {
    marker::q_mixture_closed(0.5, {0.5, 0.5, 0.3, 0.1});
    FAIL("expected ParamMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamMismatch);
  }
}

TEST_CASE("photon-added squeezed vacuum") {
  CHECK(std::abs(marker::q_photon_added_n0(1e-3)) <= 1e-4);
  CHECK(marker::q_photon_added_n0(0.0) == 0.0);
  for (double r : {0.1, 0.5, 1.0}) {
    const double closed = marker::q_photon_added_n0(r);
    CHECK(rel_close(closed, oracle::photon_added_n0_q(r), 1e-13));
    const double general = marker::q_general(wigner::make_photon_added_squeezed_thermal(0.0, r)).q;
    CHECK(rel_close(general, closed, 1e-8));
  }
  CHECK(std::abs(marker::q_general(wigner::make_photon_added_squeezed_thermal(0.0, 0.0)).q) <= 1e-14);
}

TEST_CASE("zero-discord decision for Gaussian states") {
  auto v = marker::gaussian_zero_discord({0.5, 0.5, 1e-12, 0}, 1e-20);
  CHECK(v.verdict == marker::Verdict::Zero);
  CHECK(v.q > 0.0);
  CHECK(v.q < 1e-20);
  v = marker::gaussian_zero_discord({0.5, 0.5, 0.1, 0}, 1e-20);
  CHECK(v.verdict == marker::Verdict::Nonzero);
  CHECK(v.q > 0.0);
  CHECK_THROWS_AS(marker::gaussian_zero_discord({0.5, 0.5, 0, 0}, -1.0), Error);
}

TEST_CASE("threshold classification") {
  CHECK(marker::classify(0.0).verdict == marker::Verdict::Zero);
  CHECK(marker::classify(1e-9).verdict == marker::Verdict::Zero);
  CHECK(marker::classify(2e-9).verdict == marker::Verdict::Nonzero);
  CHECK(marker::classify(1e-4, 1e-3).verdict == marker::Verdict::Zero);
  CHECK(std::string(marker::to_string(marker::Verdict::Nonzero)) == "Nonzero");
}

TEST_CASE("sign analysis") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_physical(rng);
    const double f = marker::sign_analysis_f(p);
    CHECK(f <= 1e-12);
    // f = 16 ab (g - a b^3 / 16)
    const double g = marker::sign_analysis_g(p);
    const double scale = 16 * p.a * p.b * (std::abs(g) + p.a * p.b * p.b * p.b / 16);
    CHECK(std::abs(f - 16 * p.a * p.b * (g - p.a * p.b * p.b * p.b / 16)) <= 1e-12 * scale);
  }
  CHECK(marker::sign_analysis_f({0.7, 0.4, 0, 0}) == 0.0);
  CHECK(marker::sign_analysis_f({0.7, 0.4, 0.1, 0}) < 0.0);
  CHECK(marker::sign_analysis_f({0.7, 0.4, 0, 0.1}) < 0.0);
}

TEST_CASE("Q is invariant under local symplectics") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_physical(rng);
    const Eigen::Matrix4d s = oracle::local_symplectic(oracle::random_sp2(rng), oracle::random_sp2(rng));
    const auto moved = cv::standard_form_reduce(cv::CovarianceMatrix{s * p.covariance().v * s.transpose()});
    const double q0 = marker::q_gaussian_closed(p).q;
    const double q1 = marker::q_gaussian_closed(moved).q;
    CHECK(std::abs(q1 - q0) <= 1e-8 * std::max(q0, 1e-6));
  }
}

TEST_CASE("closed form refuses invalid parameters") {
  try {
    marker::q_gaussian_closed({0.1, 0.5, 0, 0});
    FAIL("expected NonPhysical");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPhysical);
  }
  CHECK_THROWS_AS(marker::q_squeezed_thermal_closed(-0.5, 0.1), Error);
  CHECK_THROWS_AS(marker::q_photon_mixed_closed(-0.1), Error);
}

TEST_CASE("grid parsing") {
  auto g = marker::Grid::parse("0:1:11");
  CHECK(g.count == 11);
  const auto pts = g.points();
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 1.0);
  CHECK(pts[5] == doctest::Approx(0.5));
  g = marker::Grid::parse("0.5:0.5:1");
  CHECK(g.points() == std::vector<double>{0.5});
  g = marker::Grid::parse("-1e-1:2.5:3");
  CHECK(g.start == -0.1);
  for (const char* bad : {"", "0:1", "0:1:2:3", "a:1:2", "0:1:0", "0:1:-2", "0:1:1", "0:1:2.5", "0::3", "0:inf:3"}) {
    CAPTURE(bad);
    try {
      marker::Grid::parse(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("photon-added scan") {
  const auto rows = marker::scan_photon_added(marker::Grid::parse("0:0.5:2"), marker::Grid::parse("0:0.4:3"), 2);
  REQUIRE(rows.size() == 6);
  // n-major order
  CHECK(rows[0].n == 0.0);
  CHECK(rows[0].r == 0.0);
  CHECK(rows[1].r == doctest::Approx(0.2));
  CHECK(rows[3].n == 0.5);
  CHECK(rows[3].r == 0.0);
  for (const auto& row : rows) {
    CHECK(row.ok);
    CHECK(row.log10_q == doctest::Approx(std::log10(std::max(row.q, marker::kLogFloor))));
  }
  // r = 0 is a product state
  CHECK(rows[0].log10_q <= -13);
  CHECK(rel_close(rows[2].q, marker::q_photon_added_n0(0.4), 1e-8));

  // serial and threaded runs agree bit for bit
  const auto serial = marker::scan_photon_added(marker::Grid::parse("0:0.5:2"), marker::Grid::parse("0:0.4:3"), 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].q == rows[i].q);

  const auto bad = marker::scan_photon_added(marker::Grid::parse("-1:0:2"), marker::Grid::parse("0.3:0.3:1"), 1);
  REQUIRE(bad.size() == 2);
  CHECK_FALSE(bad[0].ok);
  CHECK_FALSE(bad[0].message.empty());
  CHECK(bad[1].ok);
}

TEST_CASE("general evaluation rejects malformed states") {
  wigner::WignerState empty;
  CHECK_THROWS_AS(marker::q_general(empty), Error);
  auto w = wigner::make_squeezed_thermal(0, 0);
  w.components[0].quad(1, 1) = -2.0;
  CHECK_THROWS_AS(marker::q_general(w), Error);
}
