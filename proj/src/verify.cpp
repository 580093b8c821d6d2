#include "discordq/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "discordq/gauss_engine.hpp"
#include "discordq/quadrature.hpp"
#include "discordq/wigner.hpp"

namespace discordq::verify {

namespace {

using Complex = std::complex<double>;

double rel_err(double got, double want) {
  const double scale = std::abs(want);
  if (scale == 0.0) return std::abs(got);
  return std::abs(got - want) / scale;
}

// Tracks the worst deviation seen and the first failure message.
struct Tally {
  bool ok = true;
  double worst = 0.0;
  std::string first_failure;

  void check(bool pass, double deviation, const std::string& what) {
    worst = std::max(worst, deviation);
    if (!pass && ok) {
      ok = false;
      first_failure = what;
    }
  }
  void fail(const std::string& what) { check(false, 0.0, what); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

cv::GaussianParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ab(0.25, 1.5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  cv::GaussianParams p;
  p.a = ab(rng);
  p.b = ab(rng);
  const double cmax = 0.95 * std::sqrt(p.a * p.b);
  p.c1 = cmax * unit(rng);
  p.c2 = cmax * unit(rng);
  return p;
}

Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

CheckResult closed_vs_general() {
  CheckResult r{"1 closed form vs phase-space integral (100 random Gaussian states)", false, "", 0};
  std::mt19937_64 rng(20240601);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const cv::GaussianParams p = random_params(rng);
    const double closed = marker::q_gaussian_closed(p).q;
    const double general = marker::q_general(wigner::wigner_of_gaussian(p)).q;
    const double dev = closed < 1e-6 ? std::abs(general - closed) : rel_err(general, closed);
    const double tol = closed < 1e-6 ? 1e-10 : 1e-6;
    t.check(dev <= tol, dev, "params #" + std::to_string(i) + " deviates by " + fmt(dev));
  }
  r.passed = t.ok;
  r.detail = t.ok ? "max deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult squeezed_thermal_formula() {
  CheckResult r{"2 squeezed thermal closed form", false, "", 0};
  Tally t;
  for (double n : {0.0, 0.5, 1.0})
    for (double rr : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double got = marker::q_gaussian_closed(cv::squeezed_thermal_params(n, rr)).q;
      const double want = marker::q_squeezed_thermal_closed(n, rr);
      const double dev = want == 0.0 ? std::abs(got) : rel_err(got, want);
      t.check(want == 0.0 ? std::abs(got) <= 1e-15 : dev <= 1e-12, dev,
              "n=" + fmt(n) + " r=" + fmt(rr) + " deviates by " + fmt(dev));
    }
  r.passed = t.ok;
  r.detail = t.ok ? "max relative deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult photon_mixed() {
  CheckResult r{"3 photon-number mixed state k^2(1-k)^2/2", false, "", 0};
  Tally t;
  for (int i = 0; i <= 10; ++i) {
    const double k = i / 10.0;
    const double want = marker::q_photon_mixed_closed(k);
    const double general = marker::q_general(wigner::make_photon_number_mixed(k)).q;
    const double fq = fock::fock_q(fock::fock_photon_number_mixed(k)).q;
    t.check(std::abs(general - want) <= 1e-10, std::abs(general - want), "general at k=" + fmt(k));
    t.check(std::abs(fq - want) <= 1e-12, std::abs(fq - want), "fock at k=" + fmt(k));
  }
  r.passed = t.ok;
  r.detail = t.ok ? "max absolute deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult mixture() {
  CheckResult r{"4 Gaussian + vacuum mixture closed form", false, "", 0};
  Tally t;
  for (double rr : {0.2, 0.5})
    for (double k : {0.0, 0.3, 0.7, 1.0}) {
      const cv::GaussianParams p = cv::squeezed_thermal_params(0.0, rr);
      const double want = marker::q_mixture_closed(k, p);
      const double got = marker::q_general(wigner::make_gaussian_vacuum_mixture(k, p)).q;
      if (want == 0.0) {
        t.check(std::abs(got) <= 1e-10, std::abs(got), "k=0 not zero at r=" + fmt(rr));
      } else {
        const double dev = rel_err(got, want);
        t.check(dev <= 1e-8, dev, "k=" + fmt(k) + " r=" + fmt(rr) + " deviates by " + fmt(dev));
      }
    }
  for (double k : {0.3, 0.7}) {
    const double got = marker::q_general(wigner::make_gaussian_vacuum_mixture(k, cv::squeezed_thermal_params(0.0, 0.0))).q;
    t.check(std::abs(got) <= 1e-10, std::abs(got), "c=0 not zero at k=" + fmt(k));
  }
  r.passed = t.ok;
  r.detail = t.ok ? "max deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult photon_added() {
  CheckResult r{"5 photon-added squeezed vacuum closed form", false, "", 0};
  Tally t;
  for (double rr : {0.1, 0.3, 0.5, 0.8, 1.0}) {
    const double want = marker::q_photon_added_n0(rr);
    const double got = marker::q_general(wigner::make_photon_added_squeezed_thermal(0.0, rr)).q;
    const double dev = rel_err(got, want);
    t.check(dev <= 1e-7, dev, "r=" + fmt(rr) + " deviates by " + fmt(dev));
  }
  const double zero = marker::q_general(wigner::make_photon_added_squeezed_thermal(0.0, 0.0)).q;
  t.check(zero <= 1e-9, 0.0, "q at r=0 is " + fmt(zero));
  r.passed = t.ok;
  r.detail = t.ok ? "max relative deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult surface_scan(const Config& cfg) {
  CheckResult r{"6 photon-added surface scan 11x11 over [0,1]^2", false, "", 0};
  const auto rows = marker::scan_photon_added({0.0, 1.0, 11}, {0.0, 1.0, 11}, cfg.threads);
  Tally t;
  for (const auto& row : rows) {
    if (!row.ok) {
      t.fail("row n=" + fmt(row.n) + " r=" + fmt(row.r) + " failed: " + row.message);
      continue;
    }
    if (row.r == 0.0) t.check(row.q <= 1e-9, 0.0, "r=0 row has q=" + fmt(row.q));
    if (row.r >= 0.1 - 1e-12) t.check(row.q > 0.0, 0.0, "n=" + fmt(row.n) + " r=" + fmt(row.r) + " has q<=0");
    if (row.n == 0.0 && row.r > 0.0) {
      const double dev = rel_err(row.q, marker::q_photon_added_n0(row.r));
      t.check(dev <= 1e-7, dev, "n=0 r=" + fmt(row.r) + " deviates by " + fmt(dev));
    }
  }
  r.passed = t.ok && rows.size() == 121;
  r.detail = t.ok ? std::to_string(rows.size()) + " rows, n=0 max deviation " + fmt(t.worst) : t.first_failure;
  return r;
}

CheckResult fock_oracle(const Config& cfg) {
  CheckResult r{"7 Fock-basis oracle (d=" + std::to_string(cfg.fock_dim) + ")", false, "", 0};
  Tally t;
  std::ostringstream extra;
  try {
    const double fq = fock::fock_q(fock::fock_squeezed_thermal(0.0, 0.3, cfg.fock_dim)).q;
    const double dev = rel_err(fq, marker::q_squeezed_thermal_closed(0.0, 0.3));
    extra << "two-mode squeezed vacuum relative error " << fmt(dev);
    t.check(dev <= 1e-3, dev, "two-mode squeezed vacuum off by " + fmt(dev));
  } catch (const Error& e) {
    t.fail(std::string("two-mode squeezed vacuum: ") + e.what());
  }
  const double pm = fock::fock_q(fock::fock_photon_number_mixed(0.5)).q;
  t.check(std::abs(pm - 1.0 / 32.0) <= 1e-12, 0.0, "photon-number mixed state not exact");

  std::mt19937_64 rng(7);
  const fock::FockState base = fock::fock_squeezed_thermal(0.2, 0.3, 6, {.max_deficit = 1.0});
  const double q0 = fock::fock_q(base).q;
  for (int i = 0; i < 3; ++i) {
    const auto rotated = fock::apply_local_unitaries(base, random_unitary(6, rng), random_unitary(6, rng));
    const double dev = rel_err(fock::fock_q(rotated).q, q0);
    t.check(dev <= 1e-9, 0.0, "local unitary changed q by " + fmt(dev));
  }
  r.passed = t.ok;
  r.detail = t.ok ? extra.str() : t.first_failure;
  return r;
}

CheckResult property_suite() {
  CheckResult r{"8 property suite", false, "", 0};
  Tally t;
  std::mt19937_64 rng(99);
  int gaussian = 0;
  for (int i = 0; i < 1000; ++i) {
    const cv::GaussianParams p = random_params(rng);
    const double q = marker::q_gaussian_closed(p).q;
    t.check(q >= -1e-9, 0.0, "negative closed-form q " + fmt(q));
    const double f = marker::sign_analysis_f(p);
    t.check(f <= 1e-12, 0.0, "sign analysis f = " + fmt(f) + " > 0");
    ++gaussian;
  }

  std::vector<wigner::WignerState> families;
  for (double n : {0.0, 0.5, 1.0})
    for (double rr : {0.0, 0.5, 1.0}) {
      families.push_back(wigner::make_squeezed_thermal(n, rr));
      families.push_back(wigner::make_photon_added_squeezed_thermal(n, rr));
    }
  for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    families.push_back(wigner::make_photon_number_mixed(k));
    families.push_back(wigner::make_gaussian_vacuum_mixture(k, cv::squeezed_thermal_params(0.0, 0.5)));
  }
  for (const auto& w : families) {
    const double q = marker::q_general(w).q;
    t.check(q >= -1e-9, 0.0, "negative family q " + fmt(q));
    const double norm = wigner::normalization(w);
    t.check(std::abs(norm - 1.0) <= wigner::kNormalizationTol, 0.0, "normalization " + fmt(norm));
    const double pur = wigner::purity(w);
    t.check(pur <= 1.0 + 1e-9, 0.0, "purity " + fmt(pur) + " exceeds 1");
  }

  // Product states: uncorrelated Gaussians and |+> (x) |1>.
  for (const cv::GaussianParams& p : {cv::GaussianParams{0.25, 0.25, 0, 0}, cv::GaussianParams{0.4, 0.9, 0, 0},
                                      cv::GaussianParams{1.2, 0.3, 0, 0}}) {
    const double q = marker::q_general(wigner::wigner_of_gaussian(p)).q;
    t.check(std::abs(q) <= 1e-9, 0.0, "product Gaussian q " + fmt(q));
  }
  const double prod = marker::q_general(wigner::make_photon_number_mixed(0.0)).q;
  t.check(std::abs(prod) <= 1e-9, 0.0, "product |+>|1> q " + fmt(prod));

  // Moment recursion vs brute-force quadrature.
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 1 + trial % 3;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = u(rng);
    gauss::ComplexGaussPoly g;
    g.quad = (m * m.transpose() * 0.5 + 0.4 * Eigen::MatrixXd::Identity(n, n)).cast<Complex>();
    Eigen::MatrixXd im(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) im(i, j) = im(j, i) = 0.5 * u(rng);
    g.quad += Complex(0.0, 1.0) * im.cast<Complex>();
    g.lin = Eigen::VectorXcd(n);
    for (int i = 0; i < n; ++i) g.lin(i) = Complex(0.5 * u(rng), 0.5 * u(rng));
    g.logconst = 0.0;
    g.poly = poly::SparsePoly(n);
    for (int term = 0; term < 5; ++term) {
      poly::Exponents e(n);
      int budget = 6;
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> d(0, budget);
        const int k = d(rng);
        e.set(i, k);
        budget -= k;
      }
      g.poly.add_term(e, Complex(u(rng), u(rng)));
    }
    const Complex exact = gauss::integrate(g);
    const quadrature::Result numeric = quadrature::integrate(g);
    const double dev = std::abs(exact - numeric.value) / std::abs(numeric.value);
    t.check(dev <= 1e-6, dev, "quadrature mismatch " + fmt(dev) + " in dimension " + std::to_string(n));
  }

  r.passed = t.ok;
  r.detail = t.ok ? std::to_string(gaussian) + " Gaussian states, " + std::to_string(families.size()) +
                        " family states, quadrature max deviation " + fmt(t.worst)
                  : t.first_failure;
  return r;
}

CheckResult verdicts(const Config& cfg) {
  CheckResult r{"9 zero-discord verdicts at threshold " + fmt(cfg.threshold), false, "", 0};
  Tally t;
  const std::vector<std::pair<std::string, wigner::WignerState>> zero{
      {"vacuum", wigner::make_squeezed_thermal(0.0, 0.0)},
      {"thermal", wigner::make_squeezed_thermal(0.7, 0.0)},
      {"|+>|1>", wigner::make_photon_number_mixed(0.0)},
      {"vacuum mixture", wigner::make_gaussian_vacuum_mixture(0.0, cv::squeezed_thermal_params(0, 0.5))},
  };
  for (const auto& [name, w] : zero) {
    const auto v = marker::classify(marker::q_general(w).q, cfg.threshold);
    t.check(v.verdict == marker::Verdict::Zero, 0.0, name + " classified Nonzero");
  }
  const std::vector<std::pair<std::string, wigner::WignerState>> nonzero{
      {"squeezed thermal r=0.5", wigner::make_squeezed_thermal(0.0, 0.5)},
      {"photon mixed k=0.5", wigner::make_photon_number_mixed(0.5)},
      {"photon added r=0.5", wigner::make_photon_added_squeezed_thermal(0.5, 0.5)},
  };
  for (const auto& [name, w] : nonzero) {
    const double q = marker::q_general(w).q;
    const auto v = marker::classify(q, cfg.threshold);
    t.check((v.verdict == marker::Verdict::Nonzero) == (q > cfg.threshold), 0.0, name + " verdict inconsistent");
  }
  r.passed = t.ok;
  r.detail = t.ok ? "consistent" : t.first_failure;
  return r;
}

}  // namespace

std::vector<CheckResult> run_all(const Config& cfg, const Callback& on_result) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::function<CheckResult()>> checks{
      closed_vs_general,
      squeezed_thermal_formula,
      photon_mixed,
      mixture,
      photon_added,
      [&] { return surface_scan(cfg); },
      [&] { return fock_oracle(cfg); },
      property_suite,
      [&] { return verdicts(cfg); },
  };
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    const auto start = Clock::now();
    CheckResult res;
    try {
      res = check();
    } catch (const std::exception& e) {
      res.name = "check #" + std::to_string(out.size() + 1);
      res.passed = false;
      res.detail = std::string("threw: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (on_result) on_result(res);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace discordq::verify
