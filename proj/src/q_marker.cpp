#include "discordq/q_marker.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "discordq/gauss_engine.hpp"

namespace discordq {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedGaussian: return "ClosedGaussian";
    case Method::GeneralWigner: return "GeneralWigner";
    case Method::FockOracle: return "FockOracle";
  }
  return "Unknown";
}

}  // namespace discordq

namespace discordq::marker {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPoints = 5;           // complex phase-space points alpha_1..alpha_5
constexpr int kVars = 2 * kPoints;   // (x_j, p_j) pairs

using Complex = std::complex<double>;
using Combo = std::array<int, kPoints>;  // integer combination of alpha_1..alpha_5

struct FactorPattern {
  Combo mode_a;
  Combo mode_b;
};

// W(a1,a2) W(a3,a2) W(a5,a4) W(a5-a3+a1,a4)
constexpr std::array<FactorPattern, 4> kTerm1{{
    {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
    {{0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}},
    {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}},
    {{1, 0, -1, 0, 1}, {0, 0, 0, 1, 0}},
}};

// W(a1,a2) W(a3,a4) W(a5,a2) W(a5-a3+a1,a4)
constexpr std::array<FactorPattern, 4> kTerm2{{
    {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
    {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
    {{0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}},
    {{1, 0, -1, 0, 1}, {0, 0, 0, 1, 0}},
}};

constexpr int x_of(int point) { return 2 * point; }
constexpr int p_of(int point) { return 2 * point + 1; }

Eigen::MatrixXd factor_map(const FactorPattern& f) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(4, kVars);
  for (int j = 0; j < kPoints; ++j) {
    l(0, x_of(j)) = f.mode_a[j];
    l(1, p_of(j)) = f.mode_a[j];
    l(2, x_of(j)) = f.mode_b[j];
    l(3, p_of(j)) = f.mode_b[j];
  }
  return l;
}

// Symmetric P with xi^T P xi = 4 Im(a3* a1 + a5* a3 - a5* a1), using
// Im(z* w) = x_z p_w - p_z x_w.
Eigen::MatrixXd phase_form() {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(kVars, kVars);
  auto add_im = [&p](int z, int w, double s) {
    p(x_of(z), p_of(w)) += 0.5 * s;
    p(p_of(w), x_of(z)) += 0.5 * s;
    p(p_of(z), x_of(w)) -= 0.5 * s;
    p(x_of(w), p_of(z)) -= 0.5 * s;
  };
  add_im(2, 0, 4.0);
  add_im(4, 2, 4.0);
  add_im(4, 0, -4.0);
  return p;
}

struct TermResult {
  Complex value = 0.0;
  double max_condition = 0.0;
  std::size_t tuples = 0;
  std::size_t monomials = 0;
};

TermResult integrate_term(const wigner::WignerState& w, const std::array<FactorPattern, 4>& pattern) {
  const std::size_t ncomp = w.components.size();
  const Eigen::MatrixXcd phase = Complex(0.0, -2.0) * phase_form().cast<Complex>();

  // Per factor and component: composed polynomial, quadratic, linear parts.
  struct Lifted {
    poly::SparsePoly poly;
    Eigen::MatrixXd quad;
    Eigen::VectorXd lin;
    double logconst;
  };
  std::array<std::vector<Lifted>, 4> lifted;
  for (std::size_t f = 0; f < 4; ++f) {
    const Eigen::MatrixXd l = factor_map(pattern[f]);
    for (const auto& c : w.components) {
      lifted[f].push_back({c.poly.compose(l), l.transpose() * c.quad * l, l.transpose() * c.lin, c.logconst});
    }
  }

  TermResult out;
  std::array<std::size_t, 4> idx{};
  const std::size_t total = ncomp * ncomp * ncomp * ncomp;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rem = t;
    for (int f = 3; f >= 0; --f) {
      idx[f] = rem % ncomp;
      rem /= ncomp;
    }
    const Lifted& f0 = lifted[0][idx[0]];
    const Lifted& f1 = lifted[1][idx[1]];
    const Lifted& f2 = lifted[2][idx[2]];
    const Lifted& f3 = lifted[3][idx[3]];

    gauss::ComplexGaussPoly g;
    g.poly = ((f0.poly * f1.poly) * f2.poly) * f3.poly;
    g.quad = (f0.quad + f1.quad + f2.quad + f3.quad).cast<Complex>() + phase;
    g.lin = (f0.lin + f1.lin + f2.lin + f3.lin).cast<Complex>();
    g.logconst = f0.logconst + f1.logconst + f2.logconst + f3.logconst;

    gauss::IntegrationInfo info;
    out.value += gauss::integrate(g, &info);
    out.max_condition = std::max(out.max_condition, info.condition);
    out.monomials += g.poly.size();
    ++out.tuples;
  }
  out.value *= 4.0 * kPi * kPi * kPi;
  return out;
}

void require_valid(const cv::GaussianParams& p) {
  const cv::ValidationVerdict verdict = cv::validate_params(p);
  if (!verdict.valid()) {
    throw Error(ErrorCode::NonPhysical, "invalid Gaussian parameters: " + verdict.summary());
  }
}

}  // namespace

const char* to_string(Verdict v) noexcept { return v == Verdict::Zero ? "Zero" : "Nonzero"; }

double sign_analysis_f(const cv::GaussianParams& p) {
  const double a = p.a, b = p.b;
  const double x = p.c1 * p.c1, y = p.c2 * p.c2;
  // Expanded in chi so the constant term cancels exactly.
  return -a * b * b * b * (16.0 * a * a + 1.0) * (x + y) + 16.0 * a * a * b * b * (x * x + y * y) +
         b * b * (32.0 * a * a + 1.0) * x * y - 16.0 * a * b * x * y * (x + y);
}

double sign_analysis_g(const cv::GaussianParams& p) {
  const double a = p.a, b = p.b;
  const double x = p.c1 * p.c1, y = p.c2 * p.c2;
  const double delta = b * (32.0 * a * a - 1.0) / (16.0 * a);
  return (2.0 * a * b - x - y - delta) * (a * b - x) * (a * b - y);
}

QReport q_gaussian_closed(const cv::GaussianParams& p) {
  require_valid(p);
  const double a = p.a, b = p.b;
  const double ab = a * b;
  const double x = p.c1 * p.c1, y = p.c2 * p.c2;
  const double radicand = (ab - x) * (b + 16.0 * a * a * b - 16.0 * a * x) * (ab - y) *
                          (b + 16.0 * a * a * b - 16.0 * a * y);
  const double d2 = a * (b * b + 16.0 * (ab - x) * (ab - y));
  if (!(radicand > 0.0) || !(d2 > 0.0)) {
    std::ostringstream os;
    os << "closed form is degenerate for (a, b, c1, c2) = (" << a << ", " << b << ", " << p.c1 << ", "
       << p.c2 << ")";
    throw Error(ErrorCode::Degenerate, os.str());
  }
  const double d1 = std::sqrt(radicand);
  QReport rep;
  rep.method = Method::ClosedGaussian;
  rep.term1 = 1.0 / (32.0 * d1);
  rep.term2 = 1.0 / (32.0 * d2);
  // term1 - term2 = (d2 - d1) / (32 d1 d2) = -f / (32 d1 d2 (d1 + d2)), f = d1^2 - d2^2.
  // + 0.0 folds -0 (from f = 0) into +0.
  rep.q = -sign_analysis_f(p) / (32.0 * d1 * d2 * (d1 + d2)) + 0.0;
  return rep;
}

QReport q_general(const wigner::WignerState& w) {
  wigner::validate_structure(w);
  const TermResult t1 = integrate_term(w, kTerm1);
  const TermResult t2 = integrate_term(w, kTerm2);
  const Complex q = t1.value - t2.value;

  QReport rep;
  rep.method = Method::GeneralWigner;
  rep.term1 = t1.value.real();
  rep.term2 = t2.value.real();
  rep.q = rep.term1 - rep.term2;
  rep.meta.max_condition = std::max(t1.max_condition, t2.max_condition);
  rep.meta.tuple_count = t1.tuples;
  rep.meta.monomial_count = t1.monomials + t2.monomials;
  rep.meta.imag_residue = std::abs(q.imag());
  if (std::abs(q.imag()) > 1e-8 * (1.0 + std::abs(q.real()))) {
    std::ostringstream os;
    os << "Q has imaginary residue " << q.imag() << " (real part " << q.real() << ")";
    throw Error(ErrorCode::ComplexResidue, os.str());
  }
  return rep;
}

double q_mixture_closed(double k, const cv::GaussianParams& p) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "mixing weight k must lie in [0, 1]");
  if (std::abs(p.c1 * p.c1 - p.c2 * p.c2) > 1e-12) {
    throw Error(ErrorCode::ParamMismatch, "mixture closed form requires c1^2 = c2^2");
  }
  require_valid(p);
  const double a = p.a, b = p.b, c2 = p.c1 * p.c1;
  const double kb = 1.0 - k;
  const double big_a = (a * b - c2) * (b + 16.0 * a * (a * b - c2));
  const double big_b = (1.0 + 4.0 * a) * (1.0 + 4.0 * a) * b - 8.0 * (1.0 + 2.0 * a) * c2;
  const double big_c = ((1.0 + 4.0 * a) * (1.0 + 4.0 * b) - 16.0 * c2) * big_b;
  const double t1 = std::pow(k, 4) * b * c2 / (32.0 * (big_a + b * c2) * big_a);
  const double t2 = 8.0 * k * k * kb * kb * c2 / ((big_b + 4.0 * c2) * big_b);
  const double t3 = 128.0 * k * k * k * kb * (1.0 + 4.0 * b) * c2 / ((big_c + 8.0 * (1.0 + 4.0 * b) * c2) * big_c);
  return t1 + t2 + t3;
}

double q_photon_added_n0(double r) {
  const double sech2r = 1.0 / std::cosh(2.0 * r);
  const double sechr = 1.0 / std::cosh(r);
  const double t8 = std::pow(std::tanh(r), 8);
  const double first = (3.0 + std::cosh(4.0 * r)) * sech2r * sech2r * sech2r / 4.0;
  const double second = std::pow(sechr, 16) * (1.0 + 11.0 * t8 + 11.0 * t8 * t8 + t8 * t8 * t8) /
                        std::pow(1.0 - t8, 5);
  return first - second;
}

double q_photon_mixed_closed(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "mixing weight k must lie in [0, 1]");
  return k * k * (1.0 - k) * (1.0 - k) / 2.0;
}

double q_squeezed_thermal_closed(double n, double r) {
  if (!(n >= 0.0)) throw Error(ErrorCode::InvalidArgument, "thermal photon number must be >= 0");
  const double g = 1.0 + 2.0 * n;
  return 2.0 * std::sinh(2.0 * r) * std::tanh(2.0 * r) /
         (g * g * g * (1.0 + 2.0 * n + 2.0 * n * n) * (3.0 + 8.0 * n + 8.0 * n * n + std::cosh(4.0 * r)));
}

DiscordVerdict gaussian_zero_discord(const cv::GaussianParams& p, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  DiscordVerdict v;
  v.q = q_gaussian_closed(p).q;
  v.threshold = tol;
  v.verdict = (p.c1 * p.c1 + p.c2 * p.c2 <= tol) ? Verdict::Zero : Verdict::Nonzero;
  return v;
}

DiscordVerdict classify(double q, double threshold) {
  return {q > threshold ? Verdict::Nonzero : Verdict::Zero, q, threshold};
}

}  // namespace discordq::marker
