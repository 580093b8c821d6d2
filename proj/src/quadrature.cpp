#include "discordq/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "discordq/error.hpp"

namespace discordq::quadrature {

namespace {

using Complex = std::complex<double>;

// 10-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 10> kNodes{
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
    -0.1488743389816312, 0.1488743389816312,  0.4333953941292472,  0.6794095682990244,
    0.8650633666889845,  0.9739065285171717};
constexpr std::array<double, 10> kWeights{
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820, 0.2692667193099963,
    0.2955242247147529, 0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
    0.1494513491505806, 0.0666713443086881};

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

Rule composite_rule(double lo, double hi, int panels) {
  Rule r;
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      r.x.push_back(mid + 0.5 * h * kNodes[k]);
      r.w.push_back(0.5 * h * kWeights[k]);
    }
  }
  return r;
}

}  // namespace

Result integrate(const gauss::ComplexGaussPoly& g, const Options& opts) {
  const int n = static_cast<int>(g.arity());
  if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgument, "quadrature oracle supports 1 to 4 variables");
  if (g.poly.arity() != g.arity()) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");

  const Eigen::MatrixXd re = 0.5 * (g.quad.real() + g.quad.real().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re);
  if (!(es.eigenvalues().minCoeff() > 0.0)) throw Error(ErrorCode::Divergent, "Re(A) is not positive definite");
  // xi = T eta turns Re(A) into the identity.
  const Eigen::MatrixXd t = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal();
  const double jacobian = std::abs(t.determinant());
  const Eigen::MatrixXcd quad = t.transpose().cast<Complex>() * g.quad * t.cast<Complex>();
  const Eigen::VectorXcd lin = t.transpose().cast<Complex>() * g.lin;
  // Saddle point of the whitened exponent, projected to the real axis.
  const Eigen::VectorXd center = quad.partialPivLu().solve(lin).real();

  // Polynomial re-expressed in the whitened variables.
  std::vector<std::pair<std::vector<int>, Complex>> terms;
  int max_exp = 0;
  const poly::SparsePoly whitened = g.poly.compose(t);
  for (const auto& [e, c] : whitened.terms()) {
    std::vector<int> ex(n);
    for (int i = 0; i < n; ++i) {
      ex[i] = e[i];
      max_exp = std::max(max_exp, e[i]);
    }
    terms.emplace_back(std::move(ex), c);
  }

  auto evaluate = [&](int panels) {
    std::vector<Rule> rules;
    // per-axis tables: exponent contributions and coordinate powers
    std::vector<std::vector<Complex>> axis_exp(n);
    std::vector<std::vector<std::vector<double>>> axis_pow(n);
    for (int i = 0; i < n; ++i) {
      rules.push_back(composite_rule(center(i) - opts.half_width, center(i) + opts.half_width, panels));
      for (double x : rules[i].x) {
        axis_exp[i].push_back(-0.5 * quad(i, i) * x * x + lin(i) * x);
        std::vector<double> pw(max_exp + 1, 1.0);
        for (int e = 1; e <= max_exp; ++e) pw[e] = pw[e - 1] * x;
        axis_pow[i].push_back(std::move(pw));
      }
    }
    const int m = static_cast<int>(rules[0].x.size());
    std::vector<int> idx(n, 0);
    Complex sum = 0.0;
    double l1 = 0.0;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    for (long flat = 0; flat < total; ++flat) {
      long rem = flat;
      double w = 1.0;
      Complex exponent = g.logconst;
      for (int i = n - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(rem % m);
        rem /= m;
        w *= rules[i].w[idx[i]];
        exponent += axis_exp[i][idx[i]];
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) exponent -= quad(i, j) * rules[i].x[idx[i]] * rules[j].x[idx[j]];
      Complex p = 0.0;
      for (const auto& [ex, c] : terms) {
        double mono = 1.0;
        for (int i = 0; i < n; ++i) mono *= axis_pow[i][idx[i]][ex[i]];
        p += c * mono;
      }
      const Complex v = w * p * std::exp(exponent);
      sum += v;
      l1 += std::abs(v);
    }
    return std::pair{sum * jacobian, l1 * jacobian};
  };

  Result res;
  res.panels = opts.initial_panels;
  res.value = evaluate(res.panels).first;
  while (res.panels * 2 <= opts.max_panels) {
    // Measured against the integral of |integrand| so that cancelling
    // integrands are not penalised.
    const auto [next, l1] = evaluate(res.panels * 2);
    res.change = std::abs(next - res.value);
    res.value = next;
    res.panels *= 2;
    if (res.change <= opts.rel_tol * l1) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace discordq::quadrature
