#include "discordq/wigner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "discordq/error.hpp"
#include "discordq/gauss_engine.hpp"

namespace discordq::wigner {

namespace {

using poly::Exponents;
using poly::SparsePoly;

constexpr double kPi = std::numbers::pi;

SparsePoly var(std::size_t i, double coeff = 1.0) { return SparsePoly::variable(4, i, coeff); }
SparsePoly cst(double value) { return SparsePoly::constant(4, value); }

WignerComponent vacuum_component() {
  WignerComponent c;
  c.poly = cst(1.0);
  c.quad = 4.0 * Mat4::Identity();
  c.logconst = std::log(4.0 / (kPi * kPi));
  return c;
}

void check_unit_interval(double k, const char* what) {
  if (!(k >= 0.0 && k <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << k;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

gauss::ComplexGaussPoly as_gauss(const WignerComponent& c) {
  gauss::ComplexGaussPoly g;
  g.poly = c.poly;
  g.quad = c.quad.cast<std::complex<double>>();
  g.lin = c.lin.cast<std::complex<double>>();
  g.logconst = c.logconst;
  return g;
}

}  // namespace

double purity_scale() { return kPi * kPi; }

WignerState wigner_of_covariance(const cv::CovarianceMatrix& cov) {
  const double det = cov.v.determinant();
  if (!(det > 0.0)) {
    std::ostringstream os;
    os << "covariance determinant " << det << " is not positive";
    throw Error(ErrorCode::SingularCovariance, os.str());
  }
  WignerComponent c;
  c.poly = cst(1.0);
  c.quad = cov.v.inverse();
  c.quad = 0.5 * (c.quad + c.quad.transpose()).eval();
  c.logconst = -std::log(4.0 * kPi * kPi * std::sqrt(det));
  return WignerState{{c}};
}

WignerState wigner_of_gaussian(const cv::GaussianParams& p) {
  const cv::ValidationVerdict verdict = cv::validate_params(p);
  if (!verdict.valid()) {
    throw Error(ErrorCode::NonPhysical, "invalid Gaussian parameters: " + verdict.summary());
  }
  return wigner_of_covariance(p.covariance());
}

WignerState make_squeezed_thermal(double n, double r) {
  return wigner_of_gaussian(cv::squeezed_thermal_params(n, r));
}

WignerState make_photon_number_mixed(double k) {
  check_unit_interval(k, "mixing weight k");
  // W0 [k + 2(1-k)(x1 + x1^2 + p1^2)(4 x2^2 + 4 p2^2 - 1)]
  const SparsePoly mode1 = var(0) + var(0) * var(0) + var(1) * var(1);
  const SparsePoly mode2 = var(2, 4.0) * var(2) + var(3, 4.0) * var(3) - cst(1.0);
  WignerComponent c = vacuum_component();
  c.poly = cst(k) + (2.0 * (1.0 - k)) * (mode1 * mode2);
  c.poly.prune();
  return WignerState{{c}};
}

WignerState make_gaussian_vacuum_mixture(double k, const cv::GaussianParams& p) {
  check_unit_interval(k, "mixing weight k");
  if (std::abs(p.c1 * p.c1 - p.c2 * p.c2) > 1e-12) {
    std::ostringstream os;
    os << "Gaussian-vacuum mixture requires c1^2 = c2^2 (got c1 = " << p.c1 << ", c2 = " << p.c2 << ")";
    throw Error(ErrorCode::ParamMismatch, os.str());
  }
  WignerState out;
  if (k > 0.0) {
    WignerComponent g = wigner_of_gaussian(p).components.front();
    g.logconst += std::log(k);
    out.components.push_back(g);
  }
  if (k < 1.0) {
    WignerComponent v = vacuum_component();
    v.logconst += std::log(1.0 - k);
    out.components.push_back(v);
  }
  return out;
}

WignerState make_photon_added_squeezed_thermal(double n, double r) {
  if (!(n >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "photon-added state requires n >= 0 and finite r");
  }
  const double ch2 = std::cosh(2.0 * r);
  const double sh2 = std::sinh(2.0 * r);
  const double chr = std::cosh(r);
  const double g = 1.0 + 2.0 * n;

  WignerComponent c;
  c.quad = wigner_of_gaussian(cv::squeezed_thermal_params(n, r)).components.front().quad;
  c.logconst = std::log(4.0 / (g * g * kPi * kPi));

  const SparsePoly u = var(2, g + ch2) - var(0, sh2);
  const SparsePoly v = var(3, g + ch2) + var(1, sh2);
  const double normalizer = g * g * (chr * chr + n * ch2);
  c.poly = u * u + v * v - cst(g * (n + chr * chr));
  c.poly *= 1.0 / normalizer;
  c.poly.prune();
  return WignerState{{c}};
}

double eval_wigner(const WignerState& w, const Vec4& point) {
  std::complex<double> sum = 0.0;
  const std::array<double, 4> pt{point(0), point(1), point(2), point(3)};
  for (const auto& c : w.components) {
    const double exponent = -0.5 * point.dot(c.quad * point) + c.lin.dot(point) + c.logconst;
    sum += c.poly.evaluate(pt) * std::exp(exponent);
  }
  return sum.real();
}

void validate_structure(const WignerState& w) {
  if (w.components.empty()) throw Error(ErrorCode::InvalidArgument, "Wigner state has no components");
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    const auto& c = w.components[i];
    std::ostringstream where;
    where << "component " << i << ": ";
    if (c.poly.arity() != 4) throw Error(ErrorCode::InvalidArgument, where.str() + "polynomial arity must be 4");
    if (!c.quad.allFinite() || !c.lin.allFinite() || !std::isfinite(c.logconst)) {
      throw Error(ErrorCode::InvalidArgument, where.str() + "non-finite kernel data");
    }
    if ((c.quad - c.quad.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, c.quad.cwiseAbs().maxCoeff())) {
      throw Error(ErrorCode::InvalidArgument, where.str() + "kernel matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Mat4> es(c.quad, Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() > 0.0)) {
      throw Error(ErrorCode::Divergent, where.str() + "kernel matrix is not positive definite");
    }
    if (c.poly.max_imag() != 0.0) {
      throw Error(ErrorCode::InvalidArgument, where.str() + "Wigner polynomial coefficients must be real");
    }
  }
}

double normalization(const WignerState& w) {
  validate_structure(w);
  std::complex<double> sum = 0.0;
  for (const auto& c : w.components) sum += gauss::integrate(as_gauss(c));
  return sum.real();
}

double square_integral(const WignerState& w) {
  validate_structure(w);
  std::complex<double> sum = 0.0;
  for (const auto& ci : w.components) {
    for (const auto& cj : w.components) {
      WignerComponent prod;
      prod.poly = ci.poly * cj.poly;
      prod.quad = ci.quad + cj.quad;
      prod.lin = ci.lin + cj.lin;
      prod.logconst = ci.logconst + cj.logconst;
      sum += gauss::integrate(as_gauss(prod));
    }
  }
  return sum.real();
}

double purity(const WignerState& w) { return purity_scale() * square_integral(w); }

}  // namespace discordq::wigner
