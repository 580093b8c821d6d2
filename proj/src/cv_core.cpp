#include "discordq/cv_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "discordq/error.hpp"

namespace discordq::cv {

CovarianceMatrix GaussianParams::covariance() const {
  CovarianceMatrix out;
  out.v << a, 0, c1, 0,
           0, a, 0, c2,
           c1, 0, b, 0,
           0, c2, 0, b;
  return out;
}

GaussianParams squeezed_thermal_params(double n, double r) {
  if (!(n >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "squeezed thermal requires n >= 0 and finite r");
  }
  const double scale = (1.0 + 2.0 * n) / 4.0;
  return {scale * std::cosh(2.0 * r), scale * std::cosh(2.0 * r),
          scale * std::sinh(2.0 * r), -scale * std::sinh(2.0 * r)};
}

const char* describe(Violation v) noexcept {
  switch (v) {
    case Violation::Asymmetric: return "covariance matrix is not symmetric";
    case Violation::NonFinite: return "covariance matrix has non-finite entries";
    case Violation::Uncertainty: return "V + (i/4)Omega is not positive semidefinite";
    case Violation::SubVacuumA: return "a < 1/4";
    case Violation::SubVacuumB: return "b < 1/4";
    case Violation::CorrelationC1: return "ab < c1^2";
    case Violation::CorrelationC2: return "ab < c2^2";
  }
  return "unknown violation";
}

bool ValidationVerdict::has(Violation v) const {
  return std::any_of(violations.begin(), violations.end(),
                     [v](const ViolationItem& i) { return i.kind == v; });
}

std::string ValidationVerdict::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << describe(violations[i].kind) << " (margin " << violations[i].margin << ")";
  }
  return os.str();
}

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = 1;
  omega(1, 0) = -1;
  omega(2, 3) = 1;
  omega(3, 2) = -1;
  return omega;
}

namespace {

double local_det(const Mat4& v, int offset_row, int offset_col) {
  return v(offset_row, offset_col) * v(offset_row + 1, offset_col + 1) -
         v(offset_row, offset_col + 1) * v(offset_row + 1, offset_col);
}

}  // namespace

ValidationVerdict validate_covariance(const CovarianceMatrix& cov) {
  ValidationVerdict out;
  const Mat4& v = cov.v;
  if (!v.allFinite()) {
    out.violations.push_back({Violation::NonFinite, -1.0});
    return out;
  }
  const double asym = (v - v.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) out.violations.push_back({Violation::Asymmetric, -asym});

  const Mat4 sym = 0.5 * (v + v.transpose());
  const double det_a = local_det(sym, 0, 0);
  const double det_b = local_det(sym, 2, 2);
  // sqrt(det A) is the symplectic-invariant local variance a.
  const double a = std::sqrt(std::max(det_a, 0.0));
  const double b = std::sqrt(std::max(det_b, 0.0));
  if (det_a < 0 || a - kVacuumVariance < kPhysicalityFloor)
    out.violations.push_back({Violation::SubVacuumA, a - kVacuumVariance});
  if (det_b < 0 || b - kVacuumVariance < kPhysicalityFloor)
    out.violations.push_back({Violation::SubVacuumB, b - kVacuumVariance});

  Eigen::Matrix4cd h = sym.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 0.25) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPhysicalityFloor) out.violations.push_back({Violation::Uncertainty, min_eig});
  return out;
}

ValidationVerdict validate_params(const GaussianParams& p) {
  ValidationVerdict out;
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c1) || !std::isfinite(p.c2)) {
    out.violations.push_back({Violation::NonFinite, -1.0});
    return out;
  }
  if (p.a < kVacuumVariance) out.violations.push_back({Violation::SubVacuumA, p.a - kVacuumVariance});
  if (p.b < kVacuumVariance) out.violations.push_back({Violation::SubVacuumB, p.b - kVacuumVariance});
  const double ab = p.a * p.b;
  if (ab < p.c1 * p.c1) out.violations.push_back({Violation::CorrelationC1, ab - p.c1 * p.c1});
  if (ab < p.c2 * p.c2) out.violations.push_back({Violation::CorrelationC2, ab - p.c2 * p.c2});
  return out;
}

GaussianParams standard_form_reduce(const CovarianceMatrix& cov) {
  const ValidationVerdict verdict = validate_covariance(cov);
  if (!verdict.valid()) {
    throw Error(ErrorCode::NonPhysical, "cannot reduce covariance matrix: " + verdict.summary());
  }
  const Mat4 v = 0.5 * (cov.v + cov.v.transpose());
  const double det_a = local_det(v, 0, 0);
  const double det_b = local_det(v, 2, 2);
  const double det_c = local_det(v, 0, 2);
  const double det_v = v.determinant();

  GaussianParams p;
  p.a = std::sqrt(det_a);
  p.b = std::sqrt(det_b);
  const double ab = p.a * p.b;
  // (ab - c1^2)(ab - c2^2) = det V with c1^2 c2^2 = det C^2 fixes the sum.
  const double prod = det_c * det_c;
  const double sum = (ab * ab + prod - det_v) / ab;
  double disc = sum * sum - 4.0 * prod;
  if (disc < kDiscriminantFloor) {
    std::ostringstream os;
    os << "standard-form discriminant " << disc << " is negative";
    throw Error(ErrorCode::DegenerateInvariants, os.str());
  }
  disc = std::max(disc, 0.0);
  const double chi1 = std::max(0.5 * (sum + std::sqrt(disc)), 0.0);
  // Vieta avoids cancellation for the smaller root.
  const double chi2 = chi1 > 0.0 ? std::clamp(prod / chi1, 0.0, chi1) : 0.0;
  p.c1 = std::sqrt(chi1);
  p.c2 = std::copysign(std::sqrt(chi2), det_c);
  if (det_c == 0.0) p.c2 = 0.0;
  return p;
}

}  // namespace discordq::cv
