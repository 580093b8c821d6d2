#pragma once

// Two-mode covariance data in the quadrature convention x = (a + a^dag)/2,
// p = -i(a - a^dag)/2, where the vacuum has variance 1/4 per quadrature.
// To convert a covariance matrix from the hbar = 1 convention
// (x = (a + a^dag)/sqrt(2), vacuum variance 1/2) multiply it by 1/2.

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace discordq::cv {

using Mat4 = Eigen::Matrix4d;

inline constexpr double kVacuumVariance = 0.25;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPhysicalityFloor = -1e-10;
inline constexpr double kDiscriminantFloor = -1e-10;

/// Covariance matrix over (x1, p1, x2, p2).
struct CovarianceMatrix {
  Mat4 v = Mat4::Identity() * kVacuumVariance;
};

/// Standard-form parameters: A = diag(a, a), B = diag(b, b), C = diag(c1, c2).
struct GaussianParams {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c1 = 0.0;
  double c2 = 0.0;

  CovarianceMatrix covariance() const;
};

GaussianParams squeezed_thermal_params(double n, double r);

enum class Violation {
  Asymmetric,      // |V - V^T| above kSymmetryTol
  NonFinite,
  Uncertainty,     // V + (i/4) Omega has a negative eigenvalue
  SubVacuumA,      // a < 1/4
  SubVacuumB,      // b < 1/4
  CorrelationC1,   // ab < c1^2
  CorrelationC2,   // ab < c2^2
};

const char* describe(Violation v) noexcept;

struct ViolationItem {
  Violation kind;
  double margin;  // signed amount by which the constraint fails (negative)
};

struct ValidationVerdict {
  std::vector<ViolationItem> violations;
  bool valid() const { return violations.empty(); }
  bool has(Violation v) const;
  std::string summary() const;
};

/// 4x4 symplectic form, block-diagonal in the two modes.
Mat4 symplectic_form();

ValidationVerdict validate_covariance(const CovarianceMatrix& v);

/// Checks a >= 1/4, b >= 1/4, ab >= c1^2, ab >= c2^2. Does not check the full
/// uncertainty relation; use validate_covariance(p.covariance()) for that.
ValidationVerdict validate_params(const GaussianParams& p);

/// Reduces a physical covariance matrix to standard form through its four
/// local-symplectic invariants. Output convention: c1 >= |c2|, c1 >= 0,
/// sign(c2) = sign(det C).
GaussianParams standard_form_reduce(const CovarianceMatrix& v);

}  // namespace discordq::cv
