#pragma once

// Two-mode Wigner functions written as finite sums of
//   poly(xi) * exp(-1/2 xi^T M xi + l^T xi + c),   xi = (x1, p1, x2, p2),
// with alpha_j = x_j + i p_j and measure d^2 alpha = dx dp per mode.

#include <vector>

#include <Eigen/Dense>

#include "discordq/cv_core.hpp"
#include "discordq/sparse_poly.hpp"

namespace discordq::wigner {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct WignerComponent {
  poly::SparsePoly poly{4};
  Mat4 quad = Mat4::Identity();
  Vec4 lin = Vec4::Zero();
  double logconst = 0.0;
};

struct WignerState {
  std::vector<WignerComponent> components;
};

/// Tolerance on the normalization integral.
inline constexpr double kNormalizationTol = 1e-9;

/// Purity is Tr(rho^2) = pi^2 * integral W^2 d^4 xi in this convention, so
/// every physical state satisfies integral W^2 <= 1 / pi^2 (vacuum saturates it).
double purity_scale();

WignerState wigner_of_gaussian(const cv::GaussianParams& p);
WignerState wigner_of_covariance(const cv::CovarianceMatrix& v);

WignerState make_squeezed_thermal(double n, double r);

/// k|00><00| + (1-k)|+1><+1| with |+> = (|0> + |1>)/sqrt(2).
WignerState make_photon_number_mixed(double k);

/// k W_G + (1-k) W_vacuum; requires c1^2 = c2^2.
WignerState make_gaussian_vacuum_mixture(double k, const cv::GaussianParams& p);

/// Single-photon-added symmetric squeezed thermal state. The photon sits in
/// mode 2 (at r = 0 the state is |0> x |1>).
WignerState make_photon_added_squeezed_thermal(double n, double r);

double eval_wigner(const WignerState& w, const Vec4& point);

/// Structural checks: symmetric positive-definite kernels, real coefficients.
void validate_structure(const WignerState& w);

/// Integral of W over all of phase space.
double normalization(const WignerState& w);

/// Integral of W^2 over all of phase space.
double square_integral(const WignerState& w);

double purity(const WignerState& w);

}  // namespace discordq::wigner
