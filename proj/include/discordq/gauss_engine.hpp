#pragma once

// Exact integration of polynomials against complex Gaussian kernels over R^n:
//
//   I = integral poly(xi) exp(-1/2 xi^T A xi + b^T xi + c) d^n xi
//     = exp(log_norm) * E[poly(zeta)],  zeta ~ N(A^{-1} b, A^{-1}) (formal),
//
// valid whenever Re(A) is positive definite. Moments come from the
// integration-by-parts recursion E[xi_i m] = mu_i E[m] + sum_j S_ij E[d m / d xi_j].

#include <complex>
#include <unordered_map>

#include <Eigen/Dense>

#include "discordq/sparse_poly.hpp"

namespace discordq::gauss {

using Complex = std::complex<double>;

inline constexpr double kMaxCondition = 1e12;
inline constexpr double kSymmetryTol = 1e-12;

struct ComplexGaussPoly {
  poly::SparsePoly poly;
  Eigen::MatrixXcd quad;
  Eigen::VectorXcd lin;
  Complex logconst = 0.0;

  std::size_t arity() const { return static_cast<std::size_t>(quad.rows()); }
};

struct GaussMoments {
  Eigen::VectorXcd mean;
  Eigen::MatrixXcd cov;
  Complex log_norm = 0.0;
  double condition = 1.0;
};

/// sqrt(det A) on the branch continuous along Re(A) + i t Im(A), t in [0, 1],
/// starting from the positive root. Computed as the product of principal
/// square roots of the (unpivoted) LDL^T pivots, each of which has positive
/// real part when Re(A) is positive definite.
Complex det_sqrt_branch(const Eigen::MatrixXcd& a);

/// Same branch, returned as a logarithm.
Complex log_det_sqrt_branch(const Eigen::MatrixXcd& a);

/// Throws Divergent if Re(A) is not positive definite, IllConditioned if
/// cond(A) exceeds kMaxCondition, InvalidArgument if A is not symmetric.
GaussMoments factorize(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, Complex c);

/// Memoized Gaussian moments for a fixed (mean, cov). Not thread-safe; create
/// one per integration.
class MomentTable {
 public:
  MomentTable(const Eigen::VectorXcd& mean, const Eigen::MatrixXcd& cov);

  Complex moment(const poly::Exponents& e);
  Complex expectation(const poly::SparsePoly& p);
  std::size_t cached() const { return memo_.size(); }

 private:
  Complex compute(poly::Exponents e);

  Eigen::VectorXcd mean_;
  Eigen::MatrixXcd cov_;
  bool centered_;
  std::unordered_map<poly::Exponents, Complex, poly::ExponentsHash> memo_;
};

/// E[prod xi_i^{e_i}] under the given moments.
Complex scalar_moment(const poly::Exponents& e, const GaussMoments& m);

struct IntegrationInfo {
  double condition = 0.0;
  std::size_t moments_cached = 0;
};

Complex integrate(const ComplexGaussPoly& g, IntegrationInfo* info = nullptr);

}  // namespace discordq::gauss
