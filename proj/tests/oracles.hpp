#pragma once

// Reference values computed without the library: known closed forms typed
// in directly, brute-force Wick pairings, a homotopy tracker for sqrt(det),
// random symplectic and unitary matrices.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

inline double sts_q(double n, double r) {
  const double m = 1 + 2 * n;
  return 2 * std::sinh(2 * r) * std::tanh(2 * r) /
         (m * m * m * (1 + 2 * n + 2 * n * n) * (3 + 8 * n + 8 * n * n + std::cosh(4 * r)));
}

inline double symmetric_c_q(double a, double b, double c) {
  const double big_a = (a * b - c * c) * (b + 16 * a * (a * b - c * c));
  return b * c * c / (32 * (big_a + b * c * c) * big_a);
}

// Two-term form, evaluated naively.
inline double gaussian_q_naive(double a, double b, double c1, double c2) {
  const double x1 = c1 * c1, x2 = c2 * c2;
  const double root = std::sqrt((a * b - x1) * (b + 16 * a * a * b - 16 * a * x1) * (a * b - x2) *
                                (b + 16 * a * a * b - 16 * a * x2));
  return 1 / (32 * root) - 1 / (32 * a * (b * b + 16 * (a * b - x1) * (a * b - x2)));
}

inline double mixture_q(double k, double a, double b, double c) {
  const double kb = 1 - k;
  const double c2 = c * c;
  const double big_a = (a * b - c2) * (b + 16 * a * (a * b - c2));
  const double big_b = (1 + 4 * a) * (1 + 4 * a) * b - 8 * (1 + 2 * a) * c2;
  const double big_c = ((1 + 4 * a) * (1 + 4 * b) - 16 * c2) * big_b;
  return std::pow(k, 4) * b * c2 / (32 * (big_a + b * c2) * big_a) + 8 * k * k * kb * kb * c2 / ((big_b + 4 * c2) * big_b) +
         128 * k * k * k * kb * (1 + 4 * b) * c2 / ((big_c + 8 * (1 + 4 * b) * c2) * big_c);
}

inline double photon_added_n0_q(double r) {
  const double t8 = std::pow(std::tanh(r), 8);
  return (3 + std::cosh(4 * r)) / std::pow(std::cosh(2 * r), 3) / 4 -
         std::pow(1 / std::cosh(r), 16) * (1 + 11 * t8 + 11 * t8 * t8 + t8 * t8 * t8) / std::pow(1 - t8, 5);
}

inline double photon_mixed_q(double k) { return k * k * (1 - k) * (1 - k) / 2; }

// Reference Wigner functions, point = (x1, p1, x2, p2).
inline double w_vacuum(const Eigen::Vector4d& v) {
  return 4 / (kPi * kPi) * std::exp(-2 * v.squaredNorm());
}

inline double w_sts(double n, double r, const Eigen::Vector4d& v) {
  const double x1 = v[0], p1 = v[1], x2 = v[2], p2 = v[3];
  const double m = 1 + 2 * n;
  return 4 / (m * kPi * m * kPi) *
         std::exp(-2 * ((x1 * x1 + p1 * p1 + x2 * x2 + p2 * p2) * std::cosh(2 * r) +
                        2 * (-x1 * x2 + p1 * p2) * std::sinh(2 * r)) /
                  m);
}

inline double w_photon_mixed(double k, const Eigen::Vector4d& v) {
  const double x1 = v[0], p1 = v[1], x2 = v[2], p2 = v[3];
  return w_vacuum(v) * (k + 2 * (1 - k) * (x1 + x1 * x1 + p1 * p1) * (4 * (x2 * x2 + p2 * p2) - 1));
}

inline double w_photon_added(double n, double r, const Eigen::Vector4d& v) {
  const double x1 = v[0], p1 = v[1], x2 = v[2], p2 = v[3];
  const double ch = std::cosh(2 * r), sh = std::sinh(2 * r), c2 = std::cosh(r) * std::cosh(r);
  const double u = x2 + 2 * n * x2 + x2 * ch - x1 * sh;
  const double w = p2 + 2 * n * p2 + p2 * ch + p1 * sh;
  return w_sts(n, r, v) / ((1 + 2 * n) * (1 + 2 * n) * (c2 + n * ch)) * (u * u + w * w - (1 + 2 * n) * (n + c2));
}

// exp(-1/2 xi^T V^{-1} xi) / (4 pi^2 sqrt(det V)).
inline double w_gaussian(const Eigen::Matrix4d& cov, const Eigen::Vector4d& v) {
  return std::exp(-0.5 * v.dot(cov.inverse() * v)) / (4 * kPi * kPi * std::sqrt(cov.determinant()));
}

// E[prod_k xi_{idx[k]}] under N(mu, sigma), expanded over every way of
// assigning each factor either to the mean or to a pair.
inline Complex wick(const std::vector<int>& idx, const Eigen::VectorXcd& mu, const Eigen::MatrixXcd& sigma) {
  if (idx.empty()) return 1.0;
  const int head = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  Complex sum = mu(head) * wick(rest, mu, sigma);
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> without = rest;
    without.erase(without.begin() + static_cast<long>(j));
    sum += sigma(head, rest[j]) * wick(without, mu, sigma);
  }
  return sum;
}

// sqrt(det(Re A + i t Im A)) tracked from t = 0 to 1 by nearest-root
// continuation.
inline Complex tracked_det_sqrt(const Eigen::MatrixXcd& a, int steps = 4000) {
  const Eigen::MatrixXd re = a.real();
  const Eigen::MatrixXd im = a.imag();
  Complex cur = std::sqrt(Complex(re.determinant()));
  for (int s = 1; s <= steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    const Eigen::MatrixXcd at = re.cast<Complex>() + Complex(0, t) * im.cast<Complex>();
    const Complex root = std::sqrt(at.determinant());
    cur = std::abs(root - cur) < std::abs(root + cur) ? root : -root;
  }
  return cur;
}

// Random element of Sp(2, R) = SL(2, R): rotation * squeeze * rotation.
inline Eigen::Matrix2d random_sp2(std::mt19937_64& rng, double max_squeeze = 0.8) {
  std::uniform_real_distribution<double> ang(0, 2 * kPi), sq(-max_squeeze, max_squeeze);
  auto rot = [](double t) {
    Eigen::Matrix2d m;
    m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return m;
  };
  const double s = sq(rng);
  return rot(ang(rng)) * Eigen::Vector2d(std::exp(s), std::exp(-s)).asDiagonal() * rot(ang(rng));
}

inline Eigen::Matrix4d local_symplectic(const Eigen::Matrix2d& s1, const Eigen::Matrix2d& s2) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s.block<2, 2>(0, 0) = s1;
  s.block<2, 2>(2, 2) = s2;
  return s;
}

inline Eigen::Matrix4d standard_form(double a, double b, double c1, double c2) {
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v(0, 0) = v(1, 1) = a;
  v(2, 2) = v(3, 3) = b;
  v(0, 2) = v(2, 0) = c1;
  v(1, 3) = v(3, 1) = c2;
  return v;
}

// Smallest symplectic eigenvalue, via the eigenvalues of i Omega V.
inline double min_symplectic_eigenvalue(const Eigen::Matrix4d& v) {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1;
  omega(1, 0) = omega(3, 2) = -1;
  Eigen::EigenSolver<Eigen::Matrix4d> es(omega * v);
  double m = 1e300;
  for (int i = 0; i < 4; ++i) m = std::min(m, std::abs(es.eigenvalues()(i).imag()));
  return m;
}

// Haar-ish random unitary from the QR factor of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

// Random density matrix of dimension d.
inline Eigen::MatrixXcd random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::MatrixXcd rho = m * m.adjoint();
  return rho / rho.trace().real();
}

}  // namespace oracle
