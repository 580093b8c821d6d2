#include "discordq/gauss_engine.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "discordq/error.hpp"

namespace discordq::gauss {

namespace {

void check_square_symmetric(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "Gaussian kernel matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    std::ostringstream os;
    os << "Gaussian kernel matrix is not symmetric (|A - A^T| = " << asym << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

void check_real_part_definite(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXd re = 0.5 * (a.real() + a.real().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double tol = 1e-12 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (!(lo > tol)) {
    std::ostringstream os;
    os << "Re(A) is not positive definite (smallest eigenvalue " << lo << ")";
    throw Error(ErrorCode::Divergent, os.str());
  }
}

}  // namespace

Complex log_det_sqrt_branch(const Eigen::MatrixXcd& a) {
  check_square_symmetric(a);
  check_real_part_definite(a);
  Eigen::MatrixXcd work = a;
  const Eigen::Index n = a.rows();
  Complex log_sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex pivot = work(k, k);
    // Schur complements of A inherit Re(.) > 0, so the principal branch is
    // continuous along the homotopy.
    log_sum += 0.5 * std::log(pivot);
    if (k + 1 < n) {
      const Eigen::Index m = n - k - 1;
      work.bottomRightCorner(m, m).noalias() -=
          work.col(k).tail(m) * work.row(k).tail(m) / pivot;
    }
  }
  return log_sum;
}

Complex det_sqrt_branch(const Eigen::MatrixXcd& a) { return std::exp(log_det_sqrt_branch(a)); }

GaussMoments factorize(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, Complex c) {
  check_square_symmetric(a);
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "linear term has wrong size");
  check_real_part_definite(a);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(cond <= kMaxCondition)) {
    std::ostringstream os;
    os << "Gaussian kernel condition number " << cond << " exceeds " << kMaxCondition;
    throw Error(ErrorCode::IllConditioned, os.str());
  }

  GaussMoments m;
  m.condition = cond;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  m.cov = lu.inverse();
  m.cov = 0.5 * (m.cov + m.cov.transpose()).eval();
  m.mean = m.cov * b;
  const double n = static_cast<double>(a.rows());
  // b^T A^{-1} b without conjugation: A is complex symmetric, not Hermitian.
  const Complex quad_form = (b.transpose() * m.mean)(0);
  m.log_norm = 0.5 * n * std::log(2.0 * std::numbers::pi) - log_det_sqrt_branch(a) +
               0.5 * quad_form + c;
  return m;
}

MomentTable::MomentTable(const Eigen::VectorXcd& mean, const Eigen::MatrixXcd& cov)
    : mean_(mean), cov_(cov), centered_(mean.cwiseAbs().maxCoeff() == 0.0) {
  memo_.reserve(1 << 12);
}

Complex MomentTable::moment(const poly::Exponents& e) {
  if (e.arity() != static_cast<std::size_t>(mean_.size())) {
    throw Error(ErrorCode::InvalidArgument, "moment arity mismatch");
  }
  return compute(e);
}

Complex MomentTable::compute(poly::Exponents e) {
  if (e.is_zero()) return 1.0;
  if (centered_ && (e.total_degree() & 1)) return 0.0;
  if (auto it = memo_.find(e); it != memo_.end()) return it->second;

  const poly::Exponents key = e;
  const std::size_t n = e.arity();
  std::size_t i = 0;
  while (e[i] == 0) ++i;
  e.decrement(i);

  Complex value = 0.0;
  if (mean_(i) != Complex(0.0)) value += mean_(i) * compute(e);
  for (std::size_t j = 0; j < n; ++j) {
    const int ej = e[j];
    if (ej == 0 || cov_(i, j) == Complex(0.0)) continue;
    poly::Exponents lowered = e;
    lowered.decrement(j);
    value += cov_(i, j) * static_cast<double>(ej) * compute(lowered);
  }
  memo_.emplace(key, value);
  return value;
}

Complex MomentTable::expectation(const poly::SparsePoly& p) {
  Complex sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += c * moment(e);
  return sum;
}

Complex scalar_moment(const poly::Exponents& e, const GaussMoments& m) {
  MomentTable table(m.mean, m.cov);
  return table.moment(e);
}

Complex integrate(const ComplexGaussPoly& g, IntegrationInfo* info) {
  if (g.poly.arity() != g.arity()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial arity does not match kernel dimension");
  }
  const GaussMoments m = factorize(g.quad, g.lin, g.logconst);
  MomentTable table(m.mean, m.cov);
  const Complex expectation = table.expectation(g.poly);
  if (info) {
    info->condition = m.condition;
    info->moments_cached = table.cached();
  }
  if (expectation == Complex(0.0)) return 0.0;
  return std::exp(m.log_norm) * expectation;
}

}  // namespace discordq::gauss
