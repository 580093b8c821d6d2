#include "discordq/fock.hpp"

#include <cmath>
#include <sstream>

namespace discordq::fock {

namespace {

using Complex = std::complex<double>;

template <typename Matrix>
Matrix expm_impl(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "expm needs a square matrix");
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix scaled = m / std::ldexp(1.0, squarings);
  // ||scaled|| <= 1/2: 20 Taylor terms leave an error far below 1e-16.
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  for (int k = 1; k <= 20; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

void check_dim(int dim) {
  if (dim < 4) throw Error(ErrorCode::InvalidArgument, "Fock truncation dimension must be >= 4");
  if (dim > 64) throw Error(ErrorCode::InvalidArgument, "Fock truncation dimension must be <= 64");
}

// Pure-state ensemble on the working space: weights and sparse amplitudes.
struct Ket {
  double weight;
  std::vector<std::tuple<int, int, double>> amps;  // (n_A, n_B, amplitude)
};

// Members S|j,k> of the squeezed thermal ensemble with weights w_j w_k, computed
// in a working space with `work` levels per mode.
std::vector<Ket> squeezed_thermal_ensemble(double n, double r, int work) {
  std::vector<double> thermal(work);
  for (int j = 0; j < work; ++j) thermal[j] = std::pow(n, j) / std::pow(1.0 + n, j + 1);

  std::vector<Ket> out;
  for (int delta = -(work - 1); delta <= work - 1; ++delta) {
    // sector states |s + da, s + db>, s = 0..len-1
    const int da = std::max(delta, 0);
    const int db = std::max(-delta, 0);
    const int len = work - std::max(da, db);
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(len, len);
    for (int s = 0; s + 1 < len; ++s) {
      const double amp = r * std::sqrt(static_cast<double>(s + da + 1) * (s + db + 1));
      gen(s + 1, s) = amp;   // a1^dag a2^dag
      gen(s, s + 1) = -amp;  // -a1 a2
    }
    const Eigen::MatrixXd u = expm(gen);
    for (int s = 0; s < len; ++s) {
      const double w = thermal[s + da] * thermal[s + db];
      if (w == 0.0) continue;
      Ket ket{w, {}};
      for (int t = 0; t < len; ++t) {
        if (u(t, s) != 0.0) ket.amps.emplace_back(t + da, t + db, u(t, s));
      }
      out.push_back(std::move(ket));
    }
  }
  return out;
}

Eigen::MatrixXcd project(const std::vector<Ket>& ensemble, int dim) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
  std::vector<std::pair<int, double>> inside;
  for (const Ket& ket : ensemble) {
    inside.clear();
    for (const auto& [i, j, amp] : ket.amps) {
      if (i < dim && j < dim) inside.emplace_back(i * dim + j, amp);
    }
    for (const auto& [p, ap] : inside)
      for (const auto& [q, aq] : inside) rho(p, q) += ket.weight * ap * aq;
  }
  return rho;
}

int working_dim(int dim) { return 2 * dim + 16; }

FockState finish(Eigen::MatrixXcd rho, int dim, double expected_trace, const TruncationPolicy& policy,
                 const char* what) {
  const double trace = rho.trace().real();
  const double deficit = 1.0 - trace / expected_trace;
  if (deficit > policy.max_deficit) {
    std::ostringstream os;
    os << what << ": truncation at dimension " << dim << " loses trace " << deficit
       << " (limit " << policy.max_deficit << ")";
    throw Error(ErrorCode::TruncationError, os.str());
  }
  return make_fock_state(std::move(rho), dim, dim, std::max(deficit, 0.0));
}

void check_family(double n, double r) {
  if (!(n >= 0.0) || !std::isfinite(n) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "squeezed thermal state requires finite n >= 0 and finite r");
  }
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) { return expm_impl(m); }
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return expm_impl(m); }

FockState make_fock_state(Eigen::MatrixXcd rho, int dim_a, int dim_b, double trace_deficit) {
  if (dim_a <= 0 || dim_b <= 0 || rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::InvalidArgument, "density matrix shape does not match the mode dimensions");
  }
  const Complex trace = rho.trace();
  if (!(trace.real() > 0.0)) throw Error(ErrorCode::InvalidArgument, "density matrix has non-positive trace");
  rho /= trace.real();
  FockState s{std::move(rho), dim_a, dim_b, trace_deficit};
  validate(s);
  return s;
}

void validate(const FockState& s) {
  const double herm = (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (deviation " << herm << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (std::abs(s.rho.trace().real() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "density matrix trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << es.eigenvalues().minCoeff();
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

FockState fock_squeezed_thermal(double n, double r, int dim, TruncationPolicy policy) {
  check_family(n, r);
  check_dim(dim);
  const auto ensemble = squeezed_thermal_ensemble(n, r, working_dim(dim));
  return finish(project(ensemble, dim), dim, 1.0, policy, "squeezed thermal state");
}

FockState fock_photon_number_mixed(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "mixing weight k must lie in [0, 1]");
  // basis |00>, |01>, |10>, |11>
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  rho(0, 0) = k;
  Eigen::Vector4cd plus_one(0.0, 1.0, 0.0, 1.0);  // (|0> + |1>)_A (x) |1>_B
  plus_one /= std::sqrt(2.0);
  rho += (1.0 - k) * plus_one * plus_one.adjoint();
  return make_fock_state(std::move(rho), 2, 2);
}

FockState fock_photon_added_squeezed_thermal(double n, double r, int dim, TruncationPolicy policy) {
  check_family(n, r);
  check_dim(dim);
  auto ensemble = squeezed_thermal_ensemble(n, r, working_dim(dim));
  for (Ket& ket : ensemble) {
    for (auto& [i, j, amp] : ket.amps) {
      amp *= std::sqrt(static_cast<double>(j + 1));
      ++j;
    }
  }
  const double norm = std::cosh(r) * std::cosh(r) + n * std::cosh(2.0 * r);
  return finish(project(ensemble, dim), dim, norm, policy, "photon-added squeezed thermal state");
}

FockState fock_gaussian_vacuum_mixture(double k, double n, double r, int dim, TruncationPolicy policy) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::InvalidArgument, "mixing weight k must lie in [0, 1]");
  check_family(n, r);
  check_dim(dim);
  const auto ensemble = squeezed_thermal_ensemble(n, r, working_dim(dim));
  Eigen::MatrixXcd rho = k * project(ensemble, dim);
  rho(0, 0) += 1.0 - k;
  return finish(std::move(rho), dim, 1.0, policy, "Gaussian-vacuum mixture");
}

FockState apply_local_unitaries(const FockState& s, const Eigen::MatrixXcd& ua, const Eigen::MatrixXcd& ub) {
  if (ua.rows() != s.dim_a || ua.cols() != s.dim_a || ub.rows() != s.dim_b || ub.cols() != s.dim_b) {
    throw Error(ErrorCode::InvalidArgument, "local unitary dimensions do not match the state");
  }
  const int n = s.dim_a * s.dim_b;
  Eigen::MatrixXcd u(n, n);
  for (int i = 0; i < s.dim_a; ++i)
    for (int j = 0; j < s.dim_a; ++j) u.block(i * s.dim_b, j * s.dim_b, s.dim_b, s.dim_b) = ua(i, j) * ub;
  Eigen::MatrixXcd rho = u * s.rho * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return make_fock_state(std::move(rho), s.dim_a, s.dim_b, s.trace_deficit);
}

std::vector<Eigen::MatrixXcd> conditional_blocks(const FockState& s) {
  const int da = s.dim_a, db = s.dim_b;
  std::vector<Eigen::MatrixXcd> blocks(static_cast<std::size_t>(db) * db, Eigen::MatrixXcd::Zero(da, da));
  for (int m = 0; m < db; ++m)
    for (int n = 0; n < db; ++n) {
      Eigen::MatrixXcd& b = blocks[m * db + n];
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) b(i, j) = s.rho(i * db + m, j * db + n);
    }
  return blocks;
}

QReport fock_q(const FockState& s) {
  const auto blocks = conditional_blocks(s);
  std::vector<const Eigen::MatrixXcd*> live;
  for (const auto& b : blocks)
    if (b.cwiseAbs().maxCoeff() > 0.0) live.push_back(&b);

  // Unordered pairs; the commutator norm is symmetric in its arguments.
  double term1 = 0.0, term2 = 0.0, q = 0.0;
  Eigen::MatrixXcd xy, yx;
  for (std::size_t i = 0; i < live.size(); ++i) {
    const Eigen::MatrixXcd& x = *live[i];
    xy.noalias() = x * x;
    term1 += xy.squaredNorm();
    term2 += xy.squaredNorm();
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      const Eigen::MatrixXcd& y = *live[j];
      xy.noalias() = x * y;
      yx.noalias() = y * x;
      term1 += xy.squaredNorm() + yx.squaredNorm();
      term2 += 2.0 * yx.cwiseProduct(xy.conjugate()).sum().real();
      q += (xy - yx).squaredNorm();
    }
  }
  QReport rep;
  rep.method = Method::FockOracle;
  rep.q = q;
  rep.term1 = term1;
  rep.term2 = term2;
  rep.meta.fock_dim_a = s.dim_a;
  rep.meta.fock_dim_b = s.dim_b;
  rep.meta.trace_deficit = s.trace_deficit;
  return rep;
}

Convergence converge_q(const std::function<FockState(int)>& builder, std::span<const int> dims, double rel_tol) {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "convergence needs at least one dimension");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] <= dims[i - 1]) throw Error(ErrorCode::InvalidArgument, "dimensions must be increasing");
  }
  Convergence out;
  for (int d : dims) out.history.emplace_back(d, fock_q(builder(d)).q);
  out.q = out.history.back().second;
  if (out.history.size() >= 2) {
    const double prev = out.history[out.history.size() - 2].second;
    const double scale = std::max(std::abs(out.q), std::abs(prev));
    const double diff = std::abs(out.q - prev);
    if (diff > rel_tol * scale && diff > 1e-15) {
      std::ostringstream os;
      os << "Fock-basis Q not converged: " << prev << " at d=" << dims[dims.size() - 2] << " vs " << out.q
         << " at d=" << dims.back();
      throw NonConvergedError(os.str(), out.history);
    }
  }
  return out;
}

}  // namespace discordq::fock
