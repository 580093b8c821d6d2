#pragma once

// Brute-force evaluation of Q in a truncated number basis. Q is a functional
// of rho that does not depend on which orthonormal operator basis is used on
// mode B, so the matrix units |n><m| serve as well as displacement operators:
//
//   B_mn = <m|_B rho |n>_B,   Q = 1/2 sum_{(m,n),(p,q)} || [B_mn, B_pq] ||_F^2.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "discordq/error.hpp"
#include "discordq/report.hpp"

namespace discordq::fock {

inline constexpr double kMaxTraceDeficit = 1e-6;
inline constexpr int kDefaultDim = 16;

/// Density matrix on C^dim_a (x) C^dim_b, mode-A-major: |i>_A|j>_B -> i * dim_b + j.
struct FockState {
  Eigen::MatrixXcd rho;
  int dim_a = 0;
  int dim_b = 0;
  double trace_deficit = 0.0;
};

struct TruncationPolicy {
  double max_deficit = kMaxTraceDeficit;
};

/// Renormalizes to unit trace and validates Hermiticity and positivity.
FockState make_fock_state(Eigen::MatrixXcd rho, int dim_a, int dim_b, double trace_deficit = 0.0);

void validate(const FockState& s);

/// exp(M) by scaling and squaring with a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// S (rho_th(n) (x) rho_th(n)) S^dag with S = exp(r (a1^dag a2^dag - a1 a2)).
/// The squeezer conserves n1 - n2, so its generator is exponentiated one
/// conserved sector at a time in a padded working space, then projected to
/// dim x dim. Throws TruncationError when the projection loses more trace
/// than the policy allows.
FockState fock_squeezed_thermal(double n, double r, int dim, TruncationPolicy policy = {});

/// k|00><00| + (1-k)|+1><+1|, exact at dimension 2 per mode.
FockState fock_photon_number_mixed(double k);

/// a2^dag rho_STS a2 / (cosh^2 r + n cosh 2r): the photon goes to mode B.
FockState fock_photon_added_squeezed_thermal(double n, double r, int dim, TruncationPolicy policy = {});

/// k rho_STS(n, r) + (1-k)|00><00|.
FockState fock_gaussian_vacuum_mixture(double k, double n, double r, int dim, TruncationPolicy policy = {});

/// (U_A (x) U_B) rho (U_A (x) U_B)^dag.
FockState apply_local_unitaries(const FockState& s, const Eigen::MatrixXcd& ua, const Eigen::MatrixXcd& ub);

/// Blocks B_mn, stored at index m * dim_b + n.
std::vector<Eigen::MatrixXcd> conditional_blocks(const FockState& s);

QReport fock_q(const FockState& s);

using History = std::vector<std::pair<int, double>>;

class NonConvergedError : public Error {
 public:
  NonConvergedError(const std::string& what, History history)
      : Error(ErrorCode::NonConverged, what), history_(std::move(history)) {}
  const History& history() const { return history_; }

 private:
  History history_;
};

struct Convergence {
  double q = 0.0;
  History history;
};

inline constexpr double kConvergenceTol = 1e-4;

/// Evaluates fock_q(builder(d)) for each d in increasing order. Throws
/// NonConvergedError if the last two values differ by more than rel_tol.
Convergence converge_q(const std::function<FockState(int)>& builder, std::span<const int> dims,
                       double rel_tol = kConvergenceTol);

}  // namespace discordq::fock
