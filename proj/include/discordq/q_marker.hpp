#pragma once

#include <string>
#include <vector>

#include "discordq/cv_core.hpp"
#include "discordq/error.hpp"
#include "discordq/report.hpp"
#include "discordq/wigner.hpp"

namespace discordq::marker {

inline constexpr double kDefaultThreshold = 1e-9;

enum class Verdict { Zero, Nonzero };

const char* to_string(Verdict v) noexcept;

struct DiscordVerdict {
  Verdict verdict = Verdict::Zero;
  double q = 0.0;
  double threshold = kDefaultThreshold;
};

/// Closed form for a Gaussian state in standard form.
QReport q_gaussian_closed(const cv::GaussianParams& p);

/// Phase-space evaluation of Q for any Gaussian-polynomial Wigner state:
/// four Wigner factors over five complex phase-space points, times an
/// oscillating phase, integrated exactly for every component 4-tuple.
QReport q_general(const wigner::WignerState& w);

/// Closed form for k W_G + (1-k) W_vacuum with c1^2 = c2^2.
double q_mixture_closed(double k, const cv::GaussianParams& p);

/// Closed form for the photon-added squeezed vacuum (n = 0).
double q_photon_added_n0(double r);

/// k^2 (1-k)^2 / 2 for the photon-number mixed state.
double q_photon_mixed_closed(double k);

/// Closed form for the squeezed thermal family.
double q_squeezed_thermal_closed(double n, double r);

/// Zero iff c1^2 + c2^2 <= tol. The verdict carries the closed-form q.
DiscordVerdict gaussian_zero_discord(const cv::GaussianParams& p, double tol);

/// Nonzero iff q > threshold.
DiscordVerdict classify(double q, double threshold = kDefaultThreshold);

/// f = prod_i (ab - chi_i)(b + 16 a^2 b - 16 a chi_i) - a^2 [b^2 + 16 prod_i (ab - chi_i)]^2
/// with chi_i = c_i^2. f <= 0 for every valid parameter set, with equality
/// only at c1 = c2 = 0.
double sign_analysis_f(const cv::GaussianParams& p);

/// g = (2ab - chi1 - chi2 - Delta) prod_i (ab - chi_i), Delta = b (32 a^2 - 1) / (16 a).
/// f = 16 ab (g - a b^3 / 16).
double sign_analysis_g(const cv::GaussianParams& p);

// ---------------------------------------------------------------------------
// Parameter scans

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  /// Parses "start:stop:count" (inclusive endpoints). Throws ParseError.
  static Grid parse(const std::string& text);
  std::vector<double> points() const;
};

inline constexpr double kLogFloor = 1e-300;

struct ScanRow {
  double n = 0.0;
  double r = 0.0;
  double q = 0.0;
  double log10_q = 0.0;
  bool ok = true;
  ErrorCode error = ErrorCode::InvalidArgument;  // meaningful only when !ok
  std::string message;
};

/// One row per (n, r), n-major, evaluated with q_general. Rows are
/// independent; errors are recorded per row and the scan continues.
/// threads == 0 picks hardware concurrency.
std::vector<ScanRow> scan_photon_added(const Grid& n_grid, const Grid& r_grid, unsigned threads = 0);

}  // namespace discordq::marker
