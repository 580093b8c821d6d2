#pragma once

// Brute-force numerical integration of Gaussian-polynomial integrands, kept
// independent of the moment recursion so it can serve as its oracle. The
// kernel is whitened by the eigenbasis of Re(A) and integrated with tensor
// composite Gauss-Legendre rules, doubling the panel count until two
// successive estimates agree.

#include <complex>

#include "discordq/gauss_engine.hpp"

namespace discordq::quadrature {

struct Options {
  double half_width = 8.5;  // in whitened units
  int initial_panels = 2;
  int max_panels = 16;
  double rel_tol = 1e-9;
};

struct Result {
  std::complex<double> value;
  double change = 0.0;  // |last - previous| of the refinement sequence
  int panels = 0;
  bool converged = false;
};

/// Supports up to 4 variables.
Result integrate(const gauss::ComplexGaussPoly& g, const Options& opts = {});

}  // namespace discordq::quadrature
