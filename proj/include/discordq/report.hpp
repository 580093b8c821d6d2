#pragma once

#include <cstddef>

namespace discordq {

enum class Method { ClosedGaussian, GeneralWigner, FockOracle };

const char* to_string(Method m) noexcept;

struct ReportMeta {
  double max_condition = 0.0;     // GeneralWigner: worst kernel condition number
  std::size_t tuple_count = 0;    // GeneralWigner: component 4-tuples per term
  std::size_t monomial_count = 0; // GeneralWigner: assembled monomials, summed
  double imag_residue = 0.0;      // GeneralWigner: |Im q| before it was discarded
  int fock_dim_a = 0;             // FockOracle
  int fock_dim_b = 0;
  double trace_deficit = 0.0;     // FockOracle: pre-normalization trace loss
};

/// Q = term1 - term2, where term1 integrates Tr(r r' r'^dag r^dag) and term2
/// integrates Tr(r r' r^dag r'^dag) over both operator-basis labels.
struct QReport {
  double q = 0.0;
  double term1 = 0.0;
  double term2 = 0.0;
  Method method = Method::ClosedGaussian;
  ReportMeta meta;
};

}  // namespace discordq
