#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>

#include <Eigen/Dense>

namespace discordq::poly {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxArity = 16;
inline constexpr double kPruneThreshold = 1e-300;

/// Exponent vector of a monomial, up to kMaxArity variables.
class Exponents {
 public:
  Exponents() = default;
  /// Throws InvalidArgument above kMaxArity.
  explicit Exponents(std::size_t arity);
  Exponents(std::initializer_list<int> e);

  std::size_t arity() const { return arity_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  void increment(std::size_t i) { set(i, e_[i] + 1); }
  void decrement(std::size_t i) { --e_[i]; }
  int total_degree() const;
  bool is_zero() const;

  auto operator<=>(const Exponents&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxArity> e_{};
  std::uint8_t arity_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

/// Sparse polynomial with complex coefficients over a fixed number of real
/// variables. Terms are kept in a sorted map so iteration is deterministic.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Complex>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t arity) : arity_(arity) {}

  static SparsePoly constant(std::size_t arity, Complex value);
  static SparsePoly variable(std::size_t arity, std::size_t index, Complex coeff = 1.0);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponents& e, Complex coeff);
  Complex coefficient(const Exponents& e) const;

  /// Drops coefficients with magnitude at or below the threshold.
  void prune(double threshold = kPruneThreshold);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(Complex scalar);
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(SparsePoly lhs, Complex s) { return lhs *= s; }
  friend SparsePoly operator*(Complex s, SparsePoly rhs) { return rhs *= s; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);

  SparsePoly pow(int exponent) const;

  /// Substitutes variable i with the linear form sum_j map(i, j) * y_j.
  /// The result has arity map.cols().
  SparsePoly compose(const Eigen::MatrixXd& map) const;

  Complex evaluate(std::span<const double> point) const;

  /// Largest |Im| over all coefficients.
  double max_imag() const;

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

}  // namespace discordq::poly
