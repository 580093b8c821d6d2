#include "discordq/sparse_poly.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "discordq/error.hpp"

namespace discordq::poly {

Exponents::Exponents(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
  if (arity > kMaxArity) throw Error(ErrorCode::InvalidArgument, "monomial arity exceeds 16");
}

Exponents::Exponents(std::initializer_list<int> e) : arity_(static_cast<std::uint8_t>(e.size())) {
  if (e.size() > kMaxArity) throw Error(ErrorCode::InvalidArgument, "monomial arity exceeds 16");
  std::size_t i = 0;
  for (int v : e) set(i++, v);
}

void Exponents::set(std::size_t i, int value) {
  if (i >= arity_) throw Error(ErrorCode::InvalidArgument, "exponent index out of range");
  if (value < 0 || value > 255) {
    throw Error(ErrorCode::InvalidArgument, "exponent " + std::to_string(value) + " out of range");
  }
  e_[i] = static_cast<std::uint8_t>(value);
}

int Exponents::total_degree() const {
  int d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += e_[i];
  return d;
}

bool Exponents::is_zero() const {
  for (std::size_t i = 0; i < arity_; ++i)
    if (e_[i]) return false;
  return true;
}

std::size_t Exponents::hash() const {
  std::uint64_t lo = 0, hi = 0;
  std::memcpy(&lo, e_.data(), 8);
  std::memcpy(&hi, e_.data() + 8, 8);
  // splitmix-style mixing
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  return static_cast<std::size_t>(h);
}

SparsePoly SparsePoly::constant(std::size_t arity, Complex value) {
  SparsePoly p(arity);
  p.add_term(Exponents(arity), value);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t arity, std::size_t index, Complex coeff) {
  SparsePoly p(arity);
  Exponents e(arity);
  e.set(index, 1);
  p.add_term(e, coeff);
  return p;
}

int SparsePoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

void SparsePoly::add_term(const Exponents& e, Complex coeff) {
  if (e.arity() != arity_) throw Error(ErrorCode::InvalidArgument, "monomial arity mismatch");
  if (coeff == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void SparsePoly::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.arity_ != arity_) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.arity_ != arity_) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(Complex scalar) {
  if (scalar == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  if (lhs.arity_ != rhs.arity_) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");
  SparsePoly out(lhs.arity_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(lhs.arity_);
      for (std::size_t i = 0; i < lhs.arity_; ++i) e.set(i, ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial power");
  SparsePoly result = constant(arity_, 1.0);
  for (int k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

SparsePoly SparsePoly::compose(const Eigen::MatrixXd& map) const {
  if (static_cast<std::size_t>(map.rows()) != arity_) {
    throw Error(ErrorCode::InvalidArgument, "composition map rows must equal polynomial arity");
  }
  const std::size_t out_arity = static_cast<std::size_t>(map.cols());
  // powers[i][k] = (linear form i)^k, built lazily
  std::vector<std::vector<SparsePoly>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    SparsePoly lin(out_arity);
    for (std::size_t j = 0; j < out_arity; ++j) {
      if (map(i, j) != 0.0) lin.add_term([&] {
          Exponents e(out_arity);
          e.set(j, 1);
          return e;
        }(), map(i, j));
    }
    powers[i].push_back(constant(out_arity, 1.0));
    powers[i].push_back(std::move(lin));
  }
  auto power = [&](std::size_t i, int k) -> const SparsePoly& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][k];
  };

  SparsePoly out(out_arity);
  for (const auto& [e, c] : terms_) {
    SparsePoly term = constant(out_arity, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Complex SparsePoly::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) throw Error(ErrorCode::InvalidArgument, "evaluation point arity mismatch");
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = 1.0;
    for (std::size_t i = 0; i < arity_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    sum += c * m;
  }
  return sum;
}

double SparsePoly::max_imag() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

}  // namespace discordq::poly
