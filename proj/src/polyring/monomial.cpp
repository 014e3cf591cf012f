#include "invtheory/polyring/monomial.hpp"

#include <string>

namespace invtheory {

Monomial::Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  if (d > kMaxDegree) fail(ErrorKind::exponent_overflow, "total degree exceeds 2^16");
  degree_ = d;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exps) {
  std::vector<exponent_type> out;
  out.reserve(exps.size());
  for (auto e : exps) {
    if (e > kMaxDegree) fail(ErrorKind::exponent_overflow, "exponent exceeds 2^16");
    out.push_back(static_cast<exponent_type>(e));
  }
  return Monomial(std::move(out));
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) fail(ErrorKind::invalid_argument, "variable index out of range");
  Monomial m(num_vars);
  m.exps_[var] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) fail(ErrorKind::dimension_mismatch, "monomials on different variable sets");
  if (degree_ + other.degree_ > kMaxDegree) fail(ErrorKind::exponent_overflow, "total degree exceeds 2^16");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint32_t e = static_cast<std::uint32_t>(exps_[i]) + other.exps_[i];
    out.exps_[i] = static_cast<exponent_type>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::without_one(std::size_t var) const {
  if (exps_.at(var) == 0) fail(ErrorKind::invalid_argument, "variable does not divide monomial");
  Monomial out = *this;
  --out.exps_[var];
  --out.degree_;
  return out;
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t e) const {
  if (e > kMaxDegree) fail(ErrorKind::exponent_overflow, "exponent exceeds 2^16");
  Monomial out = *this;
  std::uint32_t d = degree_ - exps_.at(var) + e;
  if (d > kMaxDegree) fail(ErrorKind::exponent_overflow, "total degree exceeds 2^16");
  out.exps_[var] = static_cast<exponent_type>(e);
  out.degree_ = d;
  return out;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace invtheory
