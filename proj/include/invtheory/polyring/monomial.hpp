#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "invtheory/errors.hpp"

namespace invtheory {

/// Exponent vector with cached total degree. Exponents and total degree are
/// bounded by 2^16; exceeding either is a hard error.
class Monomial {
 public:
  using exponent_type = std::uint16_t;
  static constexpr std::uint32_t kMaxDegree = 0xFFFF;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps);
  static Monomial from_exponents(std::span<const std::uint32_t> exps);
  static Monomial variable(std::size_t num_vars, std::size_t var);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  exponent_type operator[](std::size_t var) const { return exps_[var]; }
  const std::vector<exponent_type>& exponents() const noexcept { return exps_; }

  bool is_one() const noexcept { return degree_ == 0; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }
  /// Divides by one power of `var`; the exponent must be positive.
  Monomial without_one(std::size_t var) const;
  Monomial with_exponent(std::size_t var, std::uint32_t e) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

 private:
  std::vector<exponent_type> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order: higher degree first; on ties the
/// monomial with the smaller exponent in the last differing variable is larger.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

/// Strict weak "descending grevlex" order used for term storage: a comes
/// before b when a is grevlex-larger.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace invtheory
