#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "invtheory/errors.hpp"

namespace invtheory {

bool is_prime(std::uint64_t n);

/// GF(p) with machine-word residues in [0, p), p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }

  value_type from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_fraction(std::int64_t num, std::int64_t den) const;
  value_type from_mpz(const mpz_class& v) const;

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const noexcept;

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  /// True iff the integer n is a unit in the field, i.e. p does not divide n.
  bool is_unit_integer(std::int64_t n) const noexcept { return n % static_cast<std::int64_t>(p_) != 0; }

  std::string to_string(value_type a) const { return std::to_string(a); }
  /// Integer representative used for JSON: residue in [0, p).
  std::int64_t to_int(value_type a) const noexcept { return a; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Q with GMP rationals kept in lowest terms.
class Rationals {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }

  value_type from_int(std::int64_t v) const { return value_type(static_cast<long>(v)); }
  value_type from_fraction(std::int64_t num, std::int64_t den) const;
  value_type from_mpz(const mpz_class& v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type pow(const value_type& a, std::uint64_t e) const;

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  bool is_unit_integer(std::int64_t n) const noexcept { return n != 0; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  bool operator==(const Rationals&) const = default;
};

/// Runtime description of a ground field, as read from instance files.
struct FieldDescriptor {
  enum class Kind { prime, rationals };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldDescriptor prime(std::uint32_t p);
  static FieldDescriptor rationals() { return {}; }

  std::string name() const;
  std::uint32_t characteristic() const { return kind == Kind::prime ? p : 0; }

  bool operator==(const FieldDescriptor&) const = default;
};

inline FieldDescriptor describe(const PrimeField& f) { return FieldDescriptor::prime(f.modulus()); }
inline FieldDescriptor describe(const Rationals&) { return FieldDescriptor::rationals(); }

/// Calls fn with a concrete field object matching the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& desc, Fn&& fn) {
  if (desc.kind == FieldDescriptor::Kind::prime) return std::forward<Fn>(fn)(PrimeField(desc.p));
  return std::forward<Fn>(fn)(Rationals{});
}

/// Parses "17", "-3" or "5/4" into the field.
template <class Field>
typename Field::value_type parse_scalar(const Field& field, std::string_view text);

template <>
PrimeField::value_type parse_scalar(const PrimeField& field, std::string_view text);
template <>
Rationals::value_type parse_scalar(const Rationals& field, std::string_view text);

}  // namespace invtheory
