#include "invtheory/exactalg/field.hpp"

#include <cctype>

namespace invtheory {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    fail(ErrorKind::invalid_argument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::value_type PrimeField::from_fraction(std::int64_t num, std::int64_t den) const {
  return div(from_int(num), from_int(den));
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) fail(ErrorKind::inversion_failure, "division by zero in " + name());
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type result = 1;
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Rationals::value_type Rationals::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) fail(ErrorKind::inversion_failure, "zero denominator");
  value_type q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rationals::value_type Rationals::inv(const value_type& a) const {
  if (sgn(a) == 0) fail(ErrorKind::inversion_failure, "division by zero in Q");
  return value_type(1) / a;
}

Rationals::value_type Rationals::pow(const value_type& a, std::uint64_t e) const {
  value_type result(1);
  value_type base = a;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldDescriptor FieldDescriptor::prime(std::uint32_t p) {
  PrimeField check(p);
  FieldDescriptor d;
  d.kind = Kind::prime;
  d.p = check.modulus();
  return d;
}

std::string FieldDescriptor::name() const {
  return kind == Kind::prime ? "GF(" + std::to_string(p) + ")" : std::string("Q");
}

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) fail(ErrorKind::parse_error, "empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(ErrorKind::parse_error, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

std::pair<mpz_class, mpz_class> parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(text), mpz_class(1)};
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
  return {parse_integer(text.substr(0, slash)), den};
}

}  // namespace

template <>
PrimeField::value_type parse_scalar(const PrimeField& field, std::string_view text) {
  auto [num, den] = parse_fraction(text);
  return field.div(field.from_mpz(num), field.from_mpz(den));
}

template <>
Rationals::value_type parse_scalar(const Rationals&, std::string_view text) {
  auto [num, den] = parse_fraction(text);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace invtheory
