#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invtheory {

enum class ErrorKind {
  dimension_mismatch,
  dimension_overflow,
  exponent_overflow,
  singular_matrix,
  modular_group_order,
  group_too_large,
  group_mismatch,
  not_a_subgroup,
  non_invariant,
  non_homogeneous,
  cap_exhausted,
  degree_out_of_range,
  inversion_failure,
  decomposition_unavailable,
  invalid_argument,
  parse_error,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace invtheory
