#include "invtheory/errors.hpp"

namespace invtheory {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::dimension_overflow: return "DimensionOverflow";
    case ErrorKind::exponent_overflow: return "ExponentOverflow";
    case ErrorKind::singular_matrix: return "SingularMatrix";
    case ErrorKind::modular_group_order: return "ModularGroupOrder";
    case ErrorKind::group_too_large: return "GroupTooLarge";
    case ErrorKind::group_mismatch: return "GroupMismatch";
    case ErrorKind::not_a_subgroup: return "NotASubgroup";
    case ErrorKind::non_invariant: return "NonInvariant";
    case ErrorKind::non_homogeneous: return "NonHomogeneous";
    case ErrorKind::cap_exhausted: return "CapExhausted";
    case ErrorKind::degree_out_of_range: return "DegreeOutOfRange";
    case ErrorKind::inversion_failure: return "InversionFailure";
    case ErrorKind::decomposition_unavailable: return "DecompositionUnavailable";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace invtheory
