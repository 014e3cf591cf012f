#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invtheory/exactalg/field.hpp"
#include "invtheory/polyring/index_order.hpp"
#include "invtheory/polyring/polynomial.hpp"

namespace invtheory {

/// One instruction of a certificate program. Registers 0..s-1 hold the
/// sources; step k writes register s + k.
struct CertificateStep {
  enum class Kind { polarize, permute_copies, scale, combine, recurse };
  Kind kind = Kind::polarize;
  std::size_t arg = 0;
  /// polarize: P_{j,jp}
  std::size_t j = 0;
  std::size_t jp = 0;
  /// permute_copies: copy c goes to perm[c]
  std::vector<std::size_t> perm;
  /// scale: a field element stored as its residue
  std::uint32_t scalar = 1;
  /// combine: sum of coefficient * register
  std::vector<std::pair<std::uint32_t, std::size_t>> terms;
  /// recurse: the submatrix block handled by the argument register
  std::size_t l_prime = 0;
  std::vector<std::size_t> rows;
};

std::string_view to_string(CertificateStep::Kind kind);

/// x^target written as operators applied to monomials whose copy-0 column is
/// zero, i.e. monomials on copies 1..l.
struct RewriteCertificate {
  std::uint32_t p = 0;
  std::size_t l = 0;
  ExponentMatrix target;
  std::vector<ExponentMatrix> sources;
  std::vector<CertificateStep> steps;
  std::size_t result = 0;

  std::size_t operator_applications() const;
  nlohmann::json to_json() const;
  static RewriteCertificate from_json(const nlohmann::json& j);
};

/// Rewrites a monomial on l+1 copies with deg <= (p-1)l. Throws
/// degree_out_of_range outside that range unless copy 0 is already unused.
RewriteCertificate rewrite_monomial(const ExponentMatrix& target, std::uint32_t p);

struct ReplayResult {
  Polynomial<PrimeField> value;
  bool sources_on_last_copies = false;
  bool reproduces_target = false;
  nlohmann::json to_json() const;
};

/// Evaluates the program with exact arithmetic over GF(p).
ReplayResult replay(const RewriteCertificate& cert);

/// Layout of l coordinates on l+1 copies.
LayoutPtr rewrite_layout(std::size_t l);

}  // namespace invtheory
