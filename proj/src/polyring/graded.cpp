#include "invtheory/polyring/graded.hpp"

#include <map>
#include <mutex>
#include <string>

namespace invtheory {

std::optional<std::size_t> component_dimension(std::size_t num_vars, std::uint32_t d, std::size_t limit) {
  if (num_vars == 0) return d == 0 ? std::optional<std::size_t>(1) : std::optional<std::size_t>(0);
  // C(n-1+d, d) built as prod_{k=1..d} (n-1+k)/k; each partial product is an integer.
  unsigned __int128 acc = 1;
  for (std::uint32_t k = 1; k <= d; ++k) {
    acc = acc * (num_vars - 1 + k) / k;
    if (acc > limit) return std::nullopt;
  }
  return static_cast<std::size_t>(acc);
}

namespace {

void enumerate(std::size_t var, std::uint32_t remaining, std::vector<Monomial::exponent_type>& exps,
               std::vector<Monomial>& out) {
  // Variables are filled from the last one down: smaller trailing exponents
  // first gives descending grevlex order.
  if (var == 0) {
    exps[0] = static_cast<Monomial::exponent_type>(remaining);
    out.emplace_back(exps);
    exps[0] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    exps[var] = static_cast<Monomial::exponent_type>(e);
    enumerate(var - 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d, std::size_t cap) {
  if (d > Monomial::kMaxDegree) fail(ErrorKind::exponent_overflow, "degree exceeds 2^16");
  auto count = component_dimension(num_vars, d, cap);
  if (!count) {
    fail(ErrorKind::dimension_overflow, "component of degree " + std::to_string(d) + " on " +
                                            std::to_string(num_vars) + " variables exceeds cap " +
                                            std::to_string(cap));
  }
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(*count);
  std::vector<Monomial::exponent_type> exps(num_vars, 0);
  enumerate(num_vars - 1, d, exps, out);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t num_vars, std::uint32_t d, std::size_t cap)
    : num_vars_(num_vars), degree_(d), monomials_(monomials_of_degree(num_vars, d, cap)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) fail(ErrorKind::invalid_argument, "monomial not in this graded component");
  return it->second;
}

MonomialBasisPtr monomial_basis(std::size_t num_vars, std::uint32_t d, std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, MonomialBasisPtr> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(num_vars, d);
  auto it = cache.find(key);
  if (it != cache.end()) {
    if (it->second->size() > cap) fail(ErrorKind::dimension_overflow, "component exceeds cap");
    return it->second;
  }
  auto basis = std::make_shared<const MonomialBasis>(num_vars, d, cap);
  cache.emplace(key, basis);
  return basis;
}

ShiftTable variable_shift(std::size_t num_vars, std::uint32_t d, std::size_t cap) {
  if (d == 0) fail(ErrorKind::invalid_argument, "variable_shift needs d >= 1");
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::uint32_t>, ShiftTable> cache;
  auto lower = monomial_basis(num_vars, d - 1, cap);
  auto upper = monomial_basis(num_vars, d, cap);
  std::lock_guard lock(mutex);
  auto key = std::make_pair(num_vars, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<std::vector<std::uint32_t>>(lower->size() * num_vars);
  for (std::size_t i = 0; i < lower->size(); ++i) {
    for (std::size_t v = 0; v < num_vars; ++v) {
      (*table)[i * num_vars + v] =
          static_cast<std::uint32_t>(upper->index_of((*lower)[i] * Monomial::variable(num_vars, v)));
    }
  }
  ShiftTable out = table;
  cache.emplace(key, out);
  return out;
}

}  // namespace invtheory
