#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invtheory/invariants/invariants.hpp"
#include "invtheory/polyring/text.hpp"

namespace invtheory {

/// A homogeneous element stored by coordinates in its graded component.
template <class Field>
struct GradedElement {
  std::uint32_t degree;
  std::vector<typename Field::value_type> coords;
};

/// Spans A_d (d <= max_degree) of the subalgebra generated by homogeneous
/// elements: A_d = span(gens of degree d) + sum_e gens_e * A_{d-e}.
template <class Field>
std::vector<SubspaceBasis<Field>> subalgebra_spans(const Field& field, std::size_t num_vars,
                                                   const std::vector<GradedElement<Field>>& gens,
                                                   std::uint32_t max_degree, std::size_t cap = kDefaultColumnCap) {
  std::vector<SubspaceBasis<Field>> spans;
  spans.reserve(max_degree + 1);
  spans.push_back(rref(DenseMatrix<Field>::identity(field, 1)));
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    auto basis = monomial_basis(num_vars, d, cap);
    EchelonBuilder<Field> eb(field, basis->size());
    for (const auto& g : gens) {
      if (g.degree == 0 || g.degree > d) continue;
      const auto& lower = spans[d - g.degree];
      for (std::size_t r = 0; r < lower.rank() && !eb.is_full(); ++r) {
        eb.insert(multiply_components(field, num_vars, g.degree, std::span<const typename Field::value_type>(g.coords),
                                      d - g.degree, lower.row(r), cap));
      }
    }
    spans.push_back(eb.basis());
  }
  return spans;
}

/// Minimal generators degree by degree (graded Nakayama).
template <class Field>
struct GeneratorLedger {
  FieldDescriptor field;
  LayoutPtr layout;
  std::size_t group_order = 0;
  std::uint32_t cap_used = 0;
  bool complete = false;
  bool modular = false;
  /// generators[d] are the new generators in degree d (RREF of their residues).
  std::map<std::uint32_t, std::vector<Polynomial<Field>>> generators;
  std::map<std::uint32_t, std::vector<GradedElement<Field>>> generator_coords;
  std::map<std::uint32_t, std::size_t> invariant_dims;
  std::map<std::uint32_t, std::size_t> product_dims;

  /// Largest degree with a new generator (0 if none).
  std::uint32_t beta() const {
    std::uint32_t b = 0;
    for (const auto& [d, gs] : generators) {
      if (!gs.empty()) b = std::max(b, d);
    }
    return b;
  }
  /// True when generators still appear at the cap and completeness is not guaranteed.
  bool lower_bound_only() const {
    auto it = generators.find(cap_used);
    return !complete && it != generators.end() && !it->second.empty();
  }
  std::size_t count(std::uint32_t d) const {
    auto it = generators.find(d);
    return it == generators.end() ? 0 : it->second.size();
  }
  std::vector<GradedElement<Field>> all_coords() const {
    std::vector<GradedElement<Field>> out;
    for (const auto& [d, gs] : generator_coords) out.insert(out.end(), gs.begin(), gs.end());
    return out;
  }
  std::vector<Polynomial<Field>> all_generators() const {
    std::vector<Polynomial<Field>> out;
    for (const auto& [d, gs] : generators) out.insert(out.end(), gs.begin(), gs.end());
    return out;
  }
};

template <class Field>
GeneratorLedger<Field> minimal_generators_up_to(GradedAction<Field>& action, std::uint32_t cap,
                                                InvariantMethod method = InvariantMethod::kernel) {
  if (cap < 1) fail(ErrorKind::invalid_argument, "degree cap must be at least 1");
  const auto& rep = action.representation();
  const Field& field = rep.field();
  const std::size_t n = rep.num_vars();
  const auto& g = *rep.group();
  GeneratorLedger<Field> ledger;
  ledger.field = describe(field);
  ledger.layout = rep.layout();
  ledger.group_order = g.order();
  ledger.cap_used = cap;
  ledger.modular = !g.order_invertible();
  ledger.complete = !ledger.modular && cap >= g.order();

  // invariants[e] for e < d; products of generators with them span the
  // lower-degree part of degree d once degrees < d are generated.
  std::vector<SubspaceBasis<Field>> invariants;
  invariants.push_back(rref(DenseMatrix<Field>::identity(field, 1)));
  for (std::uint32_t d = 1; d <= cap; ++d) {
    auto comp = invariant_basis(action, d, method);
    auto basis = monomial_basis(n, d, action.cap());
    EchelonBuilder<Field> products(field, basis->size());
    for (const auto& [e, gens] : ledger.generator_coords) {
      const auto& lower = invariants[d - e];
      for (const auto& gen : gens) {
        for (std::size_t r = 0; r < lower.rank() && products.rank() < comp.dim(); ++r) {
          products.insert(multiply_components(field, n, e, std::span<const typename Field::value_type>(gen.coords),
                                              d - e, lower.row(r), action.cap()));
        }
      }
    }
    auto product_span = products.basis();
    ledger.invariant_dims[d] = comp.dim();
    ledger.product_dims[d] = product_span.rank();
    if (product_span.rank() < comp.dim()) {
      DenseMatrix<Field> residues(field, 0, basis->size());
      for (std::size_t r = 0; r < comp.dim(); ++r) residues.append_row(product_span.residual(comp.basis.row(r)));
      auto fresh = rref(std::move(residues));
      auto& polys = ledger.generators[d];
      auto& coords = ledger.generator_coords[d];
      for (std::size_t r = 0; r < fresh.rank(); ++r) {
        coords.push_back({d, std::vector<typename Field::value_type>(fresh.row(r).begin(), fresh.row(r).end())});
        polys.push_back(vector_to_polynomial(field, rep.layout(), *basis, fresh.row(r)));
      }
    }
    invariants.push_back(std::move(comp.basis));
  }
  return ledger;
}

template <class Field>
GeneratorLedger<Field> minimal_generators_up_to(const Representation<Field>& rep, std::uint32_t cap,
                                                InvariantMethod method = InvariantMethod::kernel) {
  GradedAction<Field> action(rep);
  return minimal_generators_up_to(action, cap, method);
}

/// Exact β(k[V]^G) with the Noether cap |G|; the ledger is the certificate.
template <class Field>
std::pair<std::uint32_t, GeneratorLedger<Field>> beta(const Representation<Field>& rep) {
  require_invertible_order(*rep.group());
  auto ledger = minimal_generators_up_to(rep, static_cast<std::uint32_t>(rep.group()->order()));
  return {ledger.beta(), std::move(ledger)};
}

/// True iff the elements generate k[V]^G in every degree <= max_degree.
template <class Field>
bool generates_invariants(GradedAction<Field>& action, const std::vector<GradedElement<Field>>& gens,
                          std::uint32_t max_degree) {
  const auto& rep = action.representation();
  auto spans = subalgebra_spans(rep.field(), rep.num_vars(), gens, max_degree, action.cap());
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    auto inv = invariant_basis(action, d);
    if (!(spans[d] == inv.basis)) return false;
  }
  return true;
}

template <class Field>
nlohmann::json ledger_to_json(const GeneratorLedger<Field>& ledger) {
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [d, gs] : ledger.generators) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : gs) list.push_back(render(p));
    gens[std::to_string(d)] = list;
  }
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [d, n] : ledger.invariant_dims) dims[std::to_string(d)] = n;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [d, n] : ledger.invariant_dims) counts[std::to_string(d)] = ledger.count(d);
  nlohmann::json j{{"field", ledger.field.name()},
                   {"group_order", ledger.group_order},
                   {"cap", ledger.cap_used},
                   {"beta", ledger.beta()},
                   {"complete", ledger.complete},
                   {"modular", ledger.modular},
                   {"generators", gens},
                   {"generator_counts", counts},
                   {"invariant_dims", dims}};
  if (ledger.lower_bound_only()) {
    j["beta_lower_bound"] = ledger.cap_used;
    j["note"] = "generators still appear at the cap; in the modular case beta can be unbounded (Richman)";
  } else if (!ledger.complete) {
    j["note"] = ledger.modular ? "modular case: beta reported up to the cap only" : "cap below |G|: completeness not guaranteed";
  }
  return j;
}

}  // namespace invtheory
