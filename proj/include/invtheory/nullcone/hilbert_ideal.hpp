#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invtheory/invariants/ledger.hpp"
#include "invtheory/verdict.hpp"

namespace invtheory {

/// Graded slices of the ideal generated by homogeneous positive-degree
/// elements: I_d = span(gens of degree d) + sum_v x_v I_{d-1}.
template <class Field>
class HilbertIdeal {
 public:
  using value_type = typename Field::value_type;

  HilbertIdeal(Field field, std::size_t num_vars, std::vector<GradedElement<Field>> gens,
               std::size_t cap = kDefaultColumnCap)
      : field_(std::move(field)), num_vars_(num_vars), gens_(std::move(gens)), cap_(cap) {
    for (const auto& g : gens_) {
      if (g.degree == 0) fail(ErrorKind::non_homogeneous, "ideal generators must have positive degree");
    }
    slices_.push_back(SubspaceBasis<Field>(field_, 1));
  }

  std::size_t num_vars() const noexcept { return num_vars_; }

  const SubspaceBasis<Field>& component(std::uint32_t d) {
    while (slices_.size() <= d) extend();
    return slices_[d];
  }

  bool full(std::uint32_t d) { return component(d).is_full(); }

  bool contains(const Polynomial<Field>& f) {
    if (f.is_zero()) return true;
    for (std::uint32_t d = static_cast<std::uint32_t>(f.min_degree()); d <= static_cast<std::uint32_t>(f.degree()); ++d) {
      auto part = f.homogeneous_part(d);
      if (part.is_zero()) continue;
      if (d == 0) return false;
      if (!component(d).contains(component_to_vector(part, *monomial_basis(num_vars_, d, cap_)))) return false;
    }
    return true;
  }

 private:
  void extend() {
    const auto d = static_cast<std::uint32_t>(slices_.size());
    auto basis = monomial_basis(num_vars_, d, cap_);
    EchelonBuilder<Field> eb(field_, basis->size());
    for (const auto& g : gens_) {
      if (g.degree == d) eb.insert(g.coords);
    }
    const auto& lower = slices_[d - 1];
    if (lower.rank() > 0) {
      auto shift = variable_shift(num_vars_, d, cap_);
      std::vector<value_type> w(basis->size());
      for (std::size_t r = 0; r < lower.rank() && !eb.is_full(); ++r) {
        auto row = lower.row(r);
        for (std::size_t v = 0; v < num_vars_ && !eb.is_full(); ++v) {
          std::fill(w.begin(), w.end(), field_.zero());
          for (std::size_t i = 0; i < row.size(); ++i) {
            if (!field_.is_zero(row[i])) w[(*shift)[i * num_vars_ + v]] = row[i];
          }
          eb.insert(w);
        }
      }
    }
    slices_.push_back(eb.basis());
  }

  Field field_;
  std::size_t num_vars_;
  std::vector<GradedElement<Field>> gens_;
  std::size_t cap_;
  std::vector<SubspaceBasis<Field>> slices_;
};

template <class Field>
struct HilbertIdealComponent {
  std::uint32_t degree;
  SubspaceBasis<Field> basis;
  bool full;
};

/// Checks that each polynomial is homogeneous of positive degree and
/// G-invariant, and returns coordinates.
template <class Field>
std::vector<GradedElement<Field>> invariant_generators(const Representation<Field>& rep,
                                                       const std::vector<Polynomial<Field>>& gens,
                                                       std::size_t cap = kDefaultColumnCap) {
  std::vector<GradedElement<Field>> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous() || g.degree() <= 0) fail(ErrorKind::non_homogeneous, "generator " + render(g));
    if (!is_invariant(rep, g)) fail(ErrorKind::non_invariant, "generator " + render(g));
    auto d = static_cast<std::uint32_t>(g.degree());
    out.push_back({d, component_to_vector(g, *monomial_basis(rep.num_vars(), d, cap))});
  }
  return out;
}

template <class Field>
HilbertIdealComponent<Field> hilbert_ideal_component(const Representation<Field>& rep,
                                                     const std::vector<Polynomial<Field>>& gens, std::uint32_t d,
                                                     std::size_t cap = kDefaultColumnCap) {
  HilbertIdeal<Field> ideal(rep.field(), rep.num_vars(), invariant_generators(rep, gens, cap), cap);
  const auto& c = ideal.component(d);
  return {d, c, c.is_full()};
}

enum class GeneratorSource { computed, user_supplied };

struct EtaReport {
  std::uint32_t eta = 0;
  std::map<std::uint32_t, bool> per_degree;
  GeneratorSource source = GeneratorSource::computed;
  std::uint32_t cap_used = 0;
  bool stayed_full = true;
  std::size_t generator_count = 0;

  nlohmann::json to_json() const {
    nlohmann::json flags = nlohmann::json::object();
    for (const auto& [d, f] : per_degree) flags[std::to_string(d)] = f;
    nlohmann::json j{{"eta", eta},
                     {"per_degree_full", flags},
                     {"generator_source", source == GeneratorSource::computed ? "computed-reynolds" : "user-supplied"},
                     {"cap", cap_used},
                     {"stayed_full", stayed_full},
                     {"generator_count", generator_count}};
    if (source == GeneratorSource::user_supplied) {
      j["assumption"] = "the supplied generators are assumed to generate the Hilbert ideal up to the cap";
    }
    return j;
  }
};

/// η from an ideal: the first full degree, with fullness re-checked up to the cap.
template <class Field>
EtaReport eta_from_ideal(HilbertIdeal<Field>& ideal, std::uint32_t cap, GeneratorSource source) {
  EtaReport report;
  report.source = source;
  report.cap_used = cap;
  std::optional<std::uint32_t> first;
  for (std::uint32_t d = 1; d <= cap; ++d) {
    bool f = ideal.full(d);
    report.per_degree[d] = f;
    if (f && !first) first = d;
    if (!f && first) report.stayed_full = false;
  }
  if (!first) fail(ErrorKind::cap_exhausted, "no full degree up to cap " + std::to_string(cap) + "; eta > cap");
  report.eta = *first;
  return report;
}

/// η_G(m) of k[V]. Without generators the invariants up to degree |G|
/// are computed (this needs |G| invertible); with generators a cap is required.
template <class Field>
EtaReport eta(const Representation<Field>& rep, const std::optional<std::vector<Polynomial<Field>>>& gens = std::nullopt,
              std::optional<std::uint32_t> cap = std::nullopt) {
  const auto order = static_cast<std::uint32_t>(rep.group()->order());
  std::vector<GradedElement<Field>> coords;
  GeneratorSource source;
  if (gens) {
    if (!cap) fail(ErrorKind::invalid_argument, "eta with supplied generators needs an explicit cap");
    coords = invariant_generators(rep, *gens);
    source = GeneratorSource::user_supplied;
  } else {
    require_invertible_order(*rep.group());
    coords = minimal_generators_up_to(rep, order, InvariantMethod::reynolds).all_coords();
    source = GeneratorSource::computed;
  }
  HilbertIdeal<Field> ideal(rep.field(), rep.num_vars(), coords);
  auto report = eta_from_ideal(ideal, cap.value_or(order), source);
  report.generator_count = coords.size();
  return report;
}

template <class Field>
EtaReport eta(const Representation<Field>& rep, const std::vector<Polynomial<Field>>& gens,
              std::optional<std::uint32_t> cap = std::nullopt) {
  return eta(rep, std::optional<std::vector<Polynomial<Field>>>(gens), cap);
}

}  // namespace invtheory
