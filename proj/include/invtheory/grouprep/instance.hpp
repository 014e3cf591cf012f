#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "invtheory/exactalg/field.hpp"
#include "invtheory/grouprep/representation.hpp"

namespace invtheory {

/// A group given by integer generator matrices, reduced into the field.
///   {"field": {"prime": 7} | {"rationals": true},
///    "generators": [[[row], [row]], ...], "name": "..."}
struct InstanceSpec {
  std::string name;
  FieldDescriptor field;
  std::vector<IntMatrix> generators;
  std::size_t dim = 0;

  static InstanceSpec from_json(const nlohmann::json& j);
  static InstanceSpec from_file(const std::string& path);
  nlohmann::json to_json() const;
};

nlohmann::json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const nlohmann::json& j);

template <class Field>
GroupPtr<Field> build_group(const InstanceSpec& spec, const Field& field, std::size_t cap = kDefaultGroupCap) {
  std::vector<DenseMatrix<Field>> gens;
  for (const auto& g : spec.generators) gens.push_back(DenseMatrix<Field>::from_integers(field, g));
  return generate_group(field, gens, spec.dim, cap);
}

template <class Field>
Representation<Field> build_defining(const InstanceSpec& spec, const Field& field) {
  return Representation<Field>::defining(build_group(spec, field));
}

}  // namespace invtheory
