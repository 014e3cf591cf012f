#include "invtheory/grouprep/instance.hpp"

#include <fstream>

namespace invtheory {

nlohmann::json field_to_json(const FieldDescriptor& f) {
  if (f.kind == FieldDescriptor::Kind::prime) return {{"prime", f.p}};
  return {{"rationals", true}};
}

FieldDescriptor field_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::parse_error, "field must be an object");
  if (j.contains("prime")) {
    auto p = j.at("prime").get<std::int64_t>();
    if (p < 2 || p >= (std::int64_t{1} << 31)) fail(ErrorKind::parse_error, "prime out of range");
    return FieldDescriptor::prime(static_cast<std::uint32_t>(p));
  }
  if (j.value("rationals", false)) return FieldDescriptor::rationals();
  fail(ErrorKind::parse_error, "field must be {\"prime\": p} or {\"rationals\": true}");
}

InstanceSpec InstanceSpec::from_json(const nlohmann::json& j) {
  try {
    InstanceSpec spec;
    spec.name = j.value("name", std::string("unnamed"));
    spec.field = field_from_json(j.at("field"));
    spec.generators = j.at("generators").get<std::vector<IntMatrix>>();
    if (j.contains("dim")) spec.dim = j.at("dim").get<std::size_t>();
    else if (!spec.generators.empty()) spec.dim = spec.generators.front().size();
    if (spec.dim == 0) fail(ErrorKind::parse_error, "instance needs generators or an explicit dim");
    for (const auto& g : spec.generators) {
      if (g.size() != spec.dim) fail(ErrorKind::parse_error, "generator has wrong size");
      for (const auto& row : g) {
        if (row.size() != spec.dim) fail(ErrorKind::parse_error, "generator is not square");
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("instance JSON: ") + e.what());
  }
}

InstanceSpec InstanceSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse_error, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json InstanceSpec::to_json() const {
  return {{"name", name}, {"field", field_to_json(field)}, {"generators", generators}, {"dim", dim}};
}

}  // namespace invtheory
