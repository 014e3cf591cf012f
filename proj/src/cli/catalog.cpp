#include "invtheory/cli/catalog.hpp"

#include <filesystem>

namespace invtheory {

namespace {

struct FieldTag {
  std::string suffix;
  FieldDescriptor field;
};

const std::vector<FieldTag>& coprime_fields() {
  static const std::vector<FieldTag> tags{{"gf5", FieldDescriptor::prime(5)},
                                          {"gf7", FieldDescriptor::prime(7)},
                                          {"gf13", FieldDescriptor::prime(13)},
                                          {"q", FieldDescriptor::rationals()}};
  return tags;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// A primitive k-th root of unity in GF(p) for k | p - 1.
std::optional<std::int64_t> primitive_root_of_unity(std::uint32_t p, std::uint32_t k) {
  if (p == 0 || (p - 1) % k != 0) return std::nullopt;
  PrimeField f(p);
  for (std::uint32_t a = 2; a < p; ++a) {
    if (f.pow(a, k) != 1) continue;
    bool primitive = true;
    for (std::uint32_t e = 1; e < k; ++e) primitive = primitive && f.pow(a, e) != 1;
    if (primitive) return a;
  }
  return std::nullopt;
}

CatalogEntry make(std::string name, std::string family, FieldDescriptor field, std::vector<IntMatrix> gens,
                  bool faithful_character) {
  CatalogEntry e;
  e.spec.name = std::move(name);
  e.spec.field = field;
  e.spec.dim = gens.front().size();
  e.spec.generators = std::move(gens);
  e.family = std::move(family);
  e.faithful_character = faithful_character;
  with_field(field, [&](const auto& f) {
    auto g = build_group(e.spec, f);
    e.order = g->order();
    e.cyclic = g->is_cyclic();
  });
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [suffix, field] : coprime_fields()) {
    const std::uint32_t p = field.characteristic();
    auto name = [&](const std::string& family) { return family + "-" + suffix; };
    out.push_back(make(name("trivial"), "trivial", field, {identity(1)}, true));
    out.push_back(make(name("z2"), "z2", field, {{{-1}}}, true));
    if (auto w = primitive_root_of_unity(p, 3)) {
      out.push_back(make(name("z3"), "z3", field, {{{*w}}}, true));
    } else {
      out.push_back(make(name("z3"), "z3", field, {{{0, -1}, {1, -1}}}, false));
    }
    if (auto w = primitive_root_of_unity(p, 4)) {
      out.push_back(make(name("z4"), "z4", field, {{{*w}}}, true));
    } else {
      out.push_back(make(name("z4"), "z4", field, {{{0, -1}, {1, 0}}}, false));
    }
    out.push_back(make(name("s2"), "s2", field, {{{0, 1}, {1, 0}}}, false));
    out.push_back(make(name("klein4"), "klein4", field, {{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}, false));
    out.push_back(make(name("s3"), "s3", field, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}, false));
  }
  out.push_back(make("trivial-1var", "trivial", FieldDescriptor::prime(5), {identity(1)}, true));
  out.push_back(make("trivial-2var", "trivial", FieldDescriptor::prime(5), {identity(2)}, false));
  for (std::size_t n = 1; n <= 3; ++n) {
    IntMatrix sigma(2 * n, std::vector<std::int64_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) sigma[i][n + i] = sigma[n + i][i] = 1;
    out.push_back(make("char2-swap-n" + std::to_string(n), "char2-swap", FieldDescriptor::prime(2), {sigma}, false));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<CatalogEntry> coprime_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog()) {
    if (e.family == "char2-swap" || e.spec.name.find("var") != std::string::npos) continue;
    out.push_back(e);
  }
  return out;
}

std::optional<CatalogEntry> find_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.spec.name == name) return e;
  }
  return std::nullopt;
}

InstanceSpec load_instance(const std::string& name_or_path) {
  if (auto e = find_entry(name_or_path)) return e->spec;
  if (std::filesystem::is_regular_file(name_or_path)) return InstanceSpec::from_file(name_or_path);
  fail(ErrorKind::invalid_argument, "unknown instance '" + name_or_path + "' (not a catalog name or a file)");
}

}  // namespace invtheory
