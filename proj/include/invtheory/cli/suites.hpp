#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invtheory/verdict.hpp"

namespace invtheory {

struct SuiteRow {
  Verdict verdict;
  double runtime_ms = 0;
};

struct VerdictTable {
  std::string suite;
  std::vector<SuiteRow> rows;

  /// Rows that are asserted and do not hold.
  std::vector<const SuiteRow*> failures() const;
  bool all_hold() const { return failures().empty(); }
  /// Rows sorted by (theorem, instance); runtimes dropped when stable.
  nlohmann::json to_json(bool stable) const;
  std::string summary() const;
};

/// Weyl grid: l in ls, p in ps, l <= m <= n <= l + nmax_offset.
struct WeylGrid {
  std::vector<std::size_t> ls{1, 2};
  std::vector<std::uint32_t> ps{3, 5};
  std::size_t nmax_offset = 2;

  /// "l=1,2 p=3,5 nmax=+2"; omitted keys keep their defaults.
  static WeylGrid parse(const std::string& text);
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  WeylGrid grid;
};

/// Known suite names, in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

VerdictTable run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace invtheory
