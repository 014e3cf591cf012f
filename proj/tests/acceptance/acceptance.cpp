// One PASS/FAIL line per acceptance criterion, each within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invtheory/cli/catalog.hpp"
#include "invtheory/cli/suites.hpp"
#include "invtheory/nullcone/checks.hpp"
#include "invtheory/polyring/text.hpp"

using namespace invtheory;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
  void suite(const std::string& name, const SuiteOptions& options = {}) {
    auto t = run_suite(name, options);
    auto bad = t.failures();
    require(bad.empty(), name + ": " + (bad.empty() ? "" : bad.front()->verdict.instance));
    require(!t.rows.empty(), name + ": no rows");
  }
};

// Hand-derived values, independent of the field for these representations.
const std::map<std::string, std::uint32_t> kBeta{{"trivial", 1}, {"z2", 2}, {"z3", 3}, {"z4", 4},
                                                  {"s2", 2},      {"klein4", 2}, {"s3", 3}};
const std::map<std::string, std::uint32_t> kEta{{"trivial", 1}, {"z2", 2}, {"z3", 3}, {"z4", 4},
                                                 {"s2", 2},      {"klein4", 3}, {"s3", 4}};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome criterion1() {
  Outcome o;
  for (const auto& e : coprime_catalog()) {
    with_field(e.spec.field, [&](const auto& f) {
      auto [b, ledger] = beta(build_defining(e.spec, f));
      o.require(ledger.complete, e.spec.name + " ledger incomplete");
      o.require(b <= e.order, e.spec.name + " beta > |G|");
      o.require(b == kBeta.at(e.family), e.spec.name + " beta differs from the oracle");
      if (e.cyclic && e.faithful_character) o.require(b == e.order, e.spec.name + " beta != |G|");
    });
  }
  o.suite("cor3.4");
  return o;
}

Outcome criterion2() {
  Outcome o;
  o.suite("thm3.8");
  o.suite("thm3.9");
  for (const std::string fam : {"klein4", "s3"}) {
    for (const std::string fld : {"gf5", "gf7", "gf13"}) {
      auto e = *find_entry(fam + "-" + fld);
      with_field(e.spec.field, [&](const auto& f) {
        const auto b = beta(build_defining(e.spec, f)).first;
        o.require(b < e.order && 4 * b <= 3 * e.order, e.spec.name);
      });
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& e : coprime_catalog()) {
    with_field(e.spec.field, [&](const auto& f) {
      auto rep = build_defining(e.spec, f);
      const auto h = eta(rep).eta;
      const auto b = beta(rep).first;
      o.require(h == kEta.at(e.family), e.spec.name + " eta differs from the oracle");
      o.require(b <= h && h <= e.order, e.spec.name + " beta <= eta <= |G|");
    });
  }
  o.suite("cor2.2");
  o.suite("lem3.1");
  o.suite("thm2.1");
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto t = run_suite("eq2.6");
  o.require(t.all_hold(), "eq2.6 failures");
  std::size_t samples = 0;
  for (const auto& r : t.rows) {
    const auto& d = r.verdict.details;
    const auto n = d.value("samples", std::size_t{0});
    samples += n;
    o.require(d.value("phi_zero", std::size_t{0}) == n, r.verdict.instance + " phi");
    o.require(d.value("product_in_ideal", std::size_t{0}) == n, r.verdict.instance + " product");
  }
  o.require(samples > 0, "no samples");
  o.note = o.ok ? std::to_string(samples) + " sample tuples" : o.note;
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.suite("lem3.2");
  const std::map<std::string, std::uint32_t> expected{{"trivial-gf5", 1}, {"trivial-gf7", 1}, {"z2-gf5", 2},
                                                      {"z2-gf7", 2},      {"z3-gf7", 3}};
  for (const auto& r : run_suite("lem3.2").rows) {
    o.require(r.verdict.lhs == expected.at(r.verdict.instance) && r.verdict.rhs == expected.at(r.verdict.instance),
              r.verdict.instance + " eta/beta(A(G)) oracle");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  o.suite("remark3.11-char2");
  for (std::size_t n = 1; n <= 3; ++n) {
    auto rep = char2_swap_representation(n);
    const auto cap = static_cast<std::uint32_t>(2 * n + 2);
    auto r = eta(rep, char2_explicit_generators(rep, cap), cap);
    o.require(r.eta == n + 1, "eta != n+1 for n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t = run_suite("thm5.1");
  o.require(t.all_hold(), "thm5.1 failures");
  std::size_t asserted = 0, skipped = 0;
  for (const auto& r : t.rows) {
    if (r.verdict.asserted) ++asserted;
    if (r.verdict.details.contains("skipped") && r.verdict.details.value("in_range", false)) ++skipped;
  }
  o.suite("remark5.2-sharpness");
  if (o.ok) o.note = std::to_string(asserted) + " in-range points full, " + std::to_string(skipped) + " over the cap";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto t = run_suite("thm5.1-rewriter");
  o.require(t.all_hold(), "rewriter failures");
  std::uint64_t total = 0;
  for (const auto& r : t.rows) {
    const auto l = std::stoul(r.verdict.instance.substr(2));
    const auto p = std::stoul(r.verdict.instance.substr(r.verdict.instance.find("p=") + 2));
    const std::uint64_t vars = l * (l + 1);
    const std::uint64_t expected = binomial(vars + (p - 1) * l, vars) - 1;
    o.require(r.verdict.rhs == expected, r.verdict.instance + " grid size");
    o.require(r.verdict.details["failures"].empty(), r.verdict.instance + " inversion failure");
    total += expected;
  }
  if (o.ok) o.note = std::to_string(total) + " certificates replayed";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const std::string s : {"thm6.1", "thm6.3", "cor6.5", "thm7.3", "cor7.4", "cor7.5"}) o.suite(s);
  for (const std::string s : {"cor6.5", "cor7.4", "cor7.5"}) {
    for (const auto& r : run_suite(s).rows) o.require(r.verdict.asserted, s + " hypothesis unmet for " + r.verdict.instance);
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.suite("invariants-crosscheck");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 60, "Noether bound over the catalog", criterion1},
      {2, 30, "strict and 3|G|/4 bounds for V4 and S3", criterion2},
      {3, 60, "beta <= eta <= |G| and the index inequality", criterion3},
      {4, 30, "Phi identity on S2 and V4", criterion4},
      {5, 120, "eta <= beta(A(G)^G)", criterion5},
      {6, 60, "char-2 swap family eta = n+1", criterion6},
      {7, 120, "Weyl span grid and sharpness", criterion7},
      {8, 120, "rewriter certificates replay", criterion8},
      {9, 120, "extension and universal invariants", criterion9},
      {10, 60, "Reynolds vs kernel bases and trace dimensions", criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = o.ok && in_budget;
    if (!in_budget && o.ok) o.note = "over budget";
    std::printf("%s criterion %d: %s (%.2fs / %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.budget_s, o.note.empty() ? "" : " - ", o.note.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
