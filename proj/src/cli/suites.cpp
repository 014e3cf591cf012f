#include "invtheory/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "invtheory/cli/catalog.hpp"
#include "invtheory/nullcone/checks.hpp"
#include "invtheory/polyring/text.hpp"
#include "invtheory/weylpol/rewriter.hpp"
#include "invtheory/weylpol/universal.hpp"

namespace invtheory {

std::vector<const SuiteRow*> VerdictTable::failures() const {
  std::vector<const SuiteRow*> out;
  for (const auto& r : rows) {
    if (r.verdict.asserted && !r.verdict.holds) out.push_back(&r);
  }
  return out;
}

nlohmann::json VerdictTable::to_json(bool stable) const {
  std::vector<const SuiteRow*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const SuiteRow* a, const SuiteRow* b) {
    return std::tie(a->verdict.theorem, a->verdict.instance) < std::tie(b->verdict.theorem, b->verdict.instance);
  });
  nlohmann::json out = nlohmann::json::array();
  for (const auto* r : sorted) {
    auto j = r->verdict.to_json();
    if (!stable) j["runtime_ms"] = r->runtime_ms;
    out.push_back(std::move(j));
  }
  return {{"suite", suite}, {"rows", out}, {"all_hold", all_hold()}, {"failures", failures().size()}};
}

std::string VerdictTable::summary() const {
  std::ostringstream os;
  std::size_t asserted = 0, recorded = 0;
  for (const auto& r : rows) (r.verdict.asserted ? asserted : recorded)++;
  const auto bad = failures();
  os << suite << ": " << (asserted - bad.size()) << "/" << asserted << " asserted rows hold";
  if (recorded) os << ", " << recorded << " recorded";
  os << (bad.empty() ? "  [ok]" : "  [FAILED]") << "\n";
  for (const auto* r : bad) os << "  FAIL " << r->verdict.to_json().dump() << "\n";
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(const std::string& s) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::parse_error, "expected a non-negative integer, got '" + s + "'");
  }
}

}  // namespace

WeylGrid WeylGrid::parse(const std::string& text) {
  WeylGrid g;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', ' ');
  for (const auto& token : split(normalized, ' ')) {
    auto eq = token.find('=');
    if (eq == std::string::npos) fail(ErrorKind::parse_error, "grid token '" + token + "' is not key=value");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "l") {
      g.ls.clear();
      for (const auto& v : split(value, ',')) g.ls.push_back(parse_uint(v));
    } else if (key == "p") {
      g.ps.clear();
      for (const auto& v : split(value, ',')) {
        auto p = parse_uint(v);
        if (!is_prime(p)) fail(ErrorKind::parse_error, "grid prime " + v + " is not prime");
        g.ps.push_back(static_cast<std::uint32_t>(p));
      }
    } else if (key == "nmax") {
      g.nmax_offset = parse_uint(value.rfind('+', 0) == 0 ? value.substr(1) : value);
    } else {
      fail(ErrorKind::parse_error, "unknown grid key '" + key + "'");
    }
  }
  if (g.ls.empty() || g.ps.empty()) fail(ErrorKind::parse_error, "grid needs at least one l and one p");
  for (auto l : g.ls) {
    if (l == 0) fail(ErrorKind::parse_error, "grid l must be positive");
  }
  return g;
}

nlohmann::json WeylGrid::to_json() const { return {{"l", ls}, {"p", ps}, {"nmax_offset", nmax_offset}}; }

namespace {

using Clock = std::chrono::steady_clock;

void add_row(VerdictTable& t, const std::string& theorem, const std::string& instance,
             const std::function<Verdict()>& fn) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = fn();
  } catch (const Error& e) {
    v = Verdict{};
    v.theorem = theorem;
    v.instance = instance;
    v.holds = false;
    v.details = {{"error", e.what()}, {"error_kind", std::string(to_string(e.kind()))}};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  t.rows.push_back({std::move(v), ms});
}

/// Calls fn(entry, rep) with the defining representation over the entry's field.
template <class Fn>
void for_entries(const std::vector<CatalogEntry>& entries, Fn&& fn) {
  for (const auto& e : entries) {
    with_field(e.spec.field, [&](const auto& f) { fn(e, build_defining(e.spec, f)); });
  }
}

std::vector<CatalogEntry> entries_named(const std::vector<std::string>& names) {
  std::vector<CatalogEntry> out;
  for (const auto& n : names) {
    auto e = find_entry(n);
    if (!e) fail(ErrorKind::invalid_argument, "catalog lacks " + n);
    out.push_back(*e);
  }
  return out;
}

std::vector<CatalogEntry> families_over(const std::vector<std::string>& families, const std::vector<std::string>& fields) {
  std::vector<std::string> names;
  for (const auto& fam : families) {
    for (const auto& f : fields) names.push_back(fam + "-" + f);
  }
  return entries_named(names);
}

std::string members_string(const std::vector<std::size_t>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

// ---- degree bounds ----

void suite_cor34(VerdictTable& t) {
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    add_row(t, "cor3.4", e.spec.name, [&] {
      auto [b, ledger] = beta(rep);
      Verdict v;
      v.theorem = "cor3.4";
      v.instance = e.spec.name;
      v.lhs = b;
      v.rhs = e.order;
      const bool exact = !e.faithful_character || b == e.order;
      v.holds = ledger.complete && b <= e.order && exact;
      v.details = {{"faithful_character", e.faithful_character},
                   {"cyclic", e.cyclic},
                   {"generator_counts", ledger_to_json(ledger)["generator_counts"]}};
      if (e.faithful_character) v.details["beta_equals_order"] = b == e.order;
      return v;
    });
  });
}

void suite_beta_strict(VerdictTable& t, bool dhs) {
  const std::string tag = dhs ? "thm3.9" : "thm3.8";
  for_entries(families_over({"klein4", "s3"}, {"gf5", "gf7", "gf13"}), [&](const CatalogEntry& e, const auto& rep) {
    add_row(t, tag, e.spec.name, [&] {
      const auto b = beta(rep).first;
      Verdict v;
      v.theorem = tag;
      v.instance = e.spec.name;
      v.lhs = b;
      if (dhs) {
        mpq_class bound(3 * static_cast<long>(e.order), 4);
        bound.canonicalize();
        v.rhs = bound.get_str();
        v.holds = e.order % 2 == 0 && mpq_class(static_cast<long>(b)) <= bound;
        v.details = {{"order", e.order}, {"bound", "3|G|/4"}};
      } else {
        v.rhs = e.order;
        v.holds = b < e.order;
        v.details = {{"cyclic", e.cyclic}};
      }
      return v;
    });
  });
}

// ---- Hilbert ideal ----

void suite_cor22(VerdictTable& t) {
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    add_row(t, "cor2.2", e.spec.name, [&] {
      auto r = eta(rep);
      Verdict v;
      v.theorem = "cor2.2";
      v.instance = e.spec.name;
      v.lhs = r.eta;
      v.rhs = e.order;
      v.holds = r.eta <= e.order;
      v.details = r.to_json();
      return v;
    });
  });
}

void suite_lem31(VerdictTable& t) {
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    add_row(t, "lem3.1", e.spec.name, [&] { return check_beta_le_eta(rep, e.spec.name); });
  });
}

void suite_thm21(VerdictTable& t) {
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    for (const auto& h : enumerate_subgroups(rep.group())) {
      const auto name = e.spec.name + " H=" + members_string(h.members);
      if (!rep.field().is_unit_integer(static_cast<std::int64_t>(h.index()))) continue;
      add_row(t, "thm2.1", name, [&] { return check_index_inequality(rep, h, name); });
    }
  });
}

void suite_eq26(VerdictTable& t) {
  for_entries(families_over({"s2", "klein4"}, {"gf5", "gf7", "gf13", "q"}), [&](const CatalogEntry& e, const auto& rep) {
    for (const auto& h : enumerate_subgroups(rep.group())) {
      if (h.index() > kPhiIndexLimit) continue;
      const auto name = e.spec.name + " H=" + members_string(h.members);
      add_row(t, "eq2.6", name, [&] { return check_phi_identity(rep, h, exhaustive_phi_samples(rep, h, 2), name); });
    }
  });
}

void suite_lem32(VerdictTable& t) {
  for_entries(entries_named({"trivial-gf5", "trivial-gf7", "z2-gf5", "z2-gf7", "z3-gf7"}),
              [&](const CatalogEntry& e, const auto& rep) {
                add_row(t, "lem3.2", e.spec.name, [&] { return check_eta_le_beta_AG(rep, e.spec.name); });
              });
}

void suite_char2(VerdictTable& t) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto name = "char2-swap-n" + std::to_string(n);
    add_row(t, "remark3.11-char2", name, [&] {
      const auto cap = static_cast<std::uint32_t>(2 * n + 2);
      auto r = char2_example(n, cap);
      Verdict v;
      v.theorem = "remark3.11-char2";
      v.instance = name;
      v.lhs = r.eta.eta;
      v.rhs = n + 1;
      v.holds = r.eta.eta == n + 1 && r.agrees();
      nlohmann::json agree = nlohmann::json::object();
      for (const auto& [d, ok] : r.ideal_agrees) agree[std::to_string(d)] = ok;
      v.details = {{"eta_report", r.eta.to_json()}, {"ideal_agrees_with_kernel_invariants", agree}};
      return v;
    });
  }
}

// ---- invariant-basis cross-checks ----

void suite_crosscheck(VerdictTable& t) {
  constexpr std::uint32_t kMaxDegree = 6;
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    add_row(t, "invariants-crosscheck", e.spec.name, [&] {
      using F = std::decay_t<decltype(rep.field())>;
      GradedAction<F> action(rep);
      std::size_t agree = 0;
      nlohmann::json dims = nlohmann::json::object();
      for (std::uint32_t d = 1; d <= kMaxDegree; ++d) {
        auto r = invariant_basis(action, d, InvariantMethod::reynolds);
        auto k = invariant_basis(action, d, InvariantMethod::kernel);
        const auto trace = invariant_dim_by_trace(action, d);
        const bool same = r.basis == k.basis;
        const bool traced = rep.field().equal(trace, rep.field().from_int(static_cast<std::int64_t>(k.dim())));
        if (same && traced) ++agree;
        dims[std::to_string(d)] = {{"dim", k.dim()}, {"bases_agree", same}, {"trace_matches", traced}};
      }
      Verdict v;
      v.theorem = "invariants-crosscheck";
      v.instance = e.spec.name;
      v.lhs = agree;
      v.rhs = kMaxDegree;
      v.holds = agree == kMaxDegree;
      v.details = dims;
      return v;
    });
  });
}

void suite_beta_q_vs_p(VerdictTable& t) {
  std::map<std::string, std::map<std::string, std::uint32_t>> by_family;
  for_entries(coprime_catalog(), [&](const CatalogEntry& e, const auto& rep) {
    if (e.spec.name.find("var") != std::string::npos) return;
    const auto suffix = e.spec.name.substr(e.family.size() + 1);
    by_family[e.family][suffix] = beta(rep).first;
  });
  for (const auto& [family, betas] : by_family) {
    for (const auto& [suffix, b] : betas) {
      if (suffix == "q" || !betas.count("q")) continue;
      Verdict v;
      v.theorem = "beta-q-vs-gfp";
      v.instance = family + " q vs " + suffix;
      v.lhs = betas.at("q");
      v.rhs = b;
      v.holds = betas.at("q") == b;
      v.asserted = false;
      v.details = {{"note", "different representations may be used over different fields"}};
      t.rows.push_back({v, 0});
    }
  }
}

// ---- polarization ----

void suite_thm51(VerdictTable& t, const WeylGrid& grid) {
  for (auto l : grid.ls) {
    for (auto p : grid.ps) {
      for (std::size_t m = l; m <= l + grid.nmax_offset; ++m) {
        for (std::size_t n = m; n <= l + grid.nmax_offset; ++n) {
          const auto top = static_cast<std::uint32_t>((p - 1) * m);
          for (std::uint32_t d = 1; d <= top + 1; ++d) {
            const auto name = weyl_instance_name(l, p, m, n, d);
            add_row(t, "thm5.1", name, [&] {
              try {
                return weyl_theorem_check(l, p, m, n, d);
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::dimension_overflow) throw;
                Verdict v;
                v.theorem = "thm5.1";
                v.instance = name;
                v.lhs = nullptr;
                v.rhs = nullptr;
                v.asserted = false;
                v.details = {{"skipped", e.what()}, {"in_range", d <= top}};
                return v;
              }
            });
          }
        }
      }
    }
  }
}

void suite_sharpness(VerdictTable& t, const WeylGrid& grid) {
  for (auto l : grid.ls) {
    for (auto p : grid.ps) {
      const auto name = "l=" + std::to_string(l) + ",p=" + std::to_string(p);
      add_row(t, "remark5.2-sharpness", name, [&] { return sharpness_check(l, p); });
    }
  }
}

void suite_rewriter(VerdictTable& t, const WeylGrid& grid) {
  for (auto l : grid.ls) {
    for (auto p : grid.ps) {
      const auto name = "l=" + std::to_string(l) + ",p=" + std::to_string(p);
      add_row(t, "thm5.1-rewriter", name, [&] {
        auto layout = rewrite_layout(l);
        std::size_t total = 0, certified = 0, max_ops = 0, steps = 0;
        nlohmann::json bad = nlohmann::json::array();
        for (std::uint32_t d = 1; d <= (p - 1) * l; ++d) {
          for (const auto& m : monomials_of_degree(*layout, d)) {
            ++total;
            const auto target = ExponentMatrix::from_monomial(m, *layout);
            try {
              auto cert = rewrite_monomial(target, p);
              auto r = replay(cert);
              if (r.reproduces_target && r.sources_on_last_copies) {
                ++certified;
                max_ops = std::max(max_ops, cert.operator_applications());
                steps += cert.steps.size();
              } else if (bad.size() < 5) {
                bad.push_back(target.to_rows());
              }
            } catch (const Error& e) {
              if (bad.size() < 5) bad.push_back({{"target", target.to_rows()}, {"error", e.what()}});
            }
          }
        }
        Verdict v;
        v.theorem = "thm5.1-rewriter";
        v.instance = name;
        v.lhs = certified;
        v.rhs = total;
        v.holds = certified == total;
        v.details = {{"max_operator_applications", max_ops}, {"total_steps", steps}, {"failures", bad}};
        return v;
      });
    }
  }
}

// ---- universality ----

struct ExtendCase {
  std::string name;
  std::string instance;
  bool with_trivial_u;
  std::size_t n, m;
  std::vector<std::string> s;  // empty: computed
};

void suite_thm61(VerdictTable& t) {
  const std::vector<ExtendCase> cases{
      {"z2-gf7 n=1 m=2 S={x^2}", "z2-gf7", false, 1, 2, {"x[1,0]^2"}},
      {"z3-gf7 n=1 m=2 S={x^3}", "z3-gf7", false, 1, 2, {"x[1,0]^3"}},
      {"z3-gf7 n=1 m=3", "z3-gf7", false, 1, 3, {}},
      {"z2-gf7 U=k n=1 m=3", "z2-gf7", true, 1, 3, {}},
      {"klein4-gf5 n=2 m=3", "klein4-gf5", false, 2, 3, {}},
      {"s2-gf7 n=2 m=3", "s2-gf7", false, 2, 3, {}},
  };
  for (const auto& c : cases) {
    auto e = *find_entry(c.instance);
    with_field(e.spec.field, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      add_row(t, "thm6.1", c.name, [&] {
        auto v = build_defining(e.spec, f);
        std::optional<Representation<F>> u;
        if (c.with_trivial_u) u = Representation<F>::trivial(v.group(), 1);
        std::optional<std::vector<Polynomial<F>>> s;
        if (!c.s.empty()) {
          auto vn = copies(v, c.n);
          s.emplace();
          for (const auto& text : c.s) s->push_back(parse_polynomial(f, vn.layout(), text));
        }
        return extend_generators<F>(u, v, c.n, c.m, s, c.name).verdict;
      });
    });
  }
}

const std::vector<std::string>& universal_groups() {
  static const std::vector<std::string> g{"z2-gf7", "z3-gf7"};
  return g;
}

/// Universal-invariants verdicts for the regular representation against
/// every character witness of dimension <= 3.
template <class Field>
void universal_rows(VerdictTable& t, const std::string& group_name, const GroupPtr<Field>& g, bool weak,
                    std::vector<bool>* outcomes = nullptr) {
  auto u = regular_representation(g);
  auto du = abelian_isotypic_decomposition(u);
  const std::string tag = weak ? "thm7.3" : "thm6.3";
  for (auto& [label, w] : character_witnesses(g, 3)) {
    const auto name = group_name + " U=regular V=" + label;
    add_row(t, tag, name, [&] { return universal_invariants_check(u, w, std::nullopt, weak, name, du).verdict; });
    if (outcomes) outcomes->push_back(t.rows.back().verdict.holds);
  }
  const auto name = group_name + " U=regular V=0";
  add_row(t, tag, name, [&] {
    auto zero = Representation<Field>(g, make_layout(VariableLayout::single(0)),
                                      std::vector<DenseMatrix<Field>>(g->order(), DenseMatrix<Field>(g->field(), 0, 0)));
    return universal_invariants_check(u, zero, std::nullopt, weak, name, du).verdict;
  });
}

void suite_universal(VerdictTable& t, bool weak) {
  for (const auto& gname : universal_groups()) {
    auto e = *find_entry(gname);
    with_field(e.spec.field, [&](const auto& f) { universal_rows(t, gname, build_group(e.spec, f), weak); });
  }
}

void suite_corollary(VerdictTable& t, const std::string& tag) {
  for (const auto& gname : universal_groups()) {
    auto e = *find_entry(gname);
    with_field(e.spec.field, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      auto g = build_group(e.spec, f);
      add_row(t, tag, gname + " U=regular", [&] {
        auto d = abelian_isotypic_decomposition(regular_representation(g));
        auto h = corollary_hypotheses(*g, *d.irreducibles);
        Verdict v;
        v.theorem = tag;
        v.instance = gname + " U=regular";
        v.details = h.to_json();
        if (tag == "cor7.5") {
          std::vector<Representation<F>> ws;
          nlohmann::json names = nlohmann::json::array();
          for (auto& [label, w] : character_witnesses(g, 3)) {
            ws.push_back(w);
            names.push_back(label);
          }
          auto b = beta_equals_beta_of_universal(regular_representation(g), ws, v.instance);
          v.lhs = b.lhs;
          v.rhs = b.rhs;
          v.holds = b.holds;
          v.asserted = h.beta_of_regular;
          v.details["witnesses"] = names;
          v.details["witness_betas"] = b.details["witness_betas"];
          return v;
        }
        const bool weak = tag == "cor7.4";
        VerdictTable inner;
        std::vector<bool> outcomes;
        universal_rows(inner, gname, g, weak, &outcomes);
        const auto passed = static_cast<std::size_t>(std::count(outcomes.begin(), outcomes.end(), true));
        v.lhs = passed;
        v.rhs = outcomes.size();
        v.holds = inner.all_hold() && passed == outcomes.size();
        v.asserted = weak ? h.regular_weakly_universal : h.regular_universal;
        return v;
      });
    });
  }
}

struct SuiteEntry {
  std::string name;
  std::function<void(VerdictTable&, const SuiteOptions&)> run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r{
      {"thm2.1", [](VerdictTable& t, const SuiteOptions&) { suite_thm21(t); }},
      {"cor2.2", [](VerdictTable& t, const SuiteOptions&) { suite_cor22(t); }},
      {"eq2.6", [](VerdictTable& t, const SuiteOptions&) { suite_eq26(t); }},
      {"lem3.1", [](VerdictTable& t, const SuiteOptions&) { suite_lem31(t); }},
      {"lem3.2", [](VerdictTable& t, const SuiteOptions&) { suite_lem32(t); }},
      {"cor3.4", [](VerdictTable& t, const SuiteOptions&) { suite_cor34(t); }},
      {"thm3.8", [](VerdictTable& t, const SuiteOptions&) { suite_beta_strict(t, false); }},
      {"thm3.9", [](VerdictTable& t, const SuiteOptions&) { suite_beta_strict(t, true); }},
      {"remark3.11-char2", [](VerdictTable& t, const SuiteOptions&) { suite_char2(t); }},
      {"thm5.1", [](VerdictTable& t, const SuiteOptions& o) { suite_thm51(t, o.grid); }},
      {"thm5.1-rewriter", [](VerdictTable& t, const SuiteOptions& o) { suite_rewriter(t, o.grid); }},
      {"remark5.2-sharpness", [](VerdictTable& t, const SuiteOptions& o) { suite_sharpness(t, o.grid); }},
      {"thm6.1", [](VerdictTable& t, const SuiteOptions&) { suite_thm61(t); }},
      {"thm6.3", [](VerdictTable& t, const SuiteOptions&) { suite_universal(t, false); }},
      {"cor6.5", [](VerdictTable& t, const SuiteOptions&) { suite_corollary(t, "cor6.5"); }},
      {"thm7.3", [](VerdictTable& t, const SuiteOptions&) { suite_universal(t, true); }},
      {"cor7.4", [](VerdictTable& t, const SuiteOptions&) { suite_corollary(t, "cor7.4"); }},
      {"cor7.5", [](VerdictTable& t, const SuiteOptions&) { suite_corollary(t, "cor7.5"); }},
      {"invariants-crosscheck", [](VerdictTable& t, const SuiteOptions&) { suite_crosscheck(t); }},
      {"beta-q-vs-gfp", [](VerdictTable& t, const SuiteOptions&) { suite_beta_q_vs_p(t); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

VerdictTable run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& e : registry()) {
    if (e.name == name) {
      VerdictTable t;
      t.suite = name;
      e.run(t, options);
      return t;
    }
  }
  fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace invtheory
