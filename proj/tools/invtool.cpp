#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invtheory/cli/catalog.hpp"
#include "invtheory/cli/suites.hpp"
#include "invtheory/nullcone/checks.hpp"
#include "invtheory/polyring/text.hpp"
#include "invtheory/weylpol/rewriter.hpp"

using namespace invtheory;
using nlohmann::json;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::modular_group_order: return 2;
    case ErrorKind::dimension_overflow:
    case ErrorKind::exponent_overflow: return 3;
    case ErrorKind::degree_out_of_range: return 4;
    default: return 1;
  }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse_error, path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_beta(const std::string& instance, std::optional<std::uint32_t> cap, bool modular_ok) {
  auto spec = load_instance(instance);
  return with_field(spec.field, [&](const auto& f) {
    auto rep = build_defining(spec, f);
    const auto& g = *rep.group();
    if (!g.order_invertible() && !modular_ok) {
      fail(ErrorKind::modular_group_order, "|G| = " + std::to_string(g.order()) + " is not invertible in " + f.name() +
                                               "; pass --modular-ok for a truncated ledger");
    }
    auto ledger = minimal_generators_up_to(rep, cap.value_or(static_cast<std::uint32_t>(g.order())));
    auto j = ledger_to_json(ledger);
    j["instance"] = spec.name;
    j["group_order"] = g.order();
    print(j);
    return 0;
  });
}

int cmd_eta(const std::string& instance, const std::optional<std::string>& gens_file, std::optional<std::uint32_t> cap) {
  auto spec = load_instance(instance);
  return with_field(spec.field, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto rep = build_defining(spec, f);
    std::optional<std::vector<Polynomial<F>>> gens;
    if (gens_file) {
      auto j = read_json(*gens_file);
      gens.emplace();
      for (const auto& text : j.at("generators")) gens->push_back(parse_polynomial(f, rep.layout(), text.get<std::string>()));
    }
    auto report = eta(rep, gens, cap);
    auto j = report.to_json();
    j["instance"] = spec.name;
    j["group_order"] = rep.group()->order();
    print(j);
    return 0;
  });
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& grid, const std::optional<std::string>& json_out,
               bool stable) {
  SuiteOptions options;
  if (!grid.empty()) {
    std::string joined;
    for (const auto& g : grid) joined += g + " ";
    options.grid = WeylGrid::parse(joined);
  }
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (is_suite(suite)) {
    names = {suite};
  } else {
    fail(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
  }
  json tables = json::array();
  bool ok = true;
  for (const auto& n : names) {
    auto t = run_suite(n, options);
    std::cout << t.summary();
    ok = ok && t.all_hold();
    tables.push_back(t.to_json(stable));
  }
  json out = suite == "all" ? json{{"suites", tables}, {"all_hold", ok}} : tables.front();
  if (!grid.empty()) out["grid"] = options.grid.to_json();
  if (json_out) write_json(*json_out, out);
  std::cout << (ok ? "all asserted rows hold" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_polarize(std::uint32_t p, const std::string& target, const std::optional<std::string>& json_out) {
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, "--p must be prime");
  json rows;
  try {
    rows = json::parse(target);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse_error, std::string("--target: ") + e.what());
  }
  auto cert = rewrite_monomial(ExponentMatrix::from_rows(rows.get<std::vector<std::vector<std::uint32_t>>>()), p);
  auto r = replay(cert);
  json out{{"certificate", cert.to_json()}, {"replay", r.to_json()}};
  if (json_out) write_json(*json_out, cert.to_json());
  print(out);
  return r.reproduces_target ? 0 : 1;
}

int cmd_replay(const std::string& path) {
  auto j = read_json(path);
  auto cert = RewriteCertificate::from_json(j.contains("certificate") ? j.at("certificate") : j);
  auto r = replay(cert);
  print(r.to_json());
  return r.reproduces_target && r.sources_on_last_copies ? 0 : 1;
}

int cmd_char2_gens(std::size_t n, std::uint32_t max_degree, const std::optional<std::string>& out_path) {
  if (n < 1) fail(ErrorKind::invalid_argument, "--n must be positive");
  auto rep = char2_swap_representation(n);
  json gens = json::array();
  for (const auto& g : char2_explicit_generators(rep, max_degree)) gens.push_back(render(g));
  json out{{"instance", "char2-swap-n" + std::to_string(n)}, {"max_degree", max_degree}, {"generators", gens}};
  if (out_path) {
    write_json(*out_path, out);
  } else {
    print(out);
  }
  return 0;
}

int cmd_list() {
  json entries = json::array();
  for (const auto& e : catalog()) {
    entries.push_back({{"name", e.spec.name},
                       {"family", e.family},
                       {"order", e.order},
                       {"dim", e.spec.dim},
                       {"field", e.spec.field.name()},
                       {"cyclic", e.cyclic},
                       {"faithful_character", e.faithful_character}});
  }
  print({{"instances", entries}, {"suites", suite_names()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant-theory engine for finite matrix groups"};
  app.require_subcommand(1);

  std::string instance;
  std::optional<std::uint32_t> cap;
  bool modular_ok = false;
  auto* beta_cmd = app.add_subcommand("beta", "minimal generator ledger and beta");
  beta_cmd->add_option("--instance", instance, "catalog name or instance JSON file")->required();
  beta_cmd->add_option("--cap", cap, "degree cap (default |G|)");
  beta_cmd->add_flag("--modular-ok", modular_ok, "allow |G| divisible by p (truncated ledger)");

  std::optional<std::string> gens_file;
  auto* eta_cmd = app.add_subcommand("eta", "first full degree of the Hilbert ideal");
  eta_cmd->add_option("--instance", instance, "catalog name or instance JSON file")->required();
  eta_cmd->add_option("--gens-file", gens_file, "JSON file {\"generators\": [...]} of invariants");
  eta_cmd->add_option("--cap", cap, "degree cap (required with --gens-file)");

  std::string suite;
  std::vector<std::string> grid;
  std::optional<std::string> json_out;
  bool stable = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--grid", grid, "Weyl grid, e.g. l=1,2 p=3,5 nmax=+2");
  verify_cmd->add_option("--json-out", json_out, "write the verdict table here");
  verify_cmd->add_flag("--stable", stable, "omit runtimes from JSON");

  std::uint32_t p = 0;
  std::string target;
  auto* pol_cmd = app.add_subcommand("polarize", "rewriting certificate for a monomial on l+1 copies");
  pol_cmd->add_option("--p", p, "prime")->required();
  pol_cmd->add_option("--target", target, "exponent matrix, e.g. [[1,2]]")->required();
  pol_cmd->add_option("--json-out", json_out, "write the certificate here");

  std::string cert_path;
  auto* replay_cmd = app.add_subcommand("replay", "replay a serialized certificate");
  replay_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();

  std::size_t n = 0;
  std::uint32_t max_degree = 0;
  std::optional<std::string> out_path;
  auto* char2_cmd = app.add_subcommand("char2-gens", "explicit generators for the characteristic-2 swap family");
  char2_cmd->add_option("--n", n, "pairs of variables")->required();
  char2_cmd->add_option("--max-degree", max_degree, "largest |alpha|")->required();
  char2_cmd->add_option("--out", out_path, "output file");

  auto* list_cmd = app.add_subcommand("list", "catalog instances and suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*beta_cmd) return cmd_beta(instance, cap, modular_ok);
    if (*eta_cmd) return cmd_eta(instance, gens_file, cap);
    if (*verify_cmd) return cmd_verify(suite, grid, json_out, stable);
    if (*pol_cmd) return cmd_polarize(p, target, json_out);
    if (*replay_cmd) return cmd_replay(cert_path);
    if (*char2_cmd) return cmd_char2_gens(n, max_degree, out_path);
    if (*list_cmd) return cmd_list();
  } catch (const Error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", std::string(to_string(e.kind()))}}.dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
