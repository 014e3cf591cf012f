#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "invtheory/cli/catalog.hpp"
#include "invtheory/cli/suites.hpp"

using namespace invtheory;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs invtool with the given arguments; stderr is discarded.
Run invtool(const std::string& args) {
  const std::string cmd = std::string(INVTOOL_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_code = 0) {
  auto r = invtool(args);
  CHECK_MESSAGE(r.code == expected_code, args);
  return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "invtool-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("catalog entries load and have the expected orders") {
  const std::map<std::string, std::size_t> orders{{"trivial", 1}, {"z2", 2}, {"z3", 3}, {"z4", 4},
                                                  {"s2", 2},      {"klein4", 4}, {"s3", 6}, {"char2-swap", 2}};
  for (const auto& e : catalog()) CHECK_MESSAGE(e.order == orders.at(e.family), e.spec.name);
  CHECK(find_entry("z3-gf7")->faithful_character);
  CHECK_FALSE(find_entry("z3-gf5")->faithful_character);
  CHECK(find_entry("z4-gf13")->faithful_character);
  CHECK(find_entry("trivial-2var")->spec.dim == 2);
  CHECK(coprime_catalog().size() == 28);
  CHECK_THROWS_AS(load_instance("no-such-instance"), Error);
}

TEST_CASE("instance files load") {
  auto path = scratch("swap.json");
  std::ofstream(path) << R"({"name": "swap", "field": {"prime": 7}, "generators": [[[0, 1], [1, 0]]]})";
  auto spec = load_instance(path.string());
  CHECK(spec.name == "swap");
  CHECK(spec.dim == 2);
  auto j = run_json("beta --instance " + path.string());
  CHECK(j["beta"] == 2);
}

TEST_CASE("grid parsing") {
  auto g = WeylGrid::parse("l=1,2 p=3,5 nmax=+2");
  CHECK(g.ls == std::vector<std::size_t>{1, 2});
  CHECK(g.ps == std::vector<std::uint32_t>{3, 5});
  CHECK(g.nmax_offset == 2);
  CHECK(WeylGrid::parse("p=7").ls == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(WeylGrid::parse("p=4"), Error);
  CHECK_THROWS_AS(WeylGrid::parse("q=1"), Error);
  CHECK_THROWS_AS(WeylGrid::parse("l"), Error);
}

TEST_CASE("beta command") {
  CHECK(run_json("beta --instance z3-gf7")["beta"] == 3);
  CHECK(run_json("beta --instance trivial-2var")["beta"] == 1);
  CHECK(run_json("beta --instance klein4-gf5")["beta"] == 2);
  CHECK(invtool("beta --instance char2-swap-n1").code == 2);
  auto modular = run_json("beta --instance char2-swap-n1 --modular-ok --cap 3");
  CHECK(modular["complete"] == false);
}

TEST_CASE("overflow exits with code 3") {
  auto path = scratch("trivial10.json");
  json id = json::array();
  for (int i = 0; i < 10; ++i) {
    json row = json::array();
    for (int k = 0; k < 10; ++k) row.push_back(i == k ? 1 : 0);
    id.push_back(row);
  }
  std::ofstream(path) << json{{"name", "t10"}, {"field", {{"prime", 7}}}, {"generators", {id}}}.dump();
  CHECK(invtool("beta --instance " + path.string() + " --cap 12").code == 3);
}

TEST_CASE("eta command") {
  CHECK(run_json("eta --instance z3-gf7")["eta"] == 3);
  CHECK(run_json("eta --instance trivial-1var")["eta"] == 1);
  const std::string gens = std::string(DATA_DIR) + "/char2-swap-n2-gens.json";
  auto j = run_json("eta --instance char2-swap-n2 --gens-file " + gens + " --cap 6");
  CHECK(j["eta"] == 3);
  CHECK(j["generator_source"] == "user-supplied");
  CHECK(invtool("eta --instance char2-swap-n2 --gens-file " + gens).code == 1);
}

TEST_CASE("char2-gens reproduces the data fixtures") {
  for (int n = 1; n <= 3; ++n) {
    auto out = scratch("gens" + std::to_string(n) + ".json");
    CHECK(invtool("char2-gens --n " + std::to_string(n) + " --max-degree " + std::to_string(2 * n + 2) + " --out " +
                  out.string())
              .code == 0);
    CHECK(read_file(out) == read_file(std::string(DATA_DIR) + "/char2-swap-n" + std::to_string(n) + "-gens.json"));
  }
}

TEST_CASE("polarize and replay") {
  auto one = run_json("polarize --p 5 --target \"[[1,2]]\"");
  CHECK(one["certificate"]["operator_applications"] == 1);
  CHECK(one["replay"]["reproduces_target"] == true);

  auto empty = run_json("polarize --p 3 --target \"[[0,3]]\"");
  CHECK(empty["certificate"]["steps"].empty());

  CHECK(invtool("polarize --p 3 --target \"[[1,2]]\"").code == 4);
  CHECK(invtool("polarize --p 4 --target \"[[1,2]]\"").code == 1);

  auto cert = scratch("cert.json");
  CHECK(invtool("polarize --p 5 --target \"[[1,1,0],[0,1,2]]\" --json-out " + cert.string()).code == 0);
  auto r = run_json("replay " + cert.string());
  CHECK(r["reproduces_target"] == true);

  auto broken = scratch("broken.json");
  auto j = json::parse(read_file(cert));
  j["target"] = json::array({json::array({2, 1, 0}), json::array({0, 1, 2})});
  std::ofstream(broken) << j.dump();
  CHECK(invtool("replay " + broken.string()).code == 1);
}

TEST_CASE("verify writes deterministic tables") {
  auto a = scratch("a.json");
  auto b = scratch("b.json");
  CHECK(invtool("verify thm5.1 --grid l=1 p=3 nmax=+1 --stable --json-out " + a.string()).code == 0);
  CHECK(invtool("verify thm5.1 --grid l=1 p=3 nmax=+1 --stable --json-out " + b.string()).code == 0);
  CHECK(read_file(a) == read_file(b));
  auto t = json::parse(read_file(a));
  CHECK(t["suite"] == "thm5.1");
  CHECK(t["all_hold"] == true);
  CHECK(t["rows"].size() == 11);
  for (const auto& row : t["rows"]) CHECK_FALSE(row.contains("runtime_ms"));

  CHECK(invtool("verify remark5.2-sharpness").code == 0);
  CHECK(invtool("verify cor3.4").code == 0);
  CHECK(invtool("verify no-such-suite").code == 1);
}

TEST_CASE("suite library") {
  CHECK(is_suite("thm6.3"));
  CHECK_FALSE(is_suite("all"));
  auto t = run_suite("thm3.9");
  CHECK(t.rows.size() == 6);
  CHECK(t.all_hold());
  VerdictTable fake;
  fake.suite = "x";
  Verdict bad;
  bad.holds = false;
  Verdict recorded;
  recorded.asserted = false;
  fake.rows = {{bad, 0}, {recorded, 0}};
  CHECK(fake.failures().size() == 1);
  CHECK(fake.summary().find("FAIL") != std::string::npos);
}
