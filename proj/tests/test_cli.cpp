#include "doctest.h"

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace kromatic;
using namespace kromatic::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& c) {
  std::ostringstream out, err;
  int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

RunConfig config(Mode mode, std::string graph = {}) {
  RunConfig c;
  c.mode = mode;
  c.graph = std::move(graph);
  return c;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("kromatic_test_" + name);
  std::ofstream(p) << content;
  return p;
}

int shell_status(const std::string& args) {
  int raw = std::system((std::string(KROMATIC_CLI_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("expand K2 in the p-bar basis") {
  auto r = invoke(config(Mode::Expand, "K2"));
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["basis"] == "pbar");
  CHECK(j["N"] == 5);
  std::map<std::vector<int>, std::string> terms;
  for (const auto& t : j["terms"]) terms[t["partition"].get<std::vector<int>>()] = t["coeff"].get<std::string>();
  std::map<std::vector<int>, std::string> expected = {
      {{2}, "-1"},    {{1, 1}, "1"},  {{3}, "2"},        {{2, 1}, "-2"},   {{4}, "-4"},
      {{3, 1}, "4"},  {{2, 2}, "1"},  {{2, 1, 1}, "-1"}, {{5}, "6"},       {{4, 1}, "-8"},
      {{3, 2}, "-2"}, {{3, 1, 1}, "2"}, {{2, 2, 1}, "2"},
  };
  CHECK(terms == expected);
}

TEST_CASE("output does not depend on the number of jobs") {
  auto c = config(Mode::Expand, "P4");
  c.degree = 6;
  c.basis = "pbarprime";
  c.omega = true;
  auto one = invoke(c);
  c.jobs = 4;
  auto four = invoke(c);
  CHECK(one.status == 0);
  CHECK(one.out == four.out);

  auto v = config(Mode::Verify, "P3");
  v.suite = "theorems,claims";
  auto v1 = invoke(v);
  v.jobs = 3;
  auto v3 = invoke(v);
  CHECK(v1.status == 0);
  CHECK(v1.out == v3.out);
}

TEST_CASE("lyndon lists the K2 heaps") {
  auto r = invoke(config(Mode::Lyndon, "K2"));
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  std::vector<long> counts;
  for (const auto& s : j["sizes"]) counts.push_back(s["count"].get<long>());
  CHECK(counts == std::vector<long>{2, 1, 2, 3, 6});
  CHECK(j["sizes"][4]["words"].size() == 6);
  CHECK(j["counts_from_pyramids"] == Json(std::vector<long>{2, 1, 2, 3, 6}));
  CHECK(j["sizes"][3]["words"] == Json(std::vector<std::string>{"1112", "1122", "1222"}));
}

TEST_CASE("independence output") {
  auto r = invoke(config(Mode::Independence, "P3"));
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["polynomial"] == Json(std::vector<int>{1, 3, 1}));
  CHECK(j["multiset"].size() == 8);
}

TEST_CASE("qexpand") {
  RunConfig c = config(Mode::QExpand);
  c.model = "K2";
  c.basis = "pbarprime";
  c.omega = true;
  c.degree = 3;
  auto r = invoke(c);
  REQUIRE(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["terms"][0]["partition"] == Json(std::vector<int>{2}));
  CHECK(j["terms"][0]["coeff"] == Json(std::vector<std::string>{"1/2", "1/2"}));

  // q = 1 reproduces expand.
  c.q = "1";
  c.degree = 4;
  auto at1 = Json::parse(invoke(c).out);
  auto e = config(Mode::Expand, "K2");
  e.basis = "pbarprime";
  e.omega = true;
  e.degree = 4;
  auto plain = Json::parse(invoke(e).out);
  CHECK(at1["terms"] == plain["terms"]);

  RunConfig g = config(Mode::QExpand, "C4");
  CHECK(invoke(g).status == 2);
  RunConfig p = config(Mode::QExpand, "P3");
  p.basis = "pbar";
  auto pr = invoke(p);
  CHECK(pr.status == 0);
  CHECK(Json::parse(pr.out)["model"] == "P3");
}

TEST_CASE("verify on the bundled set passes") {
  auto r = invoke(config(Mode::Verify));
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS thm-1.2-K2-lambda-41\n") != std::string::npos);
  CHECK(r.out.find("PASS prop-5.1-P3-lambda-22\n") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2") {
  auto bad = config(Mode::Expand, "K2");
  bad.vars = 3;
  CHECK(invoke(bad).status == 2);
  bad = config(Mode::Expand, "K2");
  bad.basis = "schur";
  CHECK(invoke(bad).status == 2);
  CHECK(invoke(config(Mode::Expand, "no-such-graph")).status == 2);
  CHECK(invoke(config(Mode::Expand)).status == 2);
  auto v = config(Mode::Verify);
  v.suite = "theorems,bogus";
  CHECK(invoke(v).status == 2);
  auto q = config(Mode::Expand, "K2");
  q.q = "1";
  CHECK(invoke(q).status == 2);
  auto qe = config(Mode::QExpand);
  qe.model = "K2";
  qe.q = "x";
  CHECK(invoke(qe).status == 2);

  auto loop = temp_file("loop.json", R"({"n": 2, "edges": [[1, 1]]})");
  CHECK(invoke(config(Mode::Expand, loop.string())).status == 2);
  auto dup = temp_file("dup.json", R"({"n": 2, "edges": [[1, 2], [2, 1]]})");
  CHECK(invoke(config(Mode::Expand, dup.string())).status == 2);
  auto junk = temp_file("junk.json", "{not json");
  CHECK(invoke(config(Mode::Expand, junk.string())).status == 2);
  auto model = temp_file("model.json", R"({"n": 3, "bounds": [3, 2, 3]})");
  auto m = config(Mode::QExpand);
  m.model = model.string();
  CHECK(invoke(m).status == 2);
}

TEST_CASE("graph files and output files") {
  auto path = temp_file("tri.json", R"({"n": 3, "edges": [[1, 2], [2, 3], [1, 3]]})");
  auto c = config(Mode::Expand, path.string());
  auto out = std::filesystem::temp_directory_path() / "kromatic_test_out.json";
  c.out = out.string();
  c.degree = 4;
  auto r = invoke(c);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  auto j = Json::parse(in);
  CHECK(j["graph"] == "kromatic_test_tri");
  auto k3 = config(Mode::Expand, "K3");
  k3.degree = 4;
  CHECK(Json::parse(invoke(k3).out)["terms"] == j["terms"]);
}

TEST_CASE("JSON helpers") {
  CHECK(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 2]]})")) == Graph(3, {{1, 2}}));
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3})")), ConfigError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1]]})")), ConfigError);
  CHECK(graph_to_json(Graph::path(3)).dump() == R"({"n":3,"edges":[[1,2],[2,3]]})");
  CHECK(model_from_json(Json::parse(R"({"n": 2, "bounds": [2, 2]})")).bounds == std::vector<int>{2, 2});
  CHECK(partition_label(Partition{4, 1}) == "41");
  CHECK(partition_label(Partition{12, 1}) == "12.1");
  CHECK(number_to_json(BigRational(3)) == Json(3));
  CHECK(number_to_json(BigRational(-1, 2)) == Json("-1/2"));
  CHECK(parse_rational("2/4") == BigRational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  auto names = bundled_graph_names();
  CHECK(names == std::vector<std::string>{"C4", "K1", "K2", "K3", "P3", "P4", "paw"});
}

TEST_CASE("command-line binary exit codes") {
  CHECK(shell_status("expand --graph K2") == 0);
  CHECK(shell_status("expand --graph K2 --degree 5 --vars 2") == 2);
  CHECK(shell_status("expand") == 2);
  CHECK(shell_status("frobnicate") == 2);
  CHECK(shell_status("--help") == 0);
  CHECK(shell_status("expand --graph K2 --basis schur") == 2);
}
