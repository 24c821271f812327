#include <filesystem>
#include <string>

#include "cli_util.hpp"
#include "doctest.h"

using nlohmann::json;

namespace {

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::path(FAIRENUM_SCRATCH) / "cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("gen-graph is deterministic and writes DIMACS") {
  const auto a = cli::run(cli::exe("gen-graph --n 12 --density 0.5 --seed 7"));
  const auto b = cli::run(cli::exe("gen-graph --n 12 --density 0.5 --seed 7"));
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("p edge 12 33") != std::string::npos);
  CHECK(cli::run(cli::exe("gen-graph --n 12 --density 0.5 --seed 8")).out != a.out);

  const auto q = cli::run(cli::exe("gen-graph --n 4 --density 1 --qubo"));
  REQUIRE(q.status == 0);
  CHECK(q.out.rfind("# qubo 4", 0) == 0);
}

TEST_CASE("exact writes a clique record") {
  const auto path = scratch("k4.col");
  {
    std::ofstream f(path);
    f << "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
  }
  const auto r = cli::run(cli::exe("exact --graph " + path));
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("record") == "exact");
  CHECK(j.at("cliques") == json::parse("[[1,2,3,4]]"));
  CHECK(j.at("solved") == true);
}

TEST_CASE("enumerate is reproducible apart from timings") {
  const std::string args = "enumerate --n 14 --density 0.5 --graph-seed 2 --runs 4 --seed 11";
  const auto a = cli::run(cli::exe(args));
  const auto b = cli::run(cli::exe(args + " --threads 2"));
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(cli::without_timings(a.out) == cli::without_timings(b.out));
  const auto c = cli::run(cli::exe("enumerate --n 14 --density 0.5 --graph-seed 2 --runs 4 --seed 12"));
  CHECK(cli::without_timings(a.out) != cli::without_timings(c.out));

  const auto rec = json::parse(a.out);
  CHECK(rec.at("record") == "experiment");
  CHECK(rec.at("runs").size() == 4);
}

TEST_CASE("enumerate a model file with a trace") {
  const auto path = scratch("pair.txt");
  {
    std::ofstream f(path);
    f << "# ising 2\n0 1 1\n";
  }
  const auto a = cli::run(cli::exe("enumerate --model " + path + " --runs 2 --trace"));
  REQUIRE(a.status == 0);
  CHECK(count_lines(a.out) == 2);
  const auto first = json::parse(a.out.substr(0, a.out.find('\n')));
  CHECK(first.at("n_found") == 2);
  CHECK(first.at("theta") == -1.0);
  CHECK(first.at("trace").size() >= first.at("accepted_samples").get<std::size_t>());
  CHECK(cli::run(cli::exe("enumerate --model " + path + " --runs 2 --trace")).out == a.out);
}

TEST_CASE("bench appends and resumes") {
  const auto out = scratch("bench.jsonl");
  std::filesystem::remove(out);
  REQUIRE(cli::run(cli::exe("bench --sizes 8 --densities 0.5 --runs 2 --out " + out)).status == 0);
  const auto first = cli::slurp(out);
  CHECK(count_lines(first) == 1);
  REQUIRE(cli::run(cli::exe("bench --sizes 8,9 --densities 0.5 --runs 2 --out " + out)).status == 0);
  const auto second = cli::slurp(out);
  CHECK(count_lines(second) == 2);
  CHECK(second.rfind(first, 0) == 0);
  CHECK(json::parse(second.substr(first.size())).at("problem_id") == "er-n9-d0.50-i0");
}

TEST_CASE("validate-bounds with small trial counts") {
  const auto r = cli::run(cli::exe("validate-bounds --coupon-trials 2000 --guarantee-trials 300"));
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("record") == "bounds");
  CHECK(j.at("all_pass") == true);
}

TEST_CASE("errors exit non-zero") {
  CHECK(cli::run(cli::exe("exact --graph /nonexistent/file.col")).status != 0);
  CHECK(cli::run(cli::exe("enumerate --n 10 --epsilon 2")).status != 0);
  CHECK(cli::run(cli::exe("no-such-command")).status != 0);
  CHECK(cli::run(cli::exe("")).status != 0);
}
