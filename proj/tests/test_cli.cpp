#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "baxter/cli.hpp"
#include "oracles.hpp"

using namespace baxter;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "baxter_lab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const auto p = scratch(name);
  std::ofstream(p) << content;
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("verify-diagram prints the Baxter counts") {
  const auto r = run({"verify-diagram", "--max-size", "5"});
  CHECK(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  const int counts[] = {1, 2, 6, 22, 92};
  for (int n = 1; n <= 5; ++n) {
    const std::string prefix = "size " + std::to_string(n) + ": walks " + std::to_string(counts[n - 1]) +
                               ", baxter " + std::to_string(counts[n - 1]);
    CHECK(ls[static_cast<std::size_t>(n - 1)].starts_with(prefix));
  }
  CHECK(ls.back() == "diagram commutes");
  CHECK(run({"verify-diagram", "--max-size", "12"}).code == cli::kUsageError);
}

TEST_CASE("sample-baxter is deterministic in the seed") {
  for (const std::string method : {"rejection", "exact"}) {
    const std::vector<std::string> args{"sample-baxter", "--min", "4", "--max", "4",
                                        "--count", "3", "--seed", "7", "--method", method};
    const auto a = run(args), b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    for (const auto& l : lines(a.out)) CHECK(is_baxter(permutation_from_json(Json::parse(l))));
  }
  const auto c = run({"sample-baxter", "--min", "30", "--max", "40", "--count", "2", "--seed", "1",
                      "--max-attempts", "1"});
  CHECK(c.code == cli::kVerificationFailure);
  CHECK(run({"sample-baxter", "--min", "5", "--max", "4"}).code == cli::kUsageError);
}

TEST_CASE("convert on the example objects") {
  const auto walk = write_file("walk.jsonl", oracle::fixture("example_walk.json").dump() + "\n");
  const auto map = write_file("map.jsonl", oracle::fixture("example_map.json").dump() + "\n");
  const std::string perm = "[8,6,5,7,9,1,2,4,10,3]\n";
  CHECK(run({"convert", "--from", "walk", "--to", "permutation", "--in", walk.string()}).out == perm);
  CHECK(run({"convert", "--from", "coalescent", "--to", "permutation", "--in", walk.string()}).out == perm);
  CHECK(run({"convert", "--from", "map", "--to", "permutation", "--in", map.string()}).out == perm);
  CHECK(run({"convert", "--from", "map", "--to", "walk", "--in", map.string()}).out ==
        oracle::fixture("example_walk.json").dump() + "\n");
  const auto m = map_from_json(Json::parse(run({"convert", "--from", "walk", "--to", "map", "--in", walk.string()}).out));
  CHECK(canonical(m) == canonical(map_from_json(oracle::fixture("example_map.json"))));
  CHECK(run({"convert", "--from", "map", "--to", "map", "--in", map.string()}).out ==
        to_json(canonical(m)).dump() + "\n");

  const auto out = scratch("perm.jsonl");
  CHECK(run({"convert", "--from", "walk", "--to", "permutation", "--in", walk.string(), "--out", out.string()})
            .code == cli::kOk);
  std::stringstream written;
  written << std::ifstream(out).rdbuf();
  CHECK(written.str() == perm);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"convert", "--from", "walk"}).code == cli::kUsageError);
  CHECK(run({"convert", "--from", "perm", "--to", "walk"}).code == cli::kUsageError);
  CHECK(run({"convert", "--from", "walk", "--to", "map", "--in", "/nonexistent/file"}).code == cli::kUsageError);
  const auto bad = write_file("bad.jsonl", "{\"start\":[0,0],\"steps\":[[1,1]]}\n");
  const auto r = run({"convert", "--from", "walk", "--to", "map", "--in", bad.string()});
  CHECK(r.code == cli::kUsageError);
  CHECK(!r.err.empty());
  const auto garbage = write_file("garbage.jsonl", "[1,2]\nnot json\n");
  CHECK(run({"density", "--pattern", "1,2", "--in", garbage.string()}).code == cli::kUsageError);
  CHECK(run({"estimate-pattern", "--k", "3", "--pattern", "2,1"}).code == cli::kUsageError);
  CHECK(run({"estimate-pattern", "--k", "2", "--pattern", "2,2"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("enumerate") {
  CHECK(lines(run({"enumerate", "--family", "walk", "--size", "4"}).out).size() == 22);
  const auto b = lines(run({"enumerate", "--family", "baxter", "--size", "4"}).out);
  CHECK(b.size() == 22);
  CHECK(b.front() == "[1,2,3,4]");
}

TEST_CASE("permuton and density tables") {
  const auto perms = write_file("perms.jsonl", "[1,2]\n[2,1]\n");
  CHECK(run({"permuton", "--in", perms.string(), "--grid", "2"}).out == "0.25,0.25\n0.25,0.25\n");
  CHECK(run({"permuton", "--in", perms.string(), "--grid", "0"}).code == cli::kUsageError);
  const auto d = run({"density", "--pattern", "1,2", "--in", perms.string()});
  CHECK(d.code == cli::kOk);
  CHECK(d.out == "pattern,density,stderr\n12,0.5,0.5\n");
}

TEST_CASE("estimate-pattern emits one JSON record") {
  const auto r = run({"estimate-pattern", "--k", "2", "--pattern", "2,1", "--n", "100", "--samples", "50",
                      "--seed", "3"});
  REQUIRE(r.code == cli::kOk);
  const auto j = Json::parse(r.out);
  CHECK(j["k"] == 2);
  CHECK(j["samples"] == 50);
  CHECK(j["seed"] == 3);
  CHECK(j["estimate"].get<double>() >= 0.0);
  CHECK(j["estimate"].get<double>() <= 1.0);
  CHECK(run({"estimate-pattern", "--k", "2", "--pattern", "2,1", "--n", "100", "--samples", "50", "--seed", "3"})
            .out == r.out);
}
