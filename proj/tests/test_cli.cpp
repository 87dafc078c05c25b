#include "lequi/cli.hpp"

#include "lequi/graph.hpp"
#include "lequi/report_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lequi;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "lequi_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const Graph& g) const {
    const auto p = path_ / name;
    std::ofstream(p) << to_edge_list(g);
    return p.string();
  }
  std::string write_text(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(4.0) == "4");
  CHECK(format_number(-1e-12) == "0");
  CHECK(format_number(10.0 / 3.0) == "3.333333");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(-0.25) == "-0.25");
}

TEST_CASE("spectrum and energy") {
  TempDir dir;
  const std::string k4 = dir.write("k4.txt", complete_graph(4));
  const Run s = run({"spectrum", k4});
  CHECK(s.code == kExitOk);
  CHECK(s.out == "4 4 4 0\n");

  const Run q = run({"spectrum", k4, "--signless"});
  CHECK(q.out == "6 2 2 2\n");

  const std::string p3 = dir.write("p3.txt", path_graph(3));
  const Run e = run({"energy", p3});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("LE = 3.333333") != std::string::npos);

  const Run j = run({"--json", "energy", p3});
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["le"].get<double>() == doctest::Approx(10.0 / 3.0));

  const Run after = run({"spectrum", k4, "--json"});
  CHECK(Json::parse(after.out)["values"].size() == 4);
}

TEST_CASE("input errors exit with status 2") {
  TempDir dir;
  CHECK(run({"spectrum", dir.path() + "/missing.txt"}).code == kExitUsage);
  const std::string bad = dir.write_text("bad.txt", "3\n1 0\n");
  const Run r = run({"energy", bad});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("InvalidEdge") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);

  const std::string c5 = dir.write("c5.txt", cycle_graph(5));
  CHECK(run({"verify", "--recipe", "R99", "--g1", c5, "--g2", c5}).code == kExitUsage);
  CHECK(run({"verify", "--recipe", "R1", "--g1", c5, "--g2", c5, "--p", "1"}).code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
  const Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("verify reports and exit codes") {
  TempDir dir;
  const std::string c5 = dir.write("c5.txt", cycle_graph(5));
  const Edge chord[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}};
  const std::string g5 = dir.write("g5.txt", Graph(5, chord));

  const Run ok = run({"--json", "verify", "--recipe", "R1", "--g1", c5, "--g2", c5, "--p", "5"});
  CHECK(ok.code == kExitOk);
  const Json j = Json::parse(ok.out);
  CHECK(j["closed_form"]["match"] == "variant");
  CHECK(j["le1"].get<double>() == doctest::Approx(12.0));

  const Run seq = run({"--json", "verify", "--recipe", "R1", "--g1", c5, "--g2", g5, "--min-p",
                       "--count", "3"});
  CHECK(seq.code == kExitOk);
  CHECK(Json::parse(seq.out).size() == 3);

  // The signless union recipe does not hold for this pair at its minimal p.
  const Run q = run({"verify", "--recipe", "R2", "--g1", c5, "--g2", g5, "--min-p"});
  CHECK(q.code == kExitClaimFailed);
  CHECK(q.out.find("FAILS") != std::string::npos);

  const Run cmp = run({"compare", c5, g5});
  CHECK(cmp.code == kExitClaimFailed);
}

TEST_CASE("construct writes edge lists") {
  TempDir dir;
  const std::string c5 = dir.write("c5.txt", cycle_graph(5));
  const Run r = run({"construct", "--recipe", "R4", "--g1", c5, "--g2", c5, "--p", "5",
                     "--out-dir", dir.path()});
  CHECK(r.code == kExitOk);
  const Graph h = read_edge_list(dir.path() + "/h1_p5.txt");
  CHECK(h.order() == 10);
  CHECK(h.size() == 5 + 25);
}

TEST_CASE("counterexample, scan and lemmas") {
  const Run ce = run({"counterexample"});
  CHECK(ce.code == kExitOk);
  CHECK(ce.out.find("41.708204") != std::string::npos);

  const Run lem = run({"--json", "lemmas", "--trials", "10", "--max-n", "5"});
  CHECK(lem.code == kExitOk);
  const Json audit = Json::parse(lem.out);
  CHECK(audit["discrepancies"][0]["source"] == "kronecker-rule");

  TempDir dir;
  const std::string c5 = dir.write("c5.txt", cycle_graph(5));
  const Run sc = run({"--json", "scan", "--recipe", "R1", "--g1", c5, "--g2", c5, "--p-to", "4"});
  CHECK(sc.code == kExitOk);
  const Json rows = Json::parse(sc.out);
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[1]["satisfied"].get<bool>());
  CHECK(rows[2]["satisfied"].get<bool>());
}
