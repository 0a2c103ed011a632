#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "treecross/cli.hpp"

using namespace treecross;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "treecross");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("TREECROSS_TEST_DATA");
  return (std::filesystem::path(dir ? dir : "tests/data") / name).string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("dist") {
  auto r = run({"dist", "--n", "4", "--convex"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,count\n0,12\n1,4\n");
  r = run({"dist", "--n", "3", "--convex"});
  CHECK(r.out == "k,count\n0,3\n");
  r = run({"dist", "--points", data("triangle_plus_center.txt")});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  long total = 0;
  while (std::getline(rows, line)) total += std::stol(line.substr(line.find(',') + 1));
  CHECK(total == 16);

  const auto out_path = std::filesystem::temp_directory_path() / "treecross_dist_test.csv";
  r = run({"dist", "--n", "5", "--convex", "--shards", "3", "--out", out_path.string()});
  CHECK(r.code == 0);
  CHECK(slurp(out_path) == "k,count\n0,55\n1,45\n2,20\n3,5\n");
  std::filesystem::remove(out_path);
}

TEST_CASE("dist error paths and exit codes") {
  CHECK(run({"dist", "--n", "4", "--convex", "--points", data("collinear.txt")}).code == 2);
  CHECK(run({"dist", "--n", "4"}).code == 2);
  CHECK(run({"dist", "--convex"}).code == 2);
  CHECK(run({"dist", "--n", "4", "--convex", "--shards", "0"}).code == 2);
  CHECK(run({"dist", "--points", data("collinear.txt")}).code == 3);
  const auto malformed = run({"dist", "--points", data("malformed.txt")});
  CHECK(malformed.code == 3);
  CHECK(has(malformed.err, "line 5"));
  CHECK(run({"dist", "--points", data("missing.txt")}).code == 3);
  CHECK(run({"dist", "--n", "3", "--points", data("triangle_plus_center.txt")}).code == 2);
  const auto guard = run({"dist", "--n", "11", "--convex"});
  CHECK(guard.code == 4);
  CHECK(has(guard.err, "trees"));
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("moments") {
  auto r = run({"moments", "--n-max", "8", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "8,1,35/8,35/8,MATCH"));
  CHECK(has(r.out, "8,2,12789/512,12789/512,MATCH"));
  r = run({"moments", "--n-max", "3", "--k", "1"});
  CHECK(r.out == "n,j,enumerated,closed_form,status\n1,1,0,0,MATCH\n2,1,0,0,MATCH\n3,1,0,0,MATCH\n");
  r = run({"moments", "--n-min", "9", "--n-max", "9", "--k", "1"});
  CHECK(has(r.out, "9,1,56/9,56/9,MATCH"));

  const auto out_path = std::filesystem::temp_directory_path() / "treecross_moments_test.csv";
  r = run({"moments", "--n-min", "5", "--n-max", "5", "--k", "3", "--out", out_path.string()});
  CHECK(has(r.out, "5,3,"));
  CHECK(has(slurp(out_path), "E[X_5^1],4,5\nE[X_5^2],34,25\n"));
  std::filesystem::remove(out_path);
}

TEST_CASE("cumulants") {
  const auto r = run({"cumulants", "--n-min", "4", "--n-max", "6", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "5,2,18/25,"));
  CHECK(has(r.out, "log-log slope of |C3|"));
}

TEST_CASE("fit") {
  auto r = run({"fit", "--source", "closed"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "4,1/36\n3,-14/45\n2,553/360\n1,-305/72\n0,491/72\n-1,-2323/360\n-2,217/60\n-3,-1\n-4,0\n"));
  CHECK(has(r.out, "10,0\n"));
  r = run({"fit", "--moment", "1", "--exp-min", "-1", "--exp-max", "3", "--n-min", "2", "--n-max", "6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "3,0\n2,1/6\n1,-1\n0,11/6\n-1,-1\n"));
  r = run({"fit", "--moment", "1", "--exp-min", "0", "--exp-max", "2", "--n-list", "2,3,3", "--source", "closed"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "rank"));
  CHECK(run({"fit", "--n-min", "2", "--n-max", "5"}).code == 2);
}

TEST_CASE("crnumber") {
  auto r = run({"crnumber", "--convex", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "crossing_number=15\n"));
  CHECK(has(r.out, "ratio=1\n"));
  r = run({"crnumber", "--points", data("triangle_plus_center.txt")});
  CHECK(has(r.out, "crossing_number=0\n"));
  CHECK(has(r.out, "ratio=0\n"));
  r = run({"crnumber", "--points", data("square_plus_center.txt")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "crossing_number=3\n"));
  CHECK(has(r.out, "ratio=3/5\n"));
  CHECK(has(r.out, "oracles=AGREE"));
  CHECK(run({"crnumber", "--points", data("collinear.txt")}).code == 3);
}

TEST_CASE("forest-prob") {
  auto r = run({"forest-prob", "--n", "5", "--edges", "1-2,3-4"});
  CHECK(r.code == 0);
  CHECK(r.out == "T=20\nP=4/25\nbrute_force=20 MATCH\n");
  r = run({"forest-prob", "--n", "4", "--edges", "1-2"});
  CHECK(has(r.out, "T=8\nP=1/2\n"));
  r = run({"forest-prob", "--n", "4", "--edges", "1-2,2-3,3-4"});
  CHECK(has(r.out, "T=1\nP=1/16\n"));
  CHECK(run({"forest-prob", "--n", "4", "--edges", "1-2,2-3,3-1"}).code == 3);
  CHECK(run({"forest-prob", "--n", "4", "--edges", "1-x"}).code == 2);
  CHECK(run({"forest-prob", "--n", "4", "--edges", "1-9"}).code == 3);
}

TEST_CASE("sample") {
  auto a = run({"sample", "--n", "2", "--samples", "10", "--seed", "1", "--convex"});
  CHECK(a.code == 0);
  CHECK(has(a.out, "\"degenerate\": true"));
  CHECK(has(a.out, "\"empirical_variance\": 0.0"));
  auto b = run({"sample", "--n", "40", "--samples", "3000", "--seed", "7", "--convex"});
  auto c = run({"sample", "--n", "40", "--samples", "3000", "--seed", "7", "--convex"});
  CHECK(b.out == c.out);
  auto d = run({"sample", "--samples", "2000", "--seed", "3", "--points", data("square_plus_center.txt")});
  CHECK(d.code == 0);
  CHECK(has(d.out, "\"sigma_source\": \"empirical\""));
  CHECK(has(d.out, "\"rectilinear_crossing_number\": \"3\""));
  CHECK(run({"sample", "--n", "5", "--samples", "0", "--seed", "1", "--convex"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "tables", "--max-n", "7"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS table1 n=7: 1428, 2856, 3535, 3430, 2415, 1659, 847, 385, 203, 42, 7"));
  r = run({"verify", "--suite", "formulas", "--max-n", "9"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "DOCUMENTED-DEVIATION table2-mean n=9"));
  CHECK(has(r.out, "summary: "));
  CHECK_FALSE(has(r.out, "FAIL"));
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("help") { CHECK(run({"--help"}).code == 0); }
