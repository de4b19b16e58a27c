#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "twodist/cli.hpp"
#include "twodist/oracle.hpp"
#include "twodist/report.hpp"
#include "twodist/representations.hpp"

using namespace twodist;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twodist");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("twodist_test_" + name)).string();
}

const std::string kDataDir = TWODIST_DATA_DIR;

}  // namespace

TEST_CASE("report JSON round trip") {
  for (const Graph& g : {cycle_graph(5), bow_tie_graph(), complete_graph(3), cluster_graph(std::vector<int>{2, 3}),
                         complete_multipartite_graph(std::vector<int>{2, 2})}) {
    const ReprReport r = GraphAnalyzer(g).report();
    const json j = to_json(r);
    CHECK(report_from_json(json::parse(j.dump())) == r);
  }
  Tolerances t{1e-8, 1e-7, 1e-6};
  const Tolerances back = tolerances_from_json(to_json(t));
  CHECK(back.eig == t.eig);
  CHECK(back.psd == t.psd);
  CHECK(back.residual == t.residual);
}

TEST_CASE("analyze") {
  const Run r = run({"analyze", "--edges", kDataDir + "/c5.txt"});
  REQUIRE(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(doc["report"]["dim_e"] == 2);
  CHECK(doc["report"]["dim_j"] == 4);
  CHECK(doc["input"]["graph6"] == "Dhc");
  CHECK(doc["report"]["class"]["tag"] == "General");

  const Run deg = run({"analyze", "--g6", "D~{"});
  CHECK(deg.code == cli::kOk);
  CHECK(json::parse(deg.out)["report"]["degenerate"] == true);
  CHECK(json::parse(deg.out)["report"]["dim_e"].is_null());

  const Run pretty = run({"analyze", "--g6", "Dhc", "--pretty"});
  CHECK(pretty.out.find("\n  ") != std::string::npos);
  CHECK(json::parse(pretty.out) == json::parse(run({"analyze", "--g6", "Dhc"}).out));
}

TEST_CASE("analyze input errors") {
  CHECK(run({"analyze", "--g6", "D!!"}).code == cli::kBadInput);
  CHECK(run({"analyze", "--edges", "/nonexistent/graph.txt"}).code == cli::kBadInput);
  CHECK(run({"analyze"}).code == cli::kBadInput);
  CHECK(run({"analyze", "--g6", "Dhc", "--edges", kDataDir + "/c5.txt"}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({}).code == cli::kBadInput);

  const std::string path = temp_path("bad_edges.txt");
  std::ofstream(path) << "4\n0 1\n2 9\n";
  const Run bad = run({"analyze", "--edges", path});
  CHECK(bad.code == cli::kBadInput);
  CHECK(bad.err.find("line 3") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("embed writes coordinates that re-verify") {
  struct Case {
    std::vector<std::string> args;
    double alpha;
  };
  const std::vector<Case> cases{
      {{"--mode", "euclidean", "--beta", "l"}, 1.0},
      {{"--mode", "euclidean", "--beta", "u"}, 1.0},
      {{"--mode", "euclidean", "--beta", "0.8"}, 1.0},
      {{"--mode", "spherical"}, 1.0},
      {{"--mode", "spherical", "--side", "lower"}, 1.0},
      {{"--mode", "jspherical"}, 2.0},
  };
  const Graph g = bow_tie_graph();
  const std::string csv = temp_path("embed.csv");
  for (const auto& c : cases) {
    std::vector<std::string> args{"embed", "--edges", kDataDir + "/bowtie.txt", "--out", csv};
    args.insert(args.end(), c.args.begin(), c.args.end());
    const Run r = run(args);
    REQUIRE(r.code == cli::kOk);
    const json side = json::parse(r.out);
    CHECK(side["verification"]["pass"] == true);
    CHECK(side["alpha"].get<double>() == c.alpha);

    std::ifstream in(csv);
    Configuration config;
    config.points = cli::read_coordinates_csv(in);
    CHECK(config.size() == 5);
    CHECK(config.dim() == side["dim"].get<std::size_t>());
    CHECK(verify_two_distance(config, g, c.alpha, side["beta"].get<double>(), 1e-9).pass);

    std::ifstream sidecar(csv + ".json");
    CHECK(json::parse(sidecar) == side);
  }
  std::filesystem::remove(csv);
  std::filesystem::remove(csv + ".json");
}

TEST_CASE("embed refusals") {
  const std::string csv = temp_path("refused.csv");
  CHECK(run({"embed", "--edges", kDataDir + "/bowtie.txt", "--mode", "spherical", "--side", "upper", "--out", csv})
            .code == cli::kInfeasible);
  CHECK(run({"embed", "--g6", "D~{", "--mode", "jspherical", "--out", csv}).code == cli::kInfeasible);
  CHECK(run({"embed", "--g6", "Dhc", "--mode", "euclidean", "--beta", "1", "--out", csv}).code == cli::kInfeasible);
  CHECK(run({"embed", "--g6", "Dhc", "--mode", "euclidean", "--out", csv}).code == cli::kBadInput);
  CHECK(run({"embed", "--g6", "Dhc", "--mode", "euclidean", "--beta", "x1", "--out", csv}).code == cli::kBadInput);
  CHECK(run({"embed", "--g6", "Dhc", "--mode", "polar", "--out", csv}).code == cli::kBadInput);
  CHECK_FALSE(std::filesystem::exists(csv));
}

TEST_CASE("sweep subcommand") {
  const Run r = run({"sweep", "--n", "4", "--samples", "0", "--serial"});
  CHECK(r.code == cli::kOk);
  const json doc = json::parse(r.out);
  CHECK(doc["violations"] == 0);
  CHECK(doc["graphs_checked"] == 2 + 8 + 64);
  CHECK(doc["counterexample"].is_null());
  CHECK(run({"sweep", "--n", "9"}).code == cli::kBadInput);
}

TEST_CASE("coordinate CSV round trip is exact") {
  Matrix m = Matrix::from_rows({{1.0 / 3.0, -2.5e-17}, {std::sqrt(2.0), 1e300}});
  std::stringstream ss;
  cli::write_coordinates_csv(m, ss);
  CHECK(cli::read_coordinates_csv(ss) == m);
  std::stringstream ragged("1,2\n3\n");
  CHECK_THROWS(cli::read_coordinates_csv(ragged));
}
