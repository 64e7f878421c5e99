#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "homomesy/report_json.hpp"

using namespace homomesy;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run lab(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json lab_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = lab(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

const std::string kGraph = std::string(HOMOMESY_TEST_DATA) + "/four_cycle.txt";

}  // namespace

TEST_CASE("check reports") {
  const Json ideals = lab_json({"check", "grid-promotion-ideals", "--a", "3", "--b", "2", "--stat", "ideal-size"});
  CHECK(ideals["homomesic"] == true);
  CHECK(ideals["c"] == "3");
  CHECK(ideals["map"] == "promotion");
  CHECK(ideals["space"] == "J([3]x[2])");
  CHECK(ideals["orbits"].size() == 2);
  CHECK(ideals["orbits"][1]["rep"] == Json::parse("[[1,1]]"));

  const Json antichains = lab_json({"check", "grid-promotion-antichains", "--a", "3", "--b", "2", "--stat", "antichain-size"});
  CHECK(antichains["homomesic"] == false);
  CHECK(antichains["c"].is_null());
  CHECK(antichains["orbits"][0]["average"] == "4/5");
  CHECK(antichains["orbits"][1]["average"] == "8/5");
  CHECK(antichains["global_average"] == "6/5");

  const Json small = lab_json({"check", "grid-rowmotion-antichains", "--a", "2", "--b", "2", "--stat", "antichain-size"});
  CHECK(small["c"] == "1");

  const Json sand = lab_json({"check", "sandpile", "--graph", kGraph});
  CHECK(sand["c"] == Json::parse(R"(["1/2","1","1/2"])"));
}

TEST_CASE("JSON reports round-trip to the same verdict") {
  const std::vector<std::vector<std::string>> cases = {
      {"check", "grid-promotion-ideals", "--a", "3", "--b", "2"},
      {"check", "grid-promotion-antichains", "--a", "3", "--b", "2"},
      {"check", "grid-rowmotion-antichains", "--a", "3", "--b", "4", "--stat", "positive-fiber:2"},
      {"check", "grid-rowmotion-ideals", "--a", "3", "--b", "3", "--stat", "indicator:2,2"},
      {"check", "ballot", "--a", "2", "--b", "5"},
      {"check", "cyclic-inversions", "--a", "3", "--b", "3"},
      {"check", "reversal-inversions", "--n", "4"},
      {"check", "suter", "--n", "6", "--stat", "weight-ij:2"},
      {"check", "ssyt", "--n", "3", "--k", "4", "--stat", "sigma:1,2"},
      {"check", "sandpile", "--graph", kGraph}};
  for (const auto& args : cases) {
    CAPTURE(args[1]);
    const Json report = lab_json(args);
    const Verdict v = verdict_from_json(report);
    CHECK(v.homomesic == report["homomesic"].get<bool>());
    if (v.homomesic) {
      CHECK(rational_vector_to_json(*v.c) == report["c"]);
    } else {
      CHECK(report["c"].is_null());
    }
  }
}

TEST_CASE("expectations and exit codes") {
  CHECK(lab({"check", "grid-promotion-ideals", "--a", "3", "--b", "2", "--expect-c", "3"}).code == cli::kOk);
  CHECK(lab({"check", "grid-promotion-ideals", "--a", "3", "--b", "2", "--expect-c", "6/2"}).code == cli::kOk);
  CHECK(lab({"check", "grid-promotion-ideals", "--a", "3", "--b", "2", "--expect-c", "5/2"}).code == cli::kMismatch);
  CHECK(lab({"check", "grid-promotion-antichains", "--a", "3", "--b", "2", "--expect-c", "6/5"}).code == cli::kMismatch);
  CHECK(lab({"check", "sandpile", "--graph", kGraph, "--expect-c", "1/2,1,1/2"}).code == cli::kOk);
  CHECK(lab({"check", "sandpile", "--graph", kGraph, "--expect-c", "1/2"}).code == cli::kMismatch);

  CHECK(lab({}).code == cli::kUsage);
  CHECK(lab({"check"}).code == cli::kUsage);
  CHECK(lab({"check", "grid-rowmotion-ideals", "--a", "3"}).code == cli::kUsage);
  CHECK(lab({"check", "grid-rowmotion-ideals", "--a", "0", "--b", "2"}).code == cli::kUsage);
  CHECK(lab({"check", "grid-rowmotion-ideals", "--a", "2", "--b", "2", "--stat", "nope"}).code == cli::kUsage);
  CHECK(lab({"check", "sandpile"}).code == cli::kUsage);
  CHECK(lab({"check", "sandpile", "--graph", "/nonexistent"}).code == cli::kUsage);
  CHECK(lab({"subspace", "suter", "--n", "4"}).code == cli::kUsage);
  CHECK(lab({"orbits", "suter", "--n", "5", "--seed", "3,2,1"}).code == cli::kUsage);
  CHECK(lab({"orbits", "grid-rowmotion-antichains", "--a", "3", "--b", "3", "--seed", "(1,1),(2,2)"}).code == cli::kUsage);
  CHECK(lab({"check", "lyness", "--seed", "0,1"}).code == cli::kUsage);

  const Run guard = lab({"check", "grid-rowmotion-ideals", "--a", "12", "--b", "12", "--guard", "1000"});
  CHECK(guard.code == cli::kGuard);
  CHECK(guard.err.find("guard") != std::string::npos);
  CHECK(lab({"check", "reversal-inversions", "--n", "9", "--guard", "100"}).code == cli::kGuard);
}

TEST_CASE("orbit listings") {
  const Json rowmotion_orbit = lab_json({"orbits", "grid-rowmotion-ideals", "--a", "4", "--b", "2", "--seed", "{(2,1)}"});
  REQUIRE(rowmotion_orbit["orbits"].size() == 1);
  CHECK(rowmotion_orbit["orbits"][0]["period"] == 6);
  CHECK(rowmotion_orbit["orbits"][0]["states"][0] == Json::parse("[[1,1],[2,1]]"));
  // The canonical representative is the smallest ideal in the orbit.
  CHECK(rowmotion_orbit["orbits"][0]["rep"] == Json::parse("[[1,1],[1,2]]"));

  const Run table = lab({"orbits", "grid-rowmotion-ideals", "--a", "4", "--b", "2", "--seed", "--+--+"});
  CHECK(table.code == 0);
  std::size_t pos = 0;
  for (const char* w : {"--+--+", "-+--+-", "+--+--", "-++---", "+----+", "---++-"}) {
    pos = table.out.find(w, pos);
    CHECK(pos != std::string::npos);
  }

  const Json suter = lab_json({"orbits", "suter", "--n", "5"});
  std::vector<int> sizes;
  for (const auto& o : suter["orbits"]) sizes.push_back(o["period"].get<int>());
  CHECK(sizes == std::vector<int>{5, 5, 5, 1});

  const Json sand = lab_json({"orbits", "sandpile", "--graph", kGraph});
  CHECK(sand["orbits"].size() == 2);
  for (const auto& o : sand["orbits"]) CHECK(o["period"] == 2);

  const Json ssyt = lab_json({"orbits", "ssyt", "--n", "3", "--k", "5", "--seed", "1,1,2/2,3,4"});
  CHECK(ssyt["orbits"][0]["states"][1] == Json::parse("[[1,1,3],[2,5,5]]"));
  CHECK(ssyt["orbits"][0]["averages"]["corners"] == "6");

  const Run csv = lab({"orbits", "cyclic-inversions", "--a", "2", "--b", "2", "--format", "csv"});
  CHECK(csv.out.rfind("orbit,position,state,\"inversions\"\n", 0) == 0);

  const Json lyness = lab_json({"check", "lyness", "--seed", "1,3"});
  CHECK(lyness["orbits"][0]["product"] == "1");
  CHECK(lyness["orbits"][0]["sequence"] == Json::parse(R"(["1","3","4","5/3","2/3"])"));
}

TEST_CASE("subspace command") {
  const Json ideals = lab_json({"subspace", "grid-rowmotion-ideals", "--a", "3", "--b", "2"});
  CHECK(ideals["dimension"] == 5);
  int files = 0;
  for (const auto& g : ideals["generators"]) {
    CHECK(g["present"] == true);
    files += g["name"].get<std::string>().rfind("file-sum", 0) == 0;
  }
  CHECK(files == 4);

  const Json antichains = lab_json({"subspace", "grid-rowmotion-antichains", "--a", "3", "--b", "2"});
  for (const auto& g : antichains["generators"]) CHECK(g["present"] == true);

  const Json promo = lab_json({"subspace", "grid-promotion-antichains", "--a", "3", "--b", "2"});
  CHECK(promo["dimension"].get<int>() < 6);
}
