#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hooksph/cli.hpp"

using namespace hooksph;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hooksph"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spherical command") {
  const auto r = run({"spherical", "--b", "1", "--blocks", "2,3,4", "--support", "1,2,3", "--method", "all"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.parsed();
  CHECK(j["value"] == "11/12");
  CHECK(j["agreement"] == true);
  CHECK(j["values"]["bruteforce"] == "11/12");
  CHECK(j["values"]["gram"] == "11/12");
  CHECK(j["values"]["closed"] == "11/12");

  const auto trivial = run({"spherical", "--b", "0", "--blocks", "2,2", "--support", "1,2"});
  CHECK(trivial.code == kExitOk);
  CHECK(trivial.parsed()["value"] == "1");

  const auto text = run({"spherical", "--b", "0", "--blocks", "2,2", "--support", "1,2", "--format", "text"});
  CHECK(text.out.rfind("value 1\n", 0) == 0);
}

TEST_CASE("spherical command reports missing invariants with exit code 2") {
  const auto r = run({"spherical", "--b", "3", "--blocks", "2,2,2", "--support", "1,2"});
  CHECK(r.code == kExitNoInvariants);
  CHECK(r.err.find("NoInvariants") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("spherical command skips oracles outside their range") {
  const auto r = run({"spherical", "--b", "1", "--blocks", "7,7", "--support", "1,2", "--method", "all"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.parsed();
  CHECK(j["skipped"].size() == 2);
  CHECK_FALSE(j["values"].contains("bruteforce"));
  CHECK(j["value"] == "5/7");
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"spherical", "--b", "1", "--blocks", "2,x", "--support", "1"}).code == kExitUsage);
  CHECK(run({"spherical", "--b", "1", "--blocks", "2,2", "--support", "3"}).code == kExitUsage);
  CHECK(run({"spherical", "--b", "1", "--blocks", "2,2"}).code == kExitUsage);
  CHECK(run({"spherical", "--b", "1", "--blocks", "2,2", "--support", "1", "--method", "guess"}).code == kExitUsage);
  CHECK(run({"character", "--N", "4", "--b", "1", "--class", "3"}).code == kExitUsage);
  CHECK(run({"character", "--N", "4", "--b", "4", "--class", "4"}).code == kExitUsage);
  CHECK(run({"eigsum", "--profile", "0:1,1:1", "--b", "0", "--k", "1"}).code == kExitUsage);
  CHECK(run({"eigsum", "--profile", "1:1,0:1", "--b", "0", "--k", "1", "--normalization", "other"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "everything"}).code == kExitUsage);
}

TEST_CASE("help exits with code 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("spherical") != std::string::npos);
}

TEST_CASE("character command") {
  CHECK(run({"character", "--N", "4", "--b", "1", "--class", "4"}).parsed()["value"] == "-1");
  CHECK(run({"character", "--N", "4", "--b", "0", "--class", "2,1,1"}).parsed()["value"] == "1");
  CHECK(run({"character", "--N", "3", "--b", "2", "--class", "3"}).parsed()["value"] == "1");
  CHECK(run({"character", "--N", "3", "--b", "2", "--class", "3", "--format", "text"}).out == "1\n");
}

TEST_CASE("eigsum command") {
  auto coeffs = [](const Run& r) { return r.parsed()["coefficients"]; };
  CHECK(coeffs(run({"eigsum", "--profile", "1:1,0:1", "--b", "1", "--k", "1"})) == json::array({"1", "2"}));
  CHECK(coeffs(run({"eigsum", "--profile", "1:3", "--b", "0", "--k", "2", "--normalization", "plain"})) == json::array({"3"}));
  CHECK(coeffs(run({"eigsum", "--profile", "1:3", "--b", "0", "--k", "2", "--normalization", "as-printed"})) ==
        json::array({"6"}));
  const auto r = run({"eigsum", "--profile", "1:1,0:1", "--b", "0", "--k", "1"});
  CHECK(coeffs(r) == json::array({"1"}));
  CHECK(r.parsed()["normalization"] == "plain");
  CHECK(r.parsed()["dim_tau"] == "1");
  CHECK(r.parsed()["multiplicity"] == "1");
  CHECK(run({"eigsum", "--profile", "1:1,0:1", "--b", "2", "--k", "1"}).code == kExitNoInvariants);
}

TEST_CASE("json reports round trip") {
  for (const auto& r : {run({"spherical", "--b", "2", "--blocks", "2,3,1", "--support", "1,2", "--method", "all"}),
                        run({"character", "--N", "5", "--b", "2", "--class", "3,2"}),
                        run({"eigsum", "--profile", "2:1,1:2,0:1", "--b", "1", "--k", "3"})}) {
    REQUIRE(r.code == kExitOk);
    const json j = r.parsed();
    CHECK(json::parse(j.dump()) == j);
    CHECK(j.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("verify command on a reduced grid") {
  const auto r = run({"verify", "--suite", "spherical", "--max-p", "3", "--max-n", "2", "--max-b", "2", "--random", "20"});
  REQUIRE(r.code == kExitOk);
  const auto j = r.parsed();
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 5);
  for (const auto& rep : j["reports"]) CHECK(rep["failed"] == 0);

  const auto e = run({"verify", "--suite", "eigsum", "--eigsum-max-n", "3", "--eigsum-max-degree", "3", "--eigsum-max-k", "2"});
  REQUIRE(e.code == kExitOk);
  CHECK(e.parsed()["certified_normalization"] == "plain");
}
