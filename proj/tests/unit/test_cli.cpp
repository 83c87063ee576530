#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cyclix/cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cyclix::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"homology", "--preset", "circle", "--max-degree", "2"}).code == 0);
  CHECK(run({"homology", "--preset", "nowhere"}).code == 2);
  CHECK(run({"homology", "--preset", "circle", "--max-degree", "-1"}).code == 2);
  CHECK(run({"homology", "--preset", "circle", "--normalized", "--unnormalized"}).code == 2);
  CHECK(run({"hc", "--preset", "unit", "--variant", "sideways"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({"hh", "--preset", "truncpoly:2", "--domain", "zp:4"}).code == 2);
  CHECK(run({"hh", "--preset", "truncpoly:3", "--max-degree", "8", "--budget", "10"}).code == 3);
  CHECK(run({"hh", "--input", "/nonexistent/algebra.json"}).code == 2);
  CHECK(run({"verify", "hkr", "--preset", "truncpoly:2", "--domain", "zp:2"}).code == 2);
}

TEST_CASE("text output") {
  const Run r = run({"homology", "--preset", "circle", "--max-degree", "3"});
  CHECK(r.out.find("betti: 1 1 0 0") != std::string::npos);
  const Run z = run({"homology", "--preset", "bg", "--group", "cyclic:2", "--domain", "z", "--max-degree", "4"});
  CHECK(z.out.find("H_1 = Z/2") != std::string::npos);
  CHECK(z.out.find("H_2 = 0") != std::string::npos);
  const Run f = run({"verify", "sbi", "--preset", "unit", "--max-degree", "3"});
  CHECK(f.code == 0);
  CHECK(f.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output") {
  const Run r = run({"hh", "--preset", "truncpoly:2", "--max-degree", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::size_t> betti;
  for (const auto& g : j.at("groups")) betti.push_back(g.at("betti").get<std::size_t>());
  CHECK(betti == std::vector<std::size_t>{2, 1, 1, 1});
  const Run w = run({"hc", "--preset", "unit", "--variant", "periodic", "--window", "2", "--max-degree", "2", "--json"});
  REQUIRE(w.code == 0);
  CHECK(nlohmann::json::parse(w.out).at("tower").at("stable").get<bool>());
  const Run v = run({"verify", "relations", "--preset", "circle", "--max-degree", "3", "--json"});
  REQUIRE(v.code == 0);
  CHECK(nlohmann::json::parse(v.out).at("passed").get<bool>());
}
