#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wci::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("check") {
  const auto qs = run({"check", "8,8,8 / 2^4,3^5,5^3", "--json"});
  CHECK(qs.code == 0);
  const auto j = json_of(qs);
  CHECK(j["quasi_smooth"] == true);
  CHECK(j["family"] == "8,8,8 / 2^4,3^5,5^3");
  CHECK(j["delta"] == -14);

  CHECK(run({"check", "35,6 / 5,7,2^5,3^5", "--assert", "quasi_smooth"}).code == 1);
  CHECK(run({"check", "35 / 5,7,2^5,3^5", "--assert", "fano", "--assert", "well_formed"}).code == 0);
  CHECK(run({"check", "35 / 5,7,2^5,3^5", "--assert", "smooth"}).code == 1);
  CHECK(run({"check", "2 / 1,1,2", "--assert", "quasi_smooth"}).code == 3);
  CHECK(run({"check", "2 / 1,1,2", "--assert", "linear_cone"}).code == 0);
  CHECK(run({"check", "6 / 1,2", "--assert", "bogus"}).code == 2);
  CHECK(run({"check", "6 , 1,2"}).code == 2);

  const auto strata = json_of(run({"check", "8,8,8 / 2^3,3^4,5^3", "--json"}));
  CHECK(strata["quasi_smooth"] == false);
  bool saw_fail = false;
  for (const auto& s : strata["strata"]) {
    if (s["outcome"] == "FAIL") {
      saw_fail = true;
      CHECK(s["values"] == "5^3");
      CHECK(s["k"] == 3);
    }
  }
  CHECK(saw_fail);

  const auto cone = json_of(run({"check", "2 / 1,1,2", "--json"}));
  CHECK(cone["quasi_smooth"].is_null());
  CHECK(cone["fundamental_index"].is_null());
}

TEST_CASE("pair") {
  const auto j = json_of(run({"pair", "35,30,42/10,15,14,21", "--json"}));
  CHECK(j["regular"] == true);
  CHECK(j["delta"] == 47);
  CHECK(run({"pair", "4/2,6", "--assert", "regular"}).code == 1);
  CHECK(run({"pair", "6,6/2^2,3^2", "--assert", "regular"}).code == 0);
  CHECK(run({"pair", "35/5,7,2^5,3^5", "--h-regular", "6", "--assert", "regular"}).code == 0);
  const auto split = json_of(run({"pair", "6/2,3", "--split", "2", "--json"}));
  CHECK(split["split"]["top"] == "3/1,3");
  CHECK(split["split"]["at_prime"] == "6/2");
  CHECK(run({"pair", "6/2,3", "--split", "4"}).code == 2);
}

TEST_CASE("frobenius") {
  const auto o = run({"frobenius", "2,3"});
  CHECK(o.code == 0);
  CHECK(o.out == "1\n");
  CHECK(run({"frobenius", "4,6"}).code == 3);
  const auto j = json_of(run({"frobenius", "10,14,15,21", "--brauer", "--json"}));
  CHECK(j["brauer_bound"] == 61);
  CHECK(j["frobenius"] <= 47);
}

TEST_CASE("hilbert") {
  const auto csv = run({"hilbert", "6 / 1,2,3", "3"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "k,h0\n0,1\n1,1\n2,2\n3,3\n");
  const auto formal = run({"hilbert", "35,6 / 5,7,2^5,3^5", "2"});
  CHECK(formal.code == 0);
  CHECK_FALSE(formal.err.empty());
  CHECK(run({"hilbert", "6 / 1,2,3", "-1"}).code == 2);
  CHECK(run({"hilbert", "6 / 1,2,3", "2", "--json", "--csv"}).code == 2);
}

TEST_CASE("base-locus") {
  const auto text = run({"base-locus", "231,231,26 / 3^2,7^2,11^2,1^447", "1"});
  CHECK(text.code == 0);
  CHECK(text.out == "3^2,7^2,11^2: 231,231,26 / 3^2,7^2,11^2\n");
  CHECK(run({"base-locus", "231,231,26 / 3^2,7^2,11^2,1^447", "1", "--assert", "empty"}).code == 1);
  CHECK(run({"base-locus", "6 / 1,2,3", "2", "--assert", "empty"}).code == 0);
  CHECK(run({"base-locus", "6 / 1,2,3", "0"}).code == 2);
}

TEST_CASE("enumerate") {
  const auto j = json_of(run({"enumerate", "--kind", "families", "--max-vars", "3", "--min-vars", "3", "--max-weight", "3",
                              "--max-degree", "6", "--quasi-smooth", "--well-formed", "--no-cones", "--fano",
                              "--calabi-yau", "--json"}));
  bool found = false;
  for (const auto& x : j["instances"]) found = found || x["instance"] == "6 / 1,2,3";
  CHECK(found);
  CHECK(run({"enumerate", "--kind", "pairs", "--smooth"}).code == 2);
  CHECK(run({"enumerate", "--kind", "triangles"}).code == 2);
}

TEST_CASE("verify") {
  const auto a = run({"verify", "prop-regular", "--max-codim", "2", "--max-vars", "3", "--max-weight", "6",
                      "--max-degree", "12", "--json", "--no-timing", "--workers", "1"});
  const auto b = run({"verify", "prop-regular", "--max-codim", "2", "--max-vars", "3", "--max-weight", "6",
                      "--max-degree", "12", "--json", "--no-timing", "--workers", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = json_of(a);
  CHECK(j["counterexamples"].empty());
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(run({"verify", "prop-regular", "--prime", "3"}).code == 2);
  CHECK(run({"verify", "lemma-qdiv", "--assert"}).code == 1);
  CHECK(run({"verify", "conjecture-regular", "--max-vars", "4", "--max-weight", "8", "--assert"}).code == 0);
  CHECK(run({"verify", "unknown"}).code == 2);
}

TEST_CASE("the ceiling is an explicit refusal") {
  setenv("WCI_INSTANCE_CEILING", "10", 1);
  const auto o = run({"verify", "prop-regular"});
  unsetenv("WCI_INSTANCE_CEILING");
  CHECK(o.code == 2);
  CHECK(o.err.find("ceiling") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"nonsense"}).code == 2);
}
