#include <sstream>

#include "helpers.hpp"

#include "cli.hpp"
#include "forestpat/text.hpp"

using namespace forestpat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--family", "unordered", "--n", "5", "--avoid", "321"}).out == "918\n");
  CHECK(run({"count", "--family", "binary", "--n", "5", "--avoid", "!231"}).out == "723\n");
  CHECK(run({"count", "--family", "unordered", "--n", "5", "--avoid", "321", "--mode", "consecutive"}).out == "997\n");
  CHECK(run({"count", "--family", "unordered", "--n", "4", "--avoid", "321", "--check", "vertices"}).out == "104\n");
  const auto j = Json::parse(run({"count", "--family", "ordered", "--n", "4", "--avoid", "!321", "--format", "json"}).out);
  CHECK(bigint_from_json(j["count"]) == 307);
}

TEST_CASE("refined count sums to the plain count") {
  for (const char* by : {"tdm", "trees"}) {
    for (const char* fam : {"unordered", "binary", "ordered"}) {
      const auto plain = run({"count", "--family", fam, "--n", "4", "--avoid", "231,!123"});
      const auto refined =
          run({"count", "--family", fam, "--n", "4", "--avoid", "231,!123", "--by", by, "--format", "json"});
      REQUIRE(refined.code == 0);
      const auto j = Json::parse(refined.out);
      BigInt total = 0;
      for (const auto& [k, v] : j["distribution"].items()) total += bigint_from_json(v);
      CHECK(total.str() + "\n" == plain.out);
    }
  }
}

TEST_CASE("map") {
  CHECK(run({"map", "--bijection", "theta", "--input", "(2,1)"}).out == "2|2 0\n");
  CHECK(run({"map", "--bijection", "theta", "--inverse", "--input", "2|2 0"}).out == "(2,1)\n");
  CHECK(run({"map", "--bijection", "phi", "--input", "3,6,8,4,1,10,2,9,7,5"}).out == "10|0 1 0 3 2 3 2 6 2 1\n");
  CHECK(run({"map", "--bijection", "alpha", "--input", "4|0 3 4 1"}).out == "4|0 4 2 1\n");
  CHECK(run({"map", "--bijection", "rho", "--input", "2,1"}).out == "2|2 0\n");

  const auto j = run({"map", "--bijection", "shallow", "--input", "{1,3,4,5}{2,6}", "--format", "json"});
  CHECK(forest_from_json(Json::parse(j.out)) == parse_forest("6|0 0 1 1 1 2"));
  CHECK(run({"map", "--bijection", "phi", "--inverse", "--input", j.out.substr(0, j.out.size() - 1)}).out ==
        "2,6,1,5,4,3\n");
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--family", "unordered", "--n", "2"});
  CHECK(r.out == "2|0 0\n2|0 1\n2|2 0\n");
  CHECK(run({"enumerate", "--family", "unordered", "--n", "3", "--avoid", "321", "--limit", "2"}).out ==
        "3|0 0 0\n3|0 0 1\n");
  CHECK(run({"enumerate", "--family", "set-partitions", "--n", "3"}).out.size() > 0);
  CHECK(run({"enumerate", "--family", "compositions", "--n", "4", "--k", "2"}).out == "1,3\n2,2\n3,1\n");
}

TEST_CASE("verify and table") {
  const auto v = run({"verify", "--theorem", "unimodal", "--max-n", "4"});
  CHECK(v.code == 0);
  CHECK(v.out.find("unimodal: PASS") != std::string::npos);
  const auto t = run({"table", "--figure", "7", "--max-n", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("figure,family,n,mode,pattern,count,expected,source,status\n", 0) == 0);
  CHECK(t.out.find("mismatch") == std::string::npos);
}

TEST_CASE("usage errors exit with 2 and list valid names") {
  auto r = run({"map", "--bijection", "nope", "--input", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("theta") != std::string::npos);
  r = run({"verify", "--theorem", "nope", "--max-n", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unimodal") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--family", "unordered", "--n", "3"}).code == 2);
  CHECK(run({"count", "--family", "trees", "--n", "3", "--avoid", "1"}).code == 2);
  CHECK(run({"count", "--family", "unordered", "--n", "9", "--avoid", "1"}).code == 2);
  CHECK(run({"table", "--figure", "8"}).code == 2);
  CHECK(run({"map", "--bijection", "phi", "--inverse", "--input", "2|2 0"}).code == 2);
}
