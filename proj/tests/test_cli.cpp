#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sedfkit/cli.hpp"
#include "sedfkit/io.hpp"

using namespace sedfkit;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate as JSON") {
  Result r = run({"enumerate", "--a", "4", "--format", "json"});
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["a"] == 4);
  CHECK(j["count"] == 2);
  CHECK(j["classes"].size() == 2);
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["classes"][1]["blowup_sequence"] == "(2,2,2,2)");
  for (const auto& c : j["classes"]) {
    Sedf canon = sedf_from_json(c["canonical"]);
    Sedf sym = sedf_from_json(c["symmetric"]);
    CHECK(verify_sedf(canon));
    CHECK(verify_sedf(sym));
    CHECK(apply(witness_from_json(c["map"], 17), sym) == canon);
  }
  CHECK(j["classes"][1]["map"] == Json{{"alpha", 6}, {"beta", 11}, {"swapped", false}});
}

TEST_CASE("no-timing output is byte-identical across runs and workers") {
  Result a = run({"enumerate", "--a", "6", "--format", "json", "--no-timing"});
  Result b = run({"enumerate", "--a", "6", "--format", "json", "--no-timing", "--workers", "4"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("enumerate as CSV") {
  Result r = run({"enumerate", "--a", "3", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "number,symmetric_A,symmetric_B,canonical_A,canonical_B,mapping\n"
                 "3.1,\"{P_0,P_1}\",\"{P_2,P_5}\",\"{0,1,2}\",\"{3,6,9}\",X+1\n");
}

TEST_CASE("blowup") {
  Result r = run({"blowup", "--sequence", "II:2,I:4,II:2"});
  CHECK(r.status == 0);
  CHECK(r.out == "({0,2,4,6}, {7,8,15,16})\n");
  Result j = run({"blowup", "--sequence", "(4,4)", "--format", "json"});
  Valuation v = valuation_from_json(Json::parse(j.out));
  CHECK(verify_valuation(v));
  CHECK(v == Valuation::from_sides({0, 1, 2, 3}, {4, 8, 12, 16}));
  Result from = run({"blowup", "--sequence", "I:4", "--from-stdin"}, R"({"a":1,"b":4,"small":[0],"large":[1,2,3,4]})");
  CHECK(from.out == "({0,1,2,3}, {4,8,12,16})\n");
  CHECK(run({"blowup", "--sequence", "II:1"}).status == 1);
}

TEST_CASE("project and classify") {
  const std::string v = R"({"a":3,"b":3,"small":[0,1,2],"large":[3,6,9]})";
  Result p = run({"project", "--kind", "I", "--format", "json"}, v);
  CHECK(p.status == 0);
  Json pj = Json::parse(p.out);
  CHECK(pj["ell"] == 3);
  CHECK(verify_valuation(valuation_from_json(pj["valuation"])));
  CHECK(run({"project", "--kind", "II"}, v).status == 1);
  CHECK(run({"project", "--kind", "III"}, v).status == 2);

  Result c = run({"classify", "--format", "json"}, v);
  Json cj = Json::parse(c.out);
  CHECK(cj["kind"] == "TypeI");
  CHECK(cj["ell"] == 3);
  CHECK(cj["table_sequence"] == "(3,3)");
  CHECK(sedf_from_json(cj["canonical"]) == Sedf(10, {0, 1, 2}, {3, 6, 9}));
}

TEST_CASE("canonical, equivalent and verify") {
  Result c = run({"canonical", "--format", "json"}, R"({"n":17,"A":[1,4,13,16],"B":[2,8,9,15]})");
  REQUIRE(c.status == 0);
  Json cj = Json::parse(c.out);
  CHECK(sedf_from_json(cj["canonical"]) == Sedf(17, {0, 1, 4, 5}, {6, 8, 14, 16}));
  CHECK(cj["witness"]["alpha"] == 6);
  CHECK(cj["witness"]["beta"] == 11);

  Result e = run({"equivalent"}, R"([{"n":37,"A":[0,1,6,7,12,13],"B":[14,16,18,32,34,36]},
                                     {"n":37,"A":[0,1,2,6,7,8],"B":[9,12,21,24,33,36]}])");
  CHECK(e.status == 0);
  CHECK(e.out == "equivalent: 6X+2\n");
  Result ne = run({"equivalent", "--format", "json"},
                  R"({"first":{"n":17,"A":[0,1,2,3],"B":[4,8,12,16]},"second":{"n":17,"A":[0,1,4,5],"B":[6,8,14,16]}})");
  CHECK(Json::parse(ne.out)["equivalent"] == false);

  CHECK(run({"verify"}, R"({"n":10,"A":[0,1,2],"B":[3,6,9]})").out == "sedf: valid\n");
  CHECK(run({"verify"}, R"({"n":5,"A":[0,1],"B":[2,3]})").status == 1);
  CHECK(run({"verify"}, R"({"a":2,"b":2,"small":[0,1],"large":[2,4]})").status == 0);
  CHECK(run({"verify"}, R"({"n":2,"S":[{"flip":0,"rot":1}],"T":[{"flip":0,"rot":0}]})").status == 1);
}

TEST_CASE("dihedral") {
  Result r = run({"dihedral", "--k", "5", "--check-equivalence"});
  CHECK(r.status == 0);
  CHECK(r.out.find("h = ab^2\n") != std::string::npos);
  CHECK(r.out.find("\nequivalent\n") != std::string::npos);
  Result j = run({"dihedral", "--k", "5", "--format", "json"});
  Json dj = Json::parse(j.out);
  CHECK(verify_near_factorization(dihedral_pair_from_json(dj["near_factorization"])));
  Result t = run({"dihedral", "--k", "5", "--n", "13", "--format", "json"});
  CHECK(verify_near_factorization(dihedral_pair_from_json(Json::parse(t.out)["near_factorization"])));
  CHECK(run({"dihedral", "--k", "4"}).status == 1);
  CHECK(run({"dihedral", "--k", "7", "--n", "13"}).status == 1);
}

TEST_CASE("tables") {
  Result t1 = run({"tables", "--table", "table1", "--a-max", "3", "--format", "csv"});
  CHECK(t1.status == 0);
  CHECK(t1.out == "number,symmetric_A,symmetric_B,canonical_A,canonical_B,mapping\n"
                  "1.1,{P_0},{P_1},{0},{1},X\n"
                  "2.1,{P_1},{P_2},\"{0,1}\",\"{2,4}\",2X+3\n"
                  "3.1,\"{P_0,P_1}\",\"{P_2,P_5}\",\"{0,1,2}\",\"{3,6,9}\",X+1\n");
  Result t2 = run({"tables", "--table", "table2", "--a-min", "4", "--a-max", "4"});
  CHECK(t2.out.find("4.1     (4,4)\n") != std::string::npos);
  CHECK(t2.out.find("4.2     (2,2,2,2)\n") != std::string::npos);
  Result t3 = run({"tables", "--a-max", "1", "--format", "json"});
  Json rows = Json::parse(t3.out);
  REQUIRE(rows.size() == 1);
  CHECK(sedf_from_json(rows[0]["canonical"]) == Sedf(2, {0}, {1}));
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"enumerate", "--a", "3", "--bogus"}).status == 2);
  CHECK(run({"enumerate"}).status == 2);
  CHECK(run({"enumerate", "--a", "3", "--format", "xml"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"canonical"}, "{not json").status == 1);
  CHECK(run({"canonical"}, R"({"n":17,"A":[1]})").status == 1);
  CHECK(run({"canonical"}, R"({"n":5,"A":[0,1],"B":[2,3]})").status == 1);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "sedfkit_cli_test.json";
  Result r = run({"enumerate", "--a", "3", "--format", "json", "--no-timing", "--output", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string text{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  CHECK(Json::parse(text)["count"] == 1);
  std::filesystem::remove(path);
}
