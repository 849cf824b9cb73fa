#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sdyn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sdyn_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

json without_timing(json report) {
  for (auto& c : report["checks"]) c.erase("seconds");
  return report;
}

}  // namespace

TEST_F(Cli, AlgebraDescriptors) {
  Result sl21 = run({"algebra", "--family", "sl", "--m", "2", "--n", "1"});
  ASSERT_EQ(sl21.code, 0) << sl21.err;
  json d = json::parse(sl21.out);
  EXPECT_EQ(d["dim"], 8);
  EXPECT_EQ(d["roots"].size(), 6u);
  EXPECT_EQ(d["rank"], 2);

  Result gl20 = run({"algebra", "--family", "gl", "--m", "2", "--n", "0"});
  ASSERT_EQ(gl20.code, 0);
  EXPECT_EQ(json::parse(gl20.out)["dim"], 4);

  Result sl11 = run({"algebra", "--family", "sl", "--m", "1", "--n", "1"});
  EXPECT_EQ(sl11.code, 2);
  EXPECT_FALSE(sl11.err.empty());

  EXPECT_EQ(run({"algebra", "--family", "so", "--m", "2", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"algebra", "--m", "2", "--n", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, AlgebraToFile) {
  const std::string out = (dir_ / "gl21.json").string();
  ASSERT_EQ(run({"algebra", "--family", "gl", "--m", "2", "--n", "1", "--out", out}).code, 0);
  std::ifstream in(out);
  json d = json::parse(in);
  EXPECT_EQ(d["family"], "gl");
  EXPECT_EQ(d["roots"][1]["label"], "E13");
  EXPECT_EQ(d["roots"][1]["parity"], "odd");
}

TEST_F(Cli, VerifyZeroCouplingPasses) {
  const std::string spec = write("t1.json", R"({"algebra": "sl", "m": 2, "n": 0})");
  Result r = run({"verify", "--spec", spec});
  ASSERT_EQ(r.code, 0) << r.err;
  json rep = json::parse(r.out);
  EXPECT_TRUE(rep["passed"].get<bool>());
  std::set<std::string> names;
  for (const auto& c : rep["checks"]) {
    names.insert(c["check"].get<std::string>());
    EXPECT_EQ(c["status"], "exact-zero") << c.dump();
  }
  EXPECT_TRUE(names.count("cdybe") && names.count("unitarity") && names.count("zero-weight") && names.count("validate"));
  EXPECT_FALSE(names.count("limits"));
}

TEST_F(Cli, VerifyCoupledPasses) {
  const std::string spec = write("t2.json", R"({"algebra": "gl", "m": 2, "n": 1, "epsilon": "1/3",
                                                "X": [0, 2], "sign_choice": {"1": "-", "3": "-"}})");
  Result r = run({"verify", "--spec", spec, "--precision", "64", "--checks", "cdybe,mdybe,lemma,functional"});
  ASSERT_EQ(r.code, 0) << r.err;
  json rep = json::parse(r.out);
  EXPECT_EQ(rep["precision_bits"], 64);
  EXPECT_DOUBLE_EQ(rep["tolerance"].get<double>(), 1e-12);
  EXPECT_EQ(rep["checks"].size(), 4u);
}

TEST_F(Cli, VerifyReportsFailures) {
  const std::string open = write("open.json", R"js({"algebra": "gl", "m": 2, "n": 1,
                                                   "D": [{"i": 0, "j": 1, "ratfun": "(ratfun \"x2\" \"1\")"}]})js");
  Result r = run({"verify", "--spec", open});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not closed"), std::string::npos) << r.err;
  json rep = json::parse(r.out);  // the report is still written
  EXPECT_FALSE(rep["passed"].get<bool>());

  const std::string mixed = write("mixed.json", R"({"algebra": "gl", "m": 2, "n": 1, "epsilon": "1", "X": "none",
                                                     "sign_choice": {"0": "+", "1": "-", "3": "+"}})");
  Result m = run({"verify", "--spec", mixed, "--checks", "cdybe,functional", "--precision", "64"});
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.err.find("cdybe"), std::string::npos) << m.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "--spec", write("bad.json", "{ not json")}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", write("nom.json", R"({"algebra": "sl", "n": 0})")}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", write("x.json", R"({"algebra": "sl", "m": 2, "n": 0, "X": [5]})")}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", (dir_ / "missing.json").string()}).code, 2);
  const std::string t1 = write("t1.json", R"({"algebra": "sl", "m": 2, "n": 0})");
  EXPECT_EQ(run({"verify", "--spec", t1, "--checks", "cdybe,bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", t1, "--checks", "limits"}).code, 2);
  EXPECT_EQ(run({"verify", "--spec", t1, "--precision", "8"}).code, 2);
  EXPECT_EQ(run({"construct", "--spec", t1, "--at", "1,2"}).code, 2);
  EXPECT_EQ(run({"construct", "--spec", t1, "--at", "1/0"}).code, 2);
}

TEST_F(Cli, ConstructAtAPoint) {
  const std::string spec = write("t1.json", R"({"algebra": "sl", "m": 2, "n": 0, "nu": ["1/2"]})");
  Result r = run({"construct", "--spec", spec, "--at", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out);
  ASSERT_EQ(d["values"].size(), 2u);
  // phi = 1/(lambda - 1/2) at lambda = 2
  EXPECT_EQ(d["values"][0]["labels"], "E12 (x) E21");
  EXPECT_EQ(d["values"][0]["value"], "2/3");
  EXPECT_EQ(d["values"][1]["value"], "-2/3");
  EXPECT_TRUE(d["values"][0]["exact"].get<bool>());

  Result pole = run({"construct", "--spec", spec, "--at", "1/2"});
  EXPECT_EQ(pole.code, 1);
  EXPECT_NE(pole.err.find("x0 - 1/2"), std::string::npos) << pole.err;
}

TEST_F(Cli, ConstructCoupledValues) {
  const std::string spec = write("t2.json", R"({"algebra": "sl", "m": 2, "n": 0, "epsilon": "2"})");
  Result r = run({"construct", "--spec", spec, "--at", "1", "--precision", "128"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out);
  for (const auto& v : d["values"]) {
    if (v["labels"] != "E12 (x) E21") continue;
    // 1 + coth(1) with eps = 2
    EXPECT_EQ(v["value"].get<std::string>().substr(0, 16), "2.31303528549933");
    EXPECT_FALSE(v["exact"].get<bool>());
  }
  EXPECT_EQ(run({"construct", "--spec", spec, "--at", "0"}).code, 1);
}

TEST_F(Cli, SymbolicDumpHasOneCothPerRoot) {
  const std::string spec = write("t2.json", R"({"algebra": "gl", "m": 2, "n": 1, "epsilon": "1"})");
  Result r = run({"construct", "--spec", spec});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out);
  int root_terms = 0;
  std::vector<std::array<int, 2>> order;
  for (const auto& t : d["r"]) {
    order.push_back({t["indices"][0].get<int>(), t["indices"][1].get<int>()});
    const std::string c = t["coefficient"];
    std::size_t count = 0;
    for (std::size_t p = c.find("(coth"); p != std::string::npos; p = c.find("(coth", p + 1)) ++count;
    if (t["indices"][0] == t["indices"][1] || count == 0) continue;
    ++root_terms;
    EXPECT_EQ(count, 1u) << c;
  }
  EXPECT_EQ(root_terms, 6);
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
}

TEST_F(Cli, DescriptorRootsRoundTrip) {
  Result alg = run({"algebra", "--family", "gl", "--m", "2", "--n", "1"});
  json desc = json::parse(alg.out);
  json spec = {{"algebra", "gl"}, {"m", 2}, {"n", 1}, {"X", {0, 2}}, {"roots", desc["roots"]}};
  Result ok = run({"verify", "--spec", write("rt.json", spec.dump())});
  EXPECT_EQ(ok.code, 0) << ok.err;

  json shuffled = desc["roots"];
  std::swap(shuffled[0], shuffled[1]);
  spec["roots"] = shuffled;
  EXPECT_EQ(run({"verify", "--spec", write("bad.json", spec.dump())}).code, 2);
}

TEST_F(Cli, ReportsAreDeterministic) {
  const std::string spec = write("t2.json", R"({"algebra": "gl", "m": 2, "n": 1, "epsilon": "1", "nu": ["1/3", "0", "2"]})");
  std::vector<std::string> args = {"verify", "--spec", spec, "--precision", "64", "--seed", "77"};
  Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(without_timing(json::parse(a.out)), without_timing(json::parse(b.out)));
  EXPECT_EQ(json::parse(a.out)["seed"], 77);
}
