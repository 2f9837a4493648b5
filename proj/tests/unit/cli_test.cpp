#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "eseq/exact.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = eseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + sep.size()) {
    parts.push_back(s.substr(start, pos - start));
  }
  parts.push_back(s.substr(start));
  return parts;
}

TEST(Cli, TableJsonlMatchesGoldenFile) {
  std::ifstream golden(std::string(ESEQ_GOLDEN_DIR) + "/table_max20.jsonl", std::ios::binary);
  ASSERT_TRUE(golden) << "golden file missing";
  std::stringstream expected;
  expected << golden.rdbuf();
  const Result r = run({"table", "--max", "20", "--format", "jsonl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, expected.str());
}

TEST(Cli, TableRowExamples) {
  const Result r = run({"table", "--max", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3], "3  1/1512  2^-3 \xC2\xB7 3^-3 \xC2\xB7 7^-1");

  const Result zero = run({"table", "--max", "0"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_EQ(zero.out, "0  1\n");
}

TEST(Cli, TextAndJsonlCarryTheSameData) {
  const auto text = lines(run({"table", "--max", "12"}).out);
  const auto json = lines(run({"table", "--max", "12", "--format", "jsonl"}).out);
  ASSERT_EQ(text.size(), json.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto cols = split(text[i], "  ");
    const Json rec = Json::parse(json[i]);
    ASSERT_GE(cols.size(), 2u);
    EXPECT_EQ(std::stoul(cols[0]), rec["l"].get<std::size_t>());
    EXPECT_EQ(cols[1], rec["epsilon"].get<std::string>());

    std::vector<std::string> from_json;
    if (rec["sign"].get<int>() < 0) from_json.push_back("-1");
    for (const Json& f : rec["factors"]) {
      std::string t = f["prime"].get<std::string>();
      if (f["exp"].get<long>() != 1) t += "^" + std::to_string(f["exp"].get<long>());
      from_json.push_back(t);
    }
    const std::vector<std::string> from_text =
        cols.size() > 2 ? split(cols[2], " \xC2\xB7 ") : std::vector<std::string>{};
    EXPECT_EQ(from_text, from_json) << text[i];
  }
}

TEST(Cli, JsonlRationalsRoundTripThroughParser) {
  for (const std::string& line : lines(run({"table", "--max", "24", "--format", "jsonl"}).out)) {
    const Json rec = Json::parse(line);
    ASSERT_TRUE(rec["epsilon"].is_string());
    const std::string s = rec["epsilon"].get<std::string>();
    const eseq::Rational q = eseq::Rational::parse(s);
    EXPECT_EQ(q.str(), s);
    EXPECT_EQ(q.sign(), rec["sign"].get<int>());
  }
}

TEST(Cli, MethodsGiveTheSameTable) {
  const std::string series = run({"table", "--max", "15", "--method", "series"}).out;
  EXPECT_EQ(run({"table", "--max", "15", "--method", "recur"}).out, series);
  EXPECT_EQ(run({"table", "--max", "15", "--method", "compsum"}).out, series);
}

TEST(Cli, ValueAndValuation) {
  EXPECT_EQ(run({"value", "--l", "4"}).out, "-23/226800\n");
  EXPECT_EQ(run({"value", "--l", "4", "--method", "compsum"}).out, "-23/226800\n");
  EXPECT_EQ(run({"valuation", "--p", "2", "--l", "7"}).out, "-7\n");
  // l = 13 is one of the indices where v5 exceeds -floor(l/2) = -6.
  EXPECT_EQ(run({"valuation", "--p", "5", "--l", "13"}).out, "-5\n");
  EXPECT_EQ(run({"valuation", "--p", "4", "--l", "3"}).code, 2);
}

TEST(Cli, Factor) {
  EXPECT_EQ(run({"factor", "--", "-8/27"}).out, "-1 \xC2\xB7 2^3 \xC2\xB7 3^-3\n");
  EXPECT_EQ(run({"factor", "1/6"}).out, "2^-1 \xC2\xB7 3^-1\n");
  EXPECT_EQ(run({"factor", "--l", "4"}).out,
            "-1 \xC2\xB7 2^-4 \xC2\xB7 3^-4 \xC2\xB7 5^-2 \xC2\xB7 7^-1 \xC2\xB7 23\n");
  EXPECT_EQ(run({"factor", "0"}).code, 2);
  EXPECT_EQ(run({"factor", "1/"}).code, 2);
  EXPECT_EQ(run({"factor"}).code, 2);
}

TEST(Cli, GaugeCommands) {
  EXPECT_EQ(run({"dprime", "--p", "2", "--k", "12"}).out, "2\n");
  EXPECT_EQ(run({"antypes", "--n", "2"}).out, "12\n");
  const Result b = run({"bounds", "--p", "3", "--k", "27"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("lower=3 upper=3"), std::string::npos);
  EXPECT_EQ(b.out.find("note:"), std::string::npos);

  const Result five = run({"bounds", "--p", "5", "--k", "25"});
  EXPECT_EQ(five.code, 0);
  EXPECT_NE(five.out.find("note: scanned d'=5"), std::string::npos);

  const auto rows = lines(run({"antypes", "--max", "3"}).out);
  EXPECT_EQ(rows, (std::vector<std::string>{"1  2", "2  12", "3  32"}));
  const Result logc = run({"antypes", "--max", "40", "--log-check"});
  EXPECT_EQ(logc.code, 0);
  EXPECT_EQ(logc.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  const Result zero = run({"dprime", "--p", "2", "--k", "0"});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("infinite"), std::string::npos);
  EXPECT_EQ(run({"bounds", "--p", "3", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"dprime", "--p", "6", "--k", "5"}).code, 2);
  EXPECT_EQ(run({"dprime", "--p", "2", "--k", "abc"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"table", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"antypes", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifySuites) {
  const Result v2 = run({"verify", "--suite", "v2", "--max", "100"});
  EXPECT_EQ(v2.code, 0);
  const auto v2_lines = lines(v2.out);
  ASSERT_EQ(v2_lines.size(), 101u);
  EXPECT_EQ(v2_lines.back(), "summary: 100 passed, 0 failed");

  const Result v5 = run({"verify", "--suite", "v5", "--max", "100"});
  EXPECT_EQ(v5.code, 0);
  for (const char* l : {"l=3 ", "l=13 ", "l=93 "}) {
    bool found = false;
    for (const std::string& line : lines(v5.out)) {
      found = found || (line.find("exceptional") != std::string::npos && line.find(l) != std::string::npos);
    }
    EXPECT_TRUE(found) << l;
  }

  const Result cong = run({"verify", "--suite", "congruence", "--max", "40"});
  EXPECT_EQ(cong.code, 0);
  EXPECT_NE(cong.out.find("p=5 n=1  target=-1/30, v(diff)=0"), std::string::npos);

  for (const char* suite : {"v3", "vp", "series", "identity", "gauge"}) {
    EXPECT_EQ(run({"verify", "--suite", suite, "--max", "30"}).code, 0) << suite;
  }
}

TEST(Cli, VerifyJsonlRecords) {
  const auto recs = lines(run({"verify", "--suite", "v3", "--max", "5", "--format", "jsonl"}).out);
  ASSERT_EQ(recs.size(), 6u);
  const Json first = Json::parse(recs[0]);
  EXPECT_EQ(first["suite"], "v3");
  EXPECT_EQ(first["instance"], "l=1");
  EXPECT_EQ(first["pass"], true);
  const Json summary = Json::parse(recs.back());
  EXPECT_EQ(summary["passed"], 5);
  EXPECT_EQ(summary["failed"], 0);
}

}  // namespace
