#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fishburn/tri_matrix.hpp"
#include "golden.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fishburn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fishburn::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fishburn_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli verify") {
  const Outcome all = run({"verify", "--identity", "all", "--max-size", "4"});
  CHECK(all.code == 0);
  CHECK(contains(all.out, "# 20/20 checks passed"));
  CHECK_FALSE(contains(all.out, "FAIL"));

  const Outcome eq3 = run({"verify", "--identity", "EQ3", "--max-size", "1"});
  CHECK(eq3.code == 0);
  CHECK(contains(eq3.out, "2 = 2·1"));

  CHECK(run({"verify", "--identity", "EQ1", "--max-size", "0"}).code == 2);
  CHECK(run({"verify", "--identity", "EQ9", "--max-size", "2"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--max-size", "3"}).out == run({"verify", "--max-size", "3"}).out);
}

TEST_CASE("cli count") {
  const Outcome rm = run({"count", "--family", "RM", "--size", "2", "--format", "csv"});
  CHECK(rm.code == 0);
  CHECK(rm.out == "family,n,k,p,parity,count\nRM,2,1,1,ANY,1\nRM,2,2,1,ANY,1\nRM,2,2,2,ANY,1\n");
  const Outcome sd = run({"count", "--family", "SELF_DUAL", "--size", "1", "--format", "json"});
  CHECK(sd.code == 0);
  CHECK(contains(sd.out, "\"total\": 2"));
  CHECK(contains(run({"count", "--family", "SM", "--size", "1"}).out, "SM,1,"));
  CHECK(run({"count", "--family", "NOPE", "--size", "1"}).code == 2);
  CHECK(run({"count", "--family", "SUPER", "--size", "1"}).code == 2);
  CHECK(run({"count", "--family", "RM", "--size", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("cli map") {
  const std::string a6 = write_temp("a6", fishburn::format_matrix(golden::A6));
  const Outcome beta = run({"map", "--bijection", "BETA", "--input", a6, "--trace"});
  CHECK(beta.code == 0);
  CHECK(contains(beta.out, "# A(1)\n" + fishburn::format_matrix(golden::A6_step1)));
  CHECK(contains(beta.out, "# A(2)\n" + fishburn::format_matrix(golden::A6_step2)));
  CHECK(contains(beta.out, "# B\n" + fishburn::format_matrix(golden::B6)));
  CHECK(contains(beta.out, "# A'\n" + fishburn::format_matrix(golden::A6_prime)));

  const std::string a5 = write_temp("a5", fishburn::format_matrix(golden::A5));
  const Outcome alpha = run({"map", "--bijection", "ALPHA", "--input", a5});
  CHECK(alpha.code == 0);
  CHECK(fishburn::parse_matrix(alpha.out) == golden::S5);

  // Output pipes back in as input.
  const std::string s5 = write_temp("s5", alpha.out);
  CHECK(fishburn::parse_matrix(run({"map", "--bijection", "ALPHA_INV", "--input", s5}).out) == golden::A5);

  const Outcome chain = run({"map", "--bijection", "CHAIN", "--input", a5});
  CHECK(chain.code == 0);
  CHECK(contains(chain.out, "# flag 0\n"));

  const Outcome bad = run({"map", "--bijection", "ALPHA", "--input", a6});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "NotSelfDual"));
  CHECK(contains(bad.err, "(1,1)"));

  const std::string junk = write_temp("junk", "2\n1 0\n1 1\n");
  CHECK(run({"map", "--bijection", "ALPHA", "--input", junk}).code == 2);
  CHECK(run({"map", "--bijection", "GAMMA", "--input", a5}).code == 2);
  CHECK(run({"map", "--bijection", "ALPHA", "--input", "/nonexistent/file"}).code == 2);
}

TEST_CASE("cli check") {
  const std::string a6 = write_temp("a6", fishburn::format_matrix(golden::A6));
  const Outcome sm = run({"check", "--family", "SM", "--input", a6});
  CHECK(sm.code == 0);
  CHECK(contains(sm.out, "family SM: member"));
  CHECK(contains(sm.out, "first_row_sum 3\n"));
  CHECK(contains(sm.out, "center_col_sum 1\n"));

  const std::string ap = write_temp("ap", fishburn::format_matrix(golden::A6_prime));
  const Outcome b = run({"check", "--family", "B", "--input", ap});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "first_row_sum 1\n"));
  CHECK(contains(b.out, "last_col_sum 3\n"));

  const std::string z = write_temp("z", "2\n0 0\n0 1\n");
  const Outcome rm = run({"check", "--family", "RM", "--input", z});
  CHECK(rm.code == 1);
  CHECK(contains(rm.out, "non-member (row 1 zero)"));
  CHECK(run({"check", "--family", "RM", "--input", write_temp("bad", "x\n")}).code == 2);
}

TEST_CASE("cli poset") {
  const std::string p = write_temp("p", "2\n1 2\n");
  const Outcome r = run({"poset", "--input", p});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "interval_order yes"));
  CHECK(contains(r.out, "reduced_size 1"));
  const std::string q = write_temp("q", "4\n1 2\n3 4\n");
  CHECK(run({"poset", "--input", q}).code == 1);
}

TEST_CASE("cli help and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
