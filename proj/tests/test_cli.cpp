#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catbij/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "catbij");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = catbij::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("count") {
  CHECK(cli({"count", "--family", "T", "--n", "3"}).out == "5\n");
  CHECK(cli({"count", "--family", "terms", "--n", "0"}).out == "1\n");
  CHECK(cli({"count", "--family", "P", "--n", "12"}).out == "208012\n");
  const auto big = cli({"count", "--family", "S", "--n", "36"});
  CHECK(big.status == 1);
  CHECK(big.err.find("out of range") != std::string::npos);
  CHECK(cli({"count", "--family", "S", "--n", "-1"}).status == 2);
  CHECK(cli({"count", "--family", "Q", "--n", "3"}).status == 2);
  CHECK(cli({"count", "--n", "3"}).status == 2);
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
}

TEST_CASE("enum") {
  const auto terms = cli({"enum", "--family", "terms", "--n", "3"});
  CHECK(terms.status == 0);
  CHECK(terms.out == "m(m(m(E)))\nm(r(m(E)))\nr(m(m(E)))\nr(r(m(E)))\nl(r(m(E)))\n");
  CHECK(cli({"enum", "--family", "A", "--n", "2"}).out == "A2[2,2]\nA2[1,2]\n");
  CHECK(cli({"enum", "--family", "B", "--n", "1"}).out == "(.,.)\n");
  CHECK(cli({"enum", "--family", "T", "--n", "0"}).out == "~\n");
  CHECK(lines(cli({"enum", "--family", "S", "--n", "7", "--limit", "10"}).out) == 10);
  for (const char* f : {"T", "S", "A", "B", "P", "terms"})
    for (int n = 0; n <= 7; ++n) {
      const auto count = cli({"count", "--family", f, "--n", std::to_string(n)}).out;
      CHECK(std::to_string(lines(cli({"enum", "--family", f, "--n", std::to_string(n)}).out)) + "\n" == count);
    }
  CHECK(cli({"enum", "--family", "S", "--n", "40"}).status == 2);
}

TEST_CASE("map") {
  CHECK(cli({"map", "--via", "alpha", "--from", "T", "--to", "S", "--input", "M(M(*))"}).out ==
        "S3[1,1,1,3;2,1,2,2;3,1,3,1]\n");
  CHECK(cli({"map", "--via", "alpha", "--from", "S", "--to", "A", "--input", "S1[1,1,1,1]"}).out == "A1[1]\n");
  CHECK(cli({"map", "--via", "alpha", "--from", "B", "--to", "P", "--input", "(.,.)"}).out == "(())\n");
  CHECK(cli({"map", "--via", "beta", "--input", "L(R(*))"}).out == "S3[1,3,1,3;1,1,2,2;3,1,3,1]\n");
  CHECK(cli({"map", "--via", "beta", "--input", "S3[1,1,2,2;1,3,1,3;3,1,3,1]"}).out == "L(R(*))\n");
  CHECK(cli({"map", "--via", "beta", "--from", "S", "--to", "T", "--input", "S1[1,1,1,1]"}).out == "*\n");
  CHECK(cli({"map", "--via", "beta", "--from", "A", "--to", "S", "--input", "A1[1]"}).status == 2);
  CHECK(cli({"map", "--via", "alpha", "--to", "S", "--input", "*"}).status == 2);
  CHECK(cli({"map", "--via", "gamma", "--from", "T", "--to", "S", "--input", "*"}).status == 2);

  const auto bad = cli({"map", "--via", "alpha", "--from", "T", "--to", "S", "--input", "M(*"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("byte 3") != std::string::npos);
  const auto invalid = cli({"map", "--via", "alpha", "--from", "A", "--to", "S", "--input", "A3[3,1,3]"});
  CHECK(invalid.status == 1);
  CHECK(invalid.err.find("rend[1]=1 not > 1") != std::string::npos);
}

TEST_CASE("term") {
  CHECK(cli({"term", "--family", "A", "--input", "A3[2,2,3]"}).out == "l(r(m(E)))\n");
  CHECK(cli({"term", "--family", "B", "--input", "."}).out == "E\n");
  CHECK(cli({"term", "--family", "S", "--input", "S2[1,1,1,1]"}).status == 1);
}

TEST_CASE("render") {
  CHECK(cli({"render", "--family", "S", "--input", "S1[1,1,1,1]", "--mode", "ascii"}).out == "+---+\n|   |\n+---+\n");
  const std::string path = "test_cli_render.svg";
  std::remove(path.c_str());
  const auto r = cli({"render", "--family", "A", "--input", "A2[2,2]", "--mode", "svg", "--out", path});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == cli({"render", "--family", "A", "--input", "A2[2,2]", "--mode", "svg"}).out);
  std::remove(path.c_str());
  CHECK(cli({"render", "--family", "S", "--input", "S1[1,1,1,1]", "--mode", "png"}).status == 2);
}

TEST_CASE("verify") {
  const auto one = cli({"verify", "--max-n", "5"});
  CHECK(one.status == 0);
  CHECK(one.out.find("CHECK alpha_vs_beta n=3 PASS") != std::string::npos);
  CHECK(one.out.find(" FAIL ") == std::string::npos);
  CHECK(cli({"verify", "--max-n", "5", "--jobs", "3"}).out == one.out);
  CHECK(cli({"verify", "--jobs", "0"}).status == 2);
}
