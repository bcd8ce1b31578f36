#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace
{

struct Run
{
  int status = -1;
  std::string out;
};

Run run(const std::string &args, const std::string &env = "")
{
  const std::string cmd = env + " " LIEMOD_CLI " " + args + " 2>&1";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
    r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json report(const std::string &args, const std::string &env = "")
{
  const Run r = run(args, env);
  INFO(r.out);
  REQUIRE(r.status == 0);
  return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("sl2 summands")
{
  const auto j = report("sl2 modality --summands 0,0,0");
  REQUIRE(j["items"].size() == 1);
  CHECK(j["items"][0]["computed"] == 3);
  CHECK(j["items"][0]["expected"] == 3);
  CHECK(j["passed"] == true);
}

TEST_CASE("cells of A3")
{
  const auto j = report("cells count --type A3");
  CHECK(j["items"][0]["computed"] == 15);
}

TEST_CASE("third table")
{
  const auto j = report("tables verify --list m3");
  CHECK(j["items"].size() == 8);
  CHECK(j["passed"] == true);
  for (const auto &it : j["items"])
    CHECK(it["computed"] == 2);
}

TEST_CASE("reports are reproducible apart from the timestamp")
{
  auto a = report("tables verify --list m1 --rank-cutoff 5");
  auto b = report("tables verify --list m1 --rank-cutoff 5");
  CHECK(a.contains("timestamp"));
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("seed from the environment")
{
  const auto j = report("--seed 5 exmo --n 3 --d 2", "MODALITY_SEED=77");
  CHECK(j["config"]["seed"] == 77);
  CHECK(j["items"][0]["seed"] == 77);
}

TEST_CASE("csv output")
{
  const Run r = run("--format csv grading rank --type A2 --m inf --labels 1,0");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("id,computed,expected,match,", 0) == 0);
  CHECK(r.out.find("\"grading:A2 m=inf labels=1,0\",0,0,true") != std::string::npos);
}

TEST_CASE("output file")
{
  const std::string path = "cli_test_report.json";
  const Run r = run("packets enum --sln 3 --output " + path);
  CHECK(r.status == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["items"].size() == 7);
  std::remove(path.c_str());
}

TEST_CASE("ceiling exceeded is skipped, not failed")
{
  const Run r = run("--build-ceiling 20 rep modality --type E6 --weight 1,0,0,0,0,0");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"skipped\": true") != std::string::npos);
}

TEST_CASE("usage errors")
{
  CHECK(run("frobnicate").status != 0);
  CHECK(run("tables verify --list m9").status != 0);
  CHECK(run("sl2 modality --summands 1 --bogus").status != 0);
  CHECK(run("").status != 0);
  CHECK(run("rep modality --type Q3 --weight 1").status != 0);
}
