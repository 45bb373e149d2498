#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <sys/wait.h>
#include <string>

#include <doctest.h>

#include "wsp/binding.h"
#include "wsp/commands.hpp"
#include "wsp/error.hpp"
#include "wsp/point_io.hpp"

using namespace wsp;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("wsp_cli_test_" + std::to_string(std::rand()) + ".out");
  const std::string cmd = std::string(WSP_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(out);
  return r;
}

std::string binding(const std::string& request) {
  std::unique_ptr<char, decltype(&wsp_free)> res(wsp_compute_scene(request.c_str()), &wsp_free);
  return res.get();
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("command names") {
  for (const auto c : all_scene_commands()) CHECK(parse_command(to_string(c)) == c);
  CHECK_FALSE(parse_command("nope").has_value());
}

TEST_CASE("run_command fills exactly the produced structures") {
  const PointSet two({{0, 0}, {1, 0}});
  const auto st = run_command(Command::kSplitTree, two, {});
  CHECK(st.split_rects.size() == 3);
  CHECK_FALSE(st.wspd.has_value());

  const auto w = run_command(Command::kWspd, two, {});
  REQUIRE(w.wspd.has_value());
  CHECK(w.wspd->pairs.size() == 1);

  RunParams t3;
  t3.t = 3.0;
  const auto sp = run_command(Command::kSpanner, two, t3);
  CHECK(sp.wspd->s == 8.0);
  CHECK(sp.spanner->t == 3.0);
  CHECK_FALSE(sp.results.has_value());

  const PointSet three({{0, 0}, {1, 0}, {10, 0}});
  CHECK(run_command(Command::kClosestPair, three, {}).results->closest_pair == IndexPair{0, 1, 1.0});
  CHECK(run_command(Command::kAnn, three, {}).results->ann == NeighborMap{1, 0, 1});
  CHECK(run_command(Command::kAnn, three, {}).wspd->s == 4.0);
  RunParams k2;
  k2.k = 2;
  CHECK(run_command(Command::kKClosest, three, k2).results->k_closest->size() == 2);
  const auto amst = run_command(Command::kAmst, three, {});
  // The spanner links {0,1} to {2} through representative 0, so the tree
  // uses {0,2}: 1 + 10 = 11, within 2x the EMST weight of 10.
  CHECK(amst.results->amst->weight == 11.0);
  CHECK(amst.results->amst->edges.size() == 2);

  RunParams bad_k;
  bad_k.k = 4;
  CHECK_THROWS_AS(run_command(Command::kKClosest, three, bad_k), Error);
}

TEST_CASE("small verify sweep is clean") {
  const auto report = run_verify({20, 30, 5});
  CHECK(report.failures() == 0);
  REQUIRE(report.checks.size() == 6);
  for (const auto& c : report.checks) CHECK(c.runs == 20);
}

TEST_CASE("binding returns the CLI's scene") {
  const auto ps = generate(Distribution::kClusters, 25, 3);
  const auto file = write_temp("wsp_binding_board.json", write_points(ps, PointFormat::kJson));
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : ps) pts.push_back({p.x, p.y});

  const auto cli = run_cli("k-closest --k 7 --s 3 --input " + file.string());
  REQUIRE(cli.exit_code == 0);
  nlohmann::json req{{"command", "k-closest"}, {"points", pts}, {"params", {{"k", 7}, {"s", 3}}}};
  CHECK(binding(req.dump()) == cli.out);

  const auto cli_sp = run_cli("spanner --input " + file.string());
  nlohmann::json req_sp{{"command", "spanner"}, {"points", pts}};
  CHECK(binding(req_sp.dump()) == cli_sp.out);
  fs::remove(file);
}

TEST_CASE("binding errors") {
  const auto bad = nlohmann::json::parse(binding("{\"command\": \"ann\", \"points\": [[0,0]]}"));
  CHECK(bad["error"]["code"] == "NeedTwoPoints");
  const auto junk = nlohmann::json::parse(binding("{"));
  CHECK(junk["error"]["code"] == "ParseError");
  const auto unknown = nlohmann::json::parse(binding("{\"command\": \"x\", \"points\": []}"));
  CHECK(unknown["error"]["code"] == "InvalidParams");
}

TEST_CASE("CLI exit codes") {
  const auto good = write_temp("wsp_cli_good.csv", "x,y\n0,0\n1,0\n5,5\n");
  const auto dup = write_temp("wsp_cli_dup.csv", "0,0\n0,0\n");
  const auto junk = write_temp("wsp_cli_junk.csv", "0,0\nhello\n");

  CHECK(run_cli("wspd --s 2 --input " + good.string()).exit_code == 0);
  CHECK(run_cli("wspd --input " + junk.string()).exit_code == 2);
  CHECK(run_cli("wspd --input " + dup.string()).exit_code == 2);
  CHECK(run_cli("wspd --input /nonexistent/file.csv").exit_code == 2);
  CHECK(run_cli("spanner --t 1 --input " + good.string()).exit_code == 2);
  CHECK(run_cli("k-closest --k 4 --input " + good.string()).exit_code == 2);
  CHECK(run_cli("ann --s 2 --input " + good.string()).exit_code == 2);
  CHECK(run_cli("wspd --s 0 --input " + good.string()).exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("generate --dist grid --n 4 --bounds 0,0,0,0").exit_code == 2);

  const auto two = run_cli("wspd --s 2 --input " + good.string());
  CHECK(parse_scene(two.out).wspd.has_value());
  const auto again = run_cli("wspd --s 2 --input " + good.string());
  CHECK(two.out == again.out);

  const auto gen = run_cli("generate --dist uniform --n 10 --seed 7");
  CHECK(gen.exit_code == 0);
  CHECK(parse_points(gen.out).size() == 10);
  CHECK(gen.out == run_cli("generate --dist uniform --n 10 --seed 7").out);

  const auto ver = run_cli("verify --trials 5 --n 20 --seed 2");
  CHECK(ver.exit_code == 0);
  CHECK(nlohmann::json::parse(ver.out)["failures"] == 0);

  fs::remove(good);
  fs::remove(dup);
  fs::remove(junk);
}
