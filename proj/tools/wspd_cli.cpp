// Command-line front end: generate point sets, run the algorithms, export
// scenes for the viewer, and run the oracle verification sweep.
//
// Exit codes: 0 ok, 2 bad input or parameters, 3 internal invariant violated.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wsp/commands.hpp"
#include "wsp/error.hpp"
#include "wsp/point_io.hpp"
#include "wsp/scene.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int exit_code_for(wsp::ErrorCode code) {
  switch (code) {
    case wsp::ErrorCode::kInvariantViolation:
    case wsp::ErrorCode::kDisconnectedGraph:
    case wsp::ErrorCode::kInvalidNode:
      return kExitInternal;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-separated pair decompositions and their proximity applications"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  wsp::RunParams params;
  double s = 0.0;
  double t = 0.0;
  std::size_t k = 1;

  // generate
  auto* gen = app.add_subcommand("generate", "Write a random or grid point set");
  std::string dist_name = "uniform";
  std::size_t n = 50;
  std::vector<double> bounds{0.0, 1.0, 0.0, 1.0};
  gen->add_option("--dist", dist_name, "uniform | grid | clusters")
      ->check(CLI::IsMember({"uniform", "grid", "clusters"}));
  gen->add_option("--n", n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Random seed (ignored by grid)");
  gen->add_option("--bounds", bounds, "xmin xmax ymin ymax")->expected(4)->delimiter(',');
  gen->add_option("--output", output, "Output path; .csv writes CSV, anything else JSON");

  // scene commands
  std::vector<std::pair<CLI::App*, wsp::Command>> scene_cmds;
  for (const auto command : wsp::all_scene_commands()) {
    auto* sub = app.add_subcommand(std::string(wsp::to_string(command)));
    sub->add_option("--input", input, "Point file (CSV or JSON); '-' for stdin")->required();
    sub->add_option("--output", output, "Scene JSON path (default stdout)");
    sub->add_option("--seed", seed, "Accepted for uniformity; algorithms are deterministic");
    switch (command) {
      case wsp::Command::kSplitTree:
        sub->description("Split tree rectangles");
        break;
      case wsp::Command::kWspd:
        sub->description("Well-separated pair decomposition");
        sub->add_option("--s", s, "Separation ratio (default 2)");
        break;
      case wsp::Command::kSpanner:
        sub->description("t-spanner from a WSPD at s = 4(t+1)/(t-1)");
        sub->add_option("--t", t, "Stretch factor > 1 (default 2)");
        break;
      case wsp::Command::kClosestPair:
        sub->description("Closest pair via the 2-spanner");
        break;
      case wsp::Command::kKClosest:
        sub->description("k closest pairs");
        sub->add_option("--k", k, "Number of pairs (default 1)");
        sub->add_option("--s", s, "Separation ratio (default 2)");
        break;
      case wsp::Command::kAnn:
        sub->description("All nearest neighbours");
        sub->add_option("--s", s, "Separation ratio > 2 (default 4)");
        break;
      case wsp::Command::kAmst:
        sub->description("t-approximate minimum spanning tree");
        sub->add_option("--t", t, "Stretch factor > 1 (default 2)");
        break;
    }
    scene_cmds.emplace_back(sub, command);
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Randomized comparison against brute-force oracles");
  wsp::VerifyOptions vopts;
  verify->add_option("--trials", vopts.trials, "Number of random boards");
  verify->add_option("--n", vopts.n, "Largest board size (sizes drawn from [2, n])");
  verify->add_option("--seed", vopts.seed, "Sweep seed");
  verify->add_option("--output", output, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      const wsp::Rect box{bounds[0], bounds[1], bounds[2], bounds[3]};
      const auto ps = wsp::generate(wsp::parse_distribution(dist_name), n, seed, box);
      const auto format = ends_with(output, ".csv") ? wsp::PointFormat::kCsv : wsp::PointFormat::kJson;
      write_output(output, wsp::write_points(ps, format));
      return 0;
    }
    if (verify->parsed()) {
      const auto report = wsp::run_verify(vopts);
      write_output(output, report.to_json().dump(2) + "\n");
      return report.failures() == 0 ? 0 : kExitInternal;
    }
    for (const auto& [sub, command] : scene_cmds) {
      if (!sub->parsed()) continue;
      auto given = [&](const char* flag) {
        const auto* opt = sub->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
      };
      if (given("--s")) params.s = s;
      if (given("--t")) params.t = t;
      if (given("--k")) params.k = k;
      const auto ps = wsp::parse_points(read_input(input));
      write_output(output, wsp::serialize(wsp::run_command(command, ps, params)));
      return 0;
    }
  } catch (const wsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
