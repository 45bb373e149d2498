#include "wsp/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "wsp/error.hpp"
#include "wsp/oracle.hpp"
#include "wsp/point_io.hpp"
#include "wsp/proximity.hpp"
#include "wsp/spanner.hpp"
#include "wsp/wspd.hpp"

namespace wsp {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommandNames{{
    {Command::kSplitTree, "split-tree"},
    {Command::kWspd, "wspd"},
    {Command::kSpanner, "spanner"},
    {Command::kClosestPair, "closest-pair"},
    {Command::kKClosest, "k-closest"},
    {Command::kAnn, "ann"},
    {Command::kAmst, "amst"},
}};

Scene base_scene(const PointSet& ps) {
  Scene scene;
  scene.points.assign(ps.begin(), ps.end());
  return scene;
}

void add_wspd(Scene& scene, const Wspd& wspd) {
  scene.split_rects = to_scene(wspd.tree);
  scene.wspd = to_scene(wspd);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommandNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command c) {
  for (const auto& [cmd, n] : kCommandNames) {
    if (cmd == c) return n;
  }
  return "?";
}

std::vector<Command> all_scene_commands() {
  std::vector<Command> out;
  for (const auto& [c, n] : kCommandNames) out.push_back(c);
  return out;
}

Scene run_command(Command command, const PointSet& ps, const RunParams& params) {
  Scene scene = base_scene(ps);
  const double t = params.t.value_or(2.0);
  switch (command) {
    case Command::kSplitTree:
      scene.split_rects = to_scene(build_split_tree(ps));
      break;
    case Command::kWspd:
      add_wspd(scene, compute_wspd(ps, params.s.value_or(2.0)));
      break;
    case Command::kSpanner: {
      const Wspd wspd = compute_wspd(ps, separation_for_stretch(t));
      add_wspd(scene, wspd);
      scene.spanner = to_scene(build_t_spanner(wspd), t);
      break;
    }
    case Command::kClosestPair: {
      if (ps.size() < 2) throw Error(ErrorCode::kNeedTwoPoints, "closest pair needs two points");
      const Wspd wspd = compute_wspd(ps, separation_for_stretch(2.0));
      add_wspd(scene, wspd);
      scene.spanner = to_scene(build_t_spanner(wspd), 2.0);
      scene.results = Scene::Results{};
      scene.results->closest_pair = closest_pair(ps);
      break;
    }
    case Command::kKClosest: {
      const double s = params.s.value_or(kDefaultKClosestSeparation);
      auto pairs = k_closest_pairs(ps, params.k.value_or(1), s);
      add_wspd(scene, compute_wspd(ps, s));
      scene.results = Scene::Results{};
      scene.results->k_closest = std::move(pairs);
      break;
    }
    case Command::kAnn: {
      const double s = params.s.value_or(kDefaultAnnSeparation);
      auto nn = all_nearest_neighbors(ps, s);
      add_wspd(scene, compute_wspd(ps, s));
      scene.results = Scene::Results{};
      scene.results->ann = std::move(nn);
      break;
    }
    case Command::kAmst: {
      const Wspd wspd = compute_wspd(ps, separation_for_stretch(t));
      add_wspd(scene, wspd);
      const Graph spanner = build_t_spanner(wspd);
      scene.spanner = to_scene(spanner, t);
      scene.results = Scene::Results{};
      scene.results->amst = to_scene(prim_mst(spanner), t);
      break;
    }
  }
  return scene;
}

std::size_t VerifyReport::failures() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["trials"] = options.trials;
  doc["n"] = options.n;
  doc["seed"] = options.seed;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json entry{{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}};
    if (!c.first_failure.empty()) entry["first_failure"] = c.first_failure;
    list.push_back(std::move(entry));
  }
  doc["checks"] = std::move(list);
  doc["failures"] = failures();
  return doc;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n < 2) throw std::invalid_argument("verify needs --n >= 2");
  constexpr std::array kSeparations{0.5, 1.0, 2.0, 4.0, 10.0};
  constexpr std::array kStretches{1.5, 2.0, 3.0};
  constexpr std::array kKSeparations{1.0, 2.0, 8.0};
  constexpr std::array<std::size_t, 4> kKs{1, 5, 25, 0};  // 0 = all pairs
  constexpr std::array kMstStretches{1.5, 2.0};

  VerifyReport report;
  report.options = options;
  for (const char* name : {"wspd", "spanner", "closest-pair", "k-closest", "ann", "amst"}) {
    report.checks.push_back(VerifyCheck{name, 0, 0, {}});
  }
  auto record = [&](std::size_t check, bool ok, std::size_t trial, const std::string& what) {
    auto& c = report.checks[check];
    ++c.runs;
    if (!ok) {
      if (c.failures++ == 0) c.first_failure = "trial " + std::to_string(trial) + ": " + what;
    }
  };

  std::mt19937_64 rng(options.seed);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % (options.n - 1));
    const auto dist = trial % 2 == 0 ? Distribution::kUniform : Distribution::kClusters;
    const PointSet ps = generate(dist, n, rng());

    auto guarded = [&](std::size_t check, auto&& body) {
      try {
        body();
      } catch (const std::exception& e) {
        record(check, false, trial, e.what());
      }
    };

    guarded(0, [&] {
      const double s = kSeparations[trial % kSeparations.size()];
      const auto r = oracle::check_wspd(compute_wspd(ps, s));
      record(0, r.valid(), trial, "invalid WSPD at s = " + format_double(s));
    });
    guarded(1, [&] {
      const double t = kStretches[trial % kStretches.size()];
      const double d = dilation(build_t_spanner(ps, t));
      record(1, d <= t + 1e-9, trial, "dilation " + format_double(d) + " > t = " + format_double(t));
    });
    guarded(2, [&] {
      const auto got = closest_pair(ps);
      record(2, got == oracle::brute_closest_pair(ps), trial, "closest pair mismatch");
    });
    guarded(3, [&] {
      const std::size_t total = n * (n - 1) / 2;
      const std::size_t k = std::min(kKs[trial % kKs.size()] == 0 ? total : kKs[trial % kKs.size()], total);
      const double s = kKSeparations[trial % kKSeparations.size()];
      const auto got = k_closest_pairs(ps, k, s);
      const auto want = oracle::brute_k_closest(ps, k);
      bool ok = got.size() == want.size();
      for (std::size_t i = 0; ok && i < got.size(); ++i) ok = std::abs(got[i].d - want[i].d) <= 1e-12;
      record(3, ok, trial, "k-closest mismatch at k = " + std::to_string(k));
    });
    guarded(4, [&] {
      record(4, all_nearest_neighbors(ps) == oracle::brute_ann(ps), trial, "nearest neighbour mismatch");
    });
    guarded(5, [&] {
      const double t = kMstStretches[trial % kMstStretches.size()];
      const double approx = approx_mst(ps, t).weight();
      const double exact = oracle::brute_emst(ps).weight();
      const double slack = 1e-9 * exact;
      record(5, approx >= exact - slack && approx <= t * exact + slack, trial,
             "tree weight " + format_double(approx) + " vs EMST " + format_double(exact));
    });
  }
  return report;
}

}  // namespace wsp
