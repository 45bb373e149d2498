#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsp/geometry.hpp"
#include "wsp/scene.hpp"

namespace wsp {

enum class Command { kSplitTree, kWspd, kSpanner, kClosestPair, kKClosest, kAnn, kAmst };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);
std::vector<Command> all_scene_commands();

/// Unset values fall back to per-command defaults: s = 2 (wspd, k-closest),
/// s = 4 (ann), t = 2, k = 1.
struct RunParams {
  std::optional<double> s;
  std::optional<double> t;
  std::optional<std::size_t> k;
};

/// Runs one algorithm and packs exactly the structures it produces into a
/// Scene. Throws wsp::Error for invalid parameters.
Scene run_command(Command command, const PointSet& ps, const RunParams& params);

struct VerifyOptions {
  std::size_t trials = 100;
  std::size_t n = 50;  // trial sizes drawn from [2, n]
  std::uint64_t seed = 1;
};

struct VerifyCheck {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;
};

/// Randomized sweep comparing every algorithm against its brute-force
/// oracle (plus the spanner stretch bound).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace wsp
