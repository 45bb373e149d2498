#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsp/geometry.hpp"
#include "wsp/proximity.hpp"
#include "wsp/spanner.hpp"
#include "wsp/split_tree.hpp"
#include "wsp/wspd.hpp"

namespace wsp {

inline constexpr int kSceneSchemaVersion = 1;

/// Everything drawable for one board, in index form. This is the wire format
/// shared by the CLI and the browser front end.
struct Scene {
  struct SceneRect {
    NodeId node_id = kNoNode;
    int depth = 0;
    Rect rect;
    friend bool operator==(const SceneRect&, const SceneRect&) = default;
  };
  struct ScenePair {
    std::vector<std::size_t> a_ids;
    std::vector<std::size_t> b_ids;
    Ball ball_a;
    Ball ball_b;
    double gap = 0.0;
    friend bool operator==(const ScenePair&, const ScenePair&) = default;
  };
  struct SceneWspd {
    double s = 0.0;
    std::vector<ScenePair> pairs;
    friend bool operator==(const SceneWspd&, const SceneWspd&) = default;
  };
  struct SceneSpanner {
    double t = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    friend bool operator==(const SceneSpanner&, const SceneSpanner&) = default;
  };
  struct SceneTree {
    double t = 0.0;
    double weight = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    friend bool operator==(const SceneTree&, const SceneTree&) = default;
  };
  struct Results {
    std::optional<IndexPair> closest_pair;
    std::optional<std::vector<IndexPair>> k_closest;
    std::optional<NeighborMap> ann;
    std::optional<SceneTree> amst;
    friend bool operator==(const Results&, const Results&) = default;
  };

  std::vector<Point2> points;
  std::vector<SceneRect> split_rects;
  std::optional<SceneWspd> wspd;
  std::optional<SceneSpanner> spanner;
  std::optional<Results> results;

  friend bool operator==(const Scene&, const Scene&) = default;
};

Scene::SceneWspd to_scene(const Wspd& wspd);
std::vector<Scene::SceneRect> to_scene(const SplitTree& tree);
Scene::SceneSpanner to_scene(const Graph& spanner, double t);
Scene::SceneTree to_scene(const Tree& tree, double t);

nlohmann::ordered_json to_json(const Scene& scene);
/// Throws std::invalid_argument on a malformed document or an index that
/// does not refer to a point.
Scene scene_from_json(const nlohmann::ordered_json& doc);

/// Serialized form: two-space indented JSON, trailing newline, shortest
/// round-trip decimals.
std::string serialize(const Scene& scene);
Scene parse_scene(const std::string& text);

}  // namespace wsp
