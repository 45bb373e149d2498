#include "wsp/scene.hpp"

#include <stdexcept>
#include <string>

namespace wsp {

using nlohmann::ordered_json;

namespace {

ordered_json ball_json(const Ball& b) { return {{"cx", b.cx}, {"cy", b.cy}, {"r", b.radius}}; }

Ball ball_from(const ordered_json& j) {
  return {j.at("cx").get<double>(), j.at("cy").get<double>(), j.at("r").get<double>()};
}

ordered_json pair_json(const IndexPair& p) { return {{"i", p.i}, {"j", p.j}, {"d", p.d}}; }

IndexPair index_pair_from(const ordered_json& j) {
  return {j.at("i").get<std::size_t>(), j.at("j").get<std::size_t>(), j.at("d").get<double>()};
}

ordered_json edges_json(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto out = ordered_json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edges_from(const ordered_json& j) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [i, j]");
    out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return out;
}

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw std::invalid_argument("index " + std::to_string(i) + " refers to no point (n = " +
                                std::to_string(n) + ")");
  }
}

void check_indices(const Scene& scene) {
  const std::size_t n = scene.points.size();
  auto edges = [&](const auto& list) {
    for (const auto& [u, v] : list) {
      check_index(u, n);
      check_index(v, n);
    }
  };
  if (scene.wspd) {
    for (const auto& p : scene.wspd->pairs) {
      for (std::size_t i : p.a_ids) check_index(i, n);
      for (std::size_t i : p.b_ids) check_index(i, n);
    }
  }
  if (scene.spanner) edges(scene.spanner->edges);
  if (scene.results) {
    const auto& r = *scene.results;
    if (r.closest_pair) {
      check_index(r.closest_pair->i, n);
      check_index(r.closest_pair->j, n);
    }
    if (r.k_closest) {
      for (const auto& p : *r.k_closest) {
        check_index(p.i, n);
        check_index(p.j, n);
      }
    }
    if (r.ann) {
      if (r.ann->size() != n) throw std::invalid_argument("ann must list one neighbour per point");
      for (std::size_t q : *r.ann) check_index(q, n);
    }
    if (r.amst) edges(r.amst->edges);
  }
}

}  // namespace

std::vector<Scene::SceneRect> to_scene(const SplitTree& tree) {
  std::vector<Scene::SceneRect> out;
  out.reserve(tree.node_count());
  for (const auto& n : tree.nodes()) out.push_back({n.id, n.depth, n.rect});
  return out;
}

Scene::SceneWspd to_scene(const Wspd& wspd) {
  Scene::SceneWspd out;
  out.s = wspd.s;
  out.pairs.reserve(wspd.size());
  for (const auto& p : wspd.pairs) {
    out.pairs.push_back({wspd.tree.node(p.a).point_indices, wspd.tree.node(p.b).point_indices,
                         p.ball_a, p.ball_b, p.gap});
  }
  return out;
}

Scene::SceneSpanner to_scene(const Graph& spanner, double t) {
  Scene::SceneSpanner out;
  out.t = t;
  for (const auto& e : spanner.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

Scene::SceneTree to_scene(const Tree& tree, double t) {
  Scene::SceneTree out;
  out.t = t;
  out.weight = tree.weight();
  for (const auto& e : tree.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

ordered_json to_json(const Scene& scene) {
  ordered_json doc;
  doc["schema"] = kSceneSchemaVersion;

  auto points = ordered_json::array();
  for (std::size_t i = 0; i < scene.points.size(); ++i) {
    points.push_back({{"id", i}, {"x", scene.points[i].x}, {"y", scene.points[i].y}});
  }
  doc["points"] = std::move(points);

  auto rects = ordered_json::array();
  for (const auto& r : scene.split_rects) {
    rects.push_back({{"node_id", r.node_id},
                     {"depth", r.depth},
                     {"xmin", r.rect.xmin},
                     {"xmax", r.rect.xmax},
                     {"ymin", r.rect.ymin},
                     {"ymax", r.rect.ymax}});
  }
  doc["split_rects"] = std::move(rects);

  if (scene.wspd) {
    auto pairs = ordered_json::array();
    for (const auto& p : scene.wspd->pairs) {
      pairs.push_back({{"a_ids", p.a_ids},
                       {"b_ids", p.b_ids},
                       {"ball_a", ball_json(p.ball_a)},
                       {"ball_b", ball_json(p.ball_b)},
                       {"gap", p.gap}});
    }
    doc["wspd"] = {{"s", scene.wspd->s}, {"m", scene.wspd->pairs.size()}, {"pairs", std::move(pairs)}};
  }

  if (scene.spanner) {
    doc["spanner"] = {{"t", scene.spanner->t}, {"edges", edges_json(scene.spanner->edges)}};
  }

  if (scene.results) {
    const auto& r = *scene.results;
    ordered_json res = ordered_json::object();
    if (r.closest_pair) res["closest_pair"] = pair_json(*r.closest_pair);
    if (r.k_closest) {
      auto list = ordered_json::array();
      for (const auto& p : *r.k_closest) list.push_back(pair_json(p));
      res["k_closest"] = std::move(list);
    }
    if (r.ann) res["ann"] = *r.ann;
    if (r.amst) {
      res["amst"] = {{"t", r.amst->t}, {"weight", r.amst->weight}, {"edges", edges_json(r.amst->edges)}};
    }
    doc["results"] = std::move(res);
  }
  return doc;
}

Scene scene_from_json(const ordered_json& doc) {
  try {
    if (doc.at("schema").get<int>() != kSceneSchemaVersion) {
      throw std::invalid_argument("unsupported scene schema");
    }
    Scene scene;
    const auto& points = doc.at("points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      if (p.at("id").get<std::size_t>() != i) throw std::invalid_argument("point ids must be 0..n-1");
      scene.points.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
    }
    for (const auto& r : doc.at("split_rects")) {
      scene.split_rects.push_back({r.at("node_id").get<NodeId>(),
                                   r.at("depth").get<int>(),
                                   {r.at("xmin").get<double>(), r.at("xmax").get<double>(),
                                    r.at("ymin").get<double>(), r.at("ymax").get<double>()}});
    }
    if (doc.contains("wspd")) {
      const auto& w = doc["wspd"];
      Scene::SceneWspd sw;
      sw.s = w.at("s").get<double>();
      for (const auto& p : w.at("pairs")) {
        sw.pairs.push_back({p.at("a_ids").get<std::vector<std::size_t>>(),
                            p.at("b_ids").get<std::vector<std::size_t>>(), ball_from(p.at("ball_a")),
                            ball_from(p.at("ball_b")), p.at("gap").get<double>()});
      }
      if (w.contains("m") && w["m"].get<std::size_t>() != sw.pairs.size()) {
        throw std::invalid_argument("wspd.m disagrees with the pair list");
      }
      scene.wspd = std::move(sw);
    }
    if (doc.contains("spanner")) {
      const auto& sp = doc["spanner"];
      scene.spanner = Scene::SceneSpanner{sp.at("t").get<double>(), edges_from(sp.at("edges"))};
    }
    if (doc.contains("results")) {
      const auto& r = doc["results"];
      Scene::Results res;
      if (r.contains("closest_pair")) res.closest_pair = index_pair_from(r["closest_pair"]);
      if (r.contains("k_closest")) {
        std::vector<IndexPair> list;
        for (const auto& p : r["k_closest"]) list.push_back(index_pair_from(p));
        res.k_closest = std::move(list);
      }
      if (r.contains("ann")) res.ann = r["ann"].get<NeighborMap>();
      if (r.contains("amst")) {
        const auto& a = r["amst"];
        res.amst = Scene::SceneTree{a.at("t").get<double>(), a.at("weight").get<double>(),
                                    edges_from(a.at("edges"))};
      }
      scene.results = std::move(res);
    }
    check_indices(scene);
    return scene;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed scene: ") + e.what());
  }
}

std::string serialize(const Scene& scene) { return to_json(scene).dump(2) + "\n"; }

Scene parse_scene(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scene is not JSON: ") + e.what());
  }
  return scene_from_json(doc);
}

}  // namespace wsp
