#include "wsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "wsp/error.hpp"

namespace wsp::oracle {

namespace {

void need_two(const PointSet& ps) {
  if (ps.size() < 2) throw Error(ErrorCode::kNeedTwoPoints, "oracle needs two points");
}

bool before(const IndexPair& a, const IndexPair& b) {
  return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
}

std::vector<Point2> gather(const PointSet& ps, std::span<const std::size_t> idx) {
  std::vector<Point2> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(ps[i]);
  return out;
}

}  // namespace

IndexPair brute_closest_pair(const PointSet& ps) {
  need_two(ps);
  IndexPair best{0, 1, dist(ps[0], ps[1])};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const IndexPair c{i, j, dist(ps[i], ps[j])};
      if (before(c, best)) best = c;
    }
  }
  return best;
}

std::vector<IndexPair> brute_k_closest(const PointSet& ps, std::size_t k) {
  need_two(ps);
  const std::size_t total = ps.size() * (ps.size() - 1) / 2;
  if (k < 1 || k > total) throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(k));
  std::vector<IndexPair> all;
  all.reserve(total);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) all.push_back({i, j, dist(ps[i], ps[j])});
  }
  std::sort(all.begin(), all.end(), before);
  all.resize(k);
  return all;
}

NeighborMap brute_ann(const PointSet& ps) {
  need_two(ps);
  NeighborMap nn(ps.size());
  for (std::size_t p = 0; p < ps.size(); ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < ps.size(); ++q) {
      if (q == p) continue;
      const double d = dist(ps[p], ps[q]);
      if (d < best) {
        best = d;
        nn[p] = q;
      }
    }
  }
  return nn;
}

Tree brute_emst(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n == 0) throw Error(ErrorCode::kEmptyPointSet, "EMST of no points");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // Best known connection of every outside vertex: (weight, lo, hi).
  std::vector<std::tuple<double, std::size_t, std::size_t>> best(
      n, {std::numeric_limits<double>::infinity(), kNone, kNone});
  std::vector<bool> inside(n, false);
  Graph tree(ps);

  std::size_t current = 0;
  for (std::size_t step = 0; step < n; ++step) {
    inside[current] = true;
    if (step > 0) {
      const auto& [w, lo, hi] = best[current];
      tree.add_edge(lo, hi);
    }
    std::size_t next = kNone;
    for (std::size_t v = 0; v < n; ++v) {
      if (inside[v]) continue;
      const std::tuple<double, std::size_t, std::size_t> offer{
          dist(ps[std::min(v, current)], ps[std::max(v, current)]), std::min(v, current),
          std::max(v, current)};
      if (offer < best[v]) best[v] = offer;
      if (next == kNone || best[v] < best[next]) next = v;
    }
    if (next == kNone) break;
    current = next;
  }
  return Tree(std::move(tree));
}

double exhaustive_mst_weight(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0.0;
  if (n == 2) return g.has_edge(0, 1) ? dist(g.points()[0], g.points()[1]) : std::numeric_limits<double>::infinity();

  std::vector<double> w(n * n, std::numeric_limits<double>::infinity());
  for (const auto& e : g.edges()) {
    w[e.u * n + e.v] = e.weight;
    w[e.v * n + e.u] = e.weight;
  }

  double best = std::numeric_limits<double>::infinity();
  const std::size_t len = n - 2;
  std::vector<std::size_t> seq(len, 0);
  std::vector<std::size_t> degree(n);
  while (true) {
    // Decode the Pruefer sequence and sum weights as we go.
    std::fill(degree.begin(), degree.end(), 1);
    for (std::size_t x : seq) ++degree[x];
    double total = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      total += w[leaf * n + seq[i]];
      if (!std::isfinite(total) || total >= best) ok = false;
      --degree[leaf];
      --degree[seq[i]];
    }
    if (ok) {
      std::size_t u = n;
      std::size_t v = n;
      for (std::size_t x = 0; x < n; ++x) {
        if (degree[x] == 1) (u == n ? u : v) = x;
      }
      total += w[u * n + v];
      if (total < best) best = total;
    }

    std::size_t pos = 0;
    while (pos < len && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == len) break;
  }
  return best;
}

int WspdReport::count(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return coverage[i * n + j];
}

WspdReport check_wspd(const SplitTree& tree, double s, std::span<const WspdPair> pairs) {
  const PointSet& ps = tree.points();
  WspdReport report;
  report.n = ps.size();
  report.coverage.assign(report.n * report.n, 0);

  for (const auto& pair : pairs) {
    const auto& a = tree.node(pair.a).point_indices;
    const auto& b = tree.node(pair.b).point_indices;
    bool overlap = false;
    for (std::size_t p : a) {
      for (std::size_t q : b) {
        if (p == q) {
          overlap = true;
          continue;
        }
        ++report.coverage[std::min(p, q) * report.n + std::max(p, q)];
      }
    }
    if (overlap) ++report.overlapping;

    // Witness balls from the raw point sets, congruent at the larger radius.
    const Ball ba = enclosing_ball(bounding_box(gather(ps, a)));
    const Ball bb = enclosing_ball(bounding_box(gather(ps, b)));
    const double rho = std::max(ba.radius, bb.radius);
    const double between = dist(ba.center(), bb.center()) - 2.0 * rho;
    const bool ok = between > 0.0 && between >= s * rho;
    report.separated.push_back(ok);
    if (!ok) ++report.not_separated;
  }

  for (std::size_t i = 0; i < report.n; ++i) {
    for (std::size_t j = i + 1; j < report.n; ++j) {
      const int c = report.coverage[i * report.n + j];
      if (c == 0) ++report.uncovered;
      if (c > 1) ++report.overcovered;
    }
  }
  return report;
}

WspdReport check_wspd(const Wspd& wspd) { return check_wspd(wspd.tree, wspd.s, wspd.pairs); }

}  // namespace wsp::oracle
