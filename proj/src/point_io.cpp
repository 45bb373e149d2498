#include "wsp/point_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wsp/error.hpp"

namespace wsp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

PointSet parse_csv(std::string_view text) {
  std::vector<Point2> pts;
  bool seen_row = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;

    const auto comma = line.find(',');
    std::optional<double> x;
    std::optional<double> y;
    if (comma != std::string_view::npos && line.find(',', comma + 1) == std::string_view::npos) {
      x = parse_number(line.substr(0, comma));
      y = parse_number(line.substr(comma + 1));
    }
    if (!x || !y) {
      if (!seen_row) {  // header
        seen_row = true;
        continue;
      }
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected \"x,y\", got \"" +
                                  std::string(line) + "\"");
    }
    seen_row = true;
    pts.push_back(make_point(*x, *y));
  }
  return PointSet(std::move(pts));
}

PointSet parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("point file is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("point file must look like {\"points\": [[x, y], ...]}");
  }
  std::vector<Point2> pts;
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw std::invalid_argument("every point must be a two-number array");
    }
    pts.push_back(make_point(p[0].get<double>(), p[1].get<double>()));
  }
  return PointSet(std::move(pts));
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

PointFormat detect_point_format(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return PointFormat::kJson;
  return PointFormat::kCsv;
}

PointSet parse_points(std::string_view text) { return parse_points(text, detect_point_format(text)); }

PointSet parse_points(std::string_view text, PointFormat format) {
  return format == PointFormat::kJson ? parse_json(text) : parse_csv(text);
}

std::string write_points(const PointSet& ps, PointFormat format) {
  std::string out;
  if (format == PointFormat::kCsv) {
    out = "x,y\n";
    for (const auto& p : ps) out += format_double(p.x) + "," + format_double(p.y) + "\n";
    return out;
  }
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : ps) pts.push_back({p.x, p.y});
  nlohmann::ordered_json doc;
  doc["points"] = std::move(pts);
  return doc.dump() + "\n";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::kUniform;
  if (name == "grid") return Distribution::kGrid;
  if (name == "clusters") return Distribution::kClusters;
  throw std::invalid_argument("unknown distribution \"" + std::string(name) + "\"");
}

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::kUniform: return "uniform";
    case Distribution::kGrid: return "grid";
    case Distribution::kClusters: return "clusters";
  }
  return "uniform";
}

PointSet generate(Distribution dist, std::size_t n, std::uint64_t seed, const Rect& bounds) {
  if (n == 0) throw Error(ErrorCode::kEmptyPointSet, "generate needs n >= 1");
  if (!(bounds.xmin <= bounds.xmax) || !(bounds.ymin <= bounds.ymax)) {
    throw std::invalid_argument("bounds must satisfy xmin <= xmax and ymin <= ymax");
  }
  std::vector<Point2> pts;
  pts.reserve(n);

  if (dist == Distribution::kGrid) {
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t rows = (n + cols - 1) / cols;
    auto coord = [](double lo, double hi, std::size_t i, std::size_t count) {
      if (count == 1) return lo + 0.5 * (hi - lo);
      return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    };
    for (std::size_t k = 0; k < n; ++k) {
      pts.push_back({coord(bounds.xmin, bounds.xmax, k % cols, cols),
                     coord(bounds.ymin, bounds.ymax, k / cols, rows)});
    }
    try {
      return PointSet(std::move(pts));
    } catch (const Error&) {
      throw Error(ErrorCode::kGridOverflow,
                  std::to_string(n) + " grid points do not fit distinctly in the bounds");
    }
  }

  std::mt19937_64 rng(seed);
  std::set<std::pair<double, double>> seen;
  const std::size_t max_draws = 1000 * n + 1000;
  std::size_t draws = 0;
  auto accept = [&](Point2 p) {
    if (++draws > max_draws) {
      throw Error(ErrorCode::kDuplicatePoint, "bounds too small for " + std::to_string(n) +
                                                  " distinct points");
    }
    if (seen.emplace(p.x, p.y).second) pts.push_back(p);
  };
  auto uniform_point = [&] {
    const double u = unit(rng);
    const double v = unit(rng);
    return Point2{bounds.xmin + u * bounds.width(), bounds.ymin + v * bounds.height()};
  };

  if (dist == Distribution::kUniform) {
    while (pts.size() < n) accept(uniform_point());
  } else {
    const std::size_t cluster_count = std::max<std::size_t>(1, n / 10);
    std::vector<Point2> centers;
    for (std::size_t c = 0; c < cluster_count; ++c) centers.push_back(uniform_point());
    const double sigma = 0.05 * std::max(bounds.width(), bounds.height());
    std::size_t next = 0;
    while (pts.size() < n) {
      // Box-Muller
      const double u1 = 1.0 - unit(rng);
      const double u2 = unit(rng);
      const double radius = sigma * std::sqrt(-2.0 * std::log(u1));
      const double angle = 2.0 * std::numbers::pi * u2;
      const Point2 c = centers[next++ % cluster_count];
      accept({std::clamp(c.x + radius * std::cos(angle), bounds.xmin, bounds.xmax),
              std::clamp(c.y + radius * std::sin(angle), bounds.ymin, bounds.ymax)});
    }
  }
  return PointSet(std::move(pts));
}

}  // namespace wsp
