#include "wsp/binding.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "wsp/commands.hpp"
#include "wsp/error.hpp"
#include "wsp/point_io.hpp"

namespace {

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string error_json(std::string_view code, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["error"] = {{"code", code}, {"message", message}};
  return doc.dump() + "\n";
}

std::string compute(const char* request_json) {
  if (request_json == nullptr) return error_json("ParseError", "null request");
  nlohmann::json req;
  try {
    req = nlohmann::json::parse(request_json);
  } catch (const nlohmann::json::parse_error& e) {
    return error_json("ParseError", e.what());
  }
  try {
    const auto command = wsp::parse_command(req.value("command", std::string{}));
    if (!command) return error_json("InvalidParams", "unknown command");
    nlohmann::json points_doc = {{"points", req.value("points", nlohmann::json::array())}};
    const wsp::PointSet ps = wsp::parse_points(points_doc.dump(), wsp::PointFormat::kJson);

    wsp::RunParams params;
    if (req.contains("params")) {
      const auto& p = req["params"];
      if (p.contains("s")) params.s = p["s"].get<double>();
      if (p.contains("t")) params.t = p["t"].get<double>();
      if (p.contains("k")) params.k = p["k"].get<std::size_t>();
    }
    return wsp::serialize(wsp::run_command(*command, ps, params));
  } catch (const wsp::Error& e) {
    return error_json(wsp::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_json("InvalidParams", e.what());
  }
}

}  // namespace

extern "C" char* wsp_compute_scene(const char* request_json) {
  return copy_out(compute(request_json));
}

extern "C" void wsp_free(char* response) { std::free(response); }
