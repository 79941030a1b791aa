#include "disctiler/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace disctiler {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error("parse error at " + path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) fail(path + "." + key, "unknown field");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "number must be finite");
  return v;
}

Point point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

Edge edge(const json& j, const std::string& path, const Tolerance& tol) {
  if (!j.is_object()) fail(path, "expected an edge object");
  if (!j.contains("type")) fail(path + ".type", "missing");
  const std::string type = j["type"].is_string() ? j["type"].get<std::string>()
                                                 : std::string();
  try {
    if (type == "segment") {
      check_keys(j, path, {"type", "from", "to"});
      if (!j.contains("from")) fail(path + ".from", "missing");
      if (!j.contains("to")) fail(path + ".to", "missing");
      return Edge::segment(point(j["from"], path + ".from"),
                           point(j["to"], path + ".to"), tol);
    }
    if (type == "arc") {
      check_keys(j, path, {"type", "center", "radius", "start_angle", "sweep"});
      for (const char* k : {"center", "radius", "start_angle", "sweep"})
        if (!j.contains(k)) fail(path + "." + k, "missing");
      return Edge::arc(point(j["center"], path + ".center"),
                       number(j["radius"], path + ".radius"),
                       number(j["start_angle"], path + ".start_angle"),
                       number(j["sweep"], path + ".sweep"), tol);
    }
  } catch (const Error& e) {
    // Degenerate-edge construction errors carry the json path.
    const std::string what = e.what();
    if (what.rfind("parse error", 0) == 0) throw;
    fail(path, what);
  }
  fail(path + ".type", "expected \"segment\" or \"arc\"");
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json edge_json(const Edge& e) {
  json j;
  if (e.is_arc()) {
    const Arc& a = e.arc_data();
    j["type"] = "arc";
    j["center"] = point_json(a.center);
    j["radius"] = a.radius;
    j["start_angle"] = a.start_angle;
    j["sweep"] = a.sweep;
  } else {
    const Segment& s = e.segment_data();
    j["type"] = "segment";
    j["from"] = point_json(s.from);
    j["to"] = point_json(s.to);
  }
  return j;
}

json boundaries_json(const std::vector<Chain>& chains) {
  json arr = json::array();
  for (const Chain& c : chains) {
    json edges = json::array();
    for (const Edge& e : c.edges()) edges.push_back(edge_json(e));
    arr.push_back(std::move(edges));
  }
  return arr;
}

json eps_json(const Tolerance& tol) {
  return json{{"len", tol.len}, {"ang", tol.ang}, {"area", tol.area}};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

constexpr const char* kPalette[12] = {
    "#9ecae9", "#f7b6a2", "#b5e0b5", "#d9c6e8", "#f4d99b", "#c2ced6",
    "#f2c4dd", "#cfe6f2", "#e3d5c3", "#b8dfd8", "#e8c9c9", "#d6d9a8"};

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected an object");
  check_keys(root, "$", {"kind", "eps", "tiles", "members"});
  if (!root.contains("kind") || !root["kind"].is_string())
    fail("$.kind", "expected \"tiling\" or \"multicurve\"");
  const std::string kind = root["kind"].get<std::string>();

  Document doc;
  if (kind == "tiling") {
    doc.kind = Document::Kind::Tiling;
  } else if (kind == "multicurve") {
    doc.kind = Document::Kind::Multicurve;
  } else {
    fail("$.kind", "expected \"tiling\" or \"multicurve\"");
  }

  if (root.contains("eps")) {
    const json& e = root["eps"];
    if (!e.is_object()) fail("$.eps", "expected an object");
    check_keys(e, "$.eps", {"len", "ang", "area"});
    if (e.contains("len")) doc.eps.len = number(e["len"], "$.eps.len");
    if (e.contains("ang")) doc.eps.ang = number(e["ang"], "$.eps.ang");
    if (e.contains("area")) doc.eps.area = number(e["area"], "$.eps.area");
    doc.eps_present = true;
  }

  const char* list_key = doc.kind == Document::Kind::Tiling ? "tiles"
                                                            : "members";
  const char* other_key = doc.kind == Document::Kind::Tiling ? "members"
                                                             : "tiles";
  if (root.contains(other_key))
    fail(std::string("$.") + other_key, "not allowed for kind " + kind);
  if (!root.contains(list_key))
    fail(std::string("$.") + list_key, "missing");
  const json& list = root[list_key];
  if (!list.is_array()) fail(std::string("$.") + list_key, "expected an array");

  for (size_t i = 0; i < list.size(); ++i) {
    const std::string bpath =
        "$." + std::string(list_key) + "[" + std::to_string(i) + "]";
    const json& b = list[i];
    if (!b.is_array() || b.empty())
      fail(bpath, "expected a nonempty array of edges");
    std::vector<Edge> edges;
    for (size_t k = 0; k < b.size(); ++k)
      edges.push_back(edge(b[k], bpath + "[" + std::to_string(k) + "]",
                           doc.eps));
    bool closed = doc.kind == Document::Kind::Tiling;
    if (!closed)
      closed = distance(edges.back().end(), edges.front().start()) <=
               doc.eps.len;
    doc.boundaries.push_back(Chain::unchecked(std::move(edges), closed));
  }
  return doc;
}

std::string serialize_tiling(const Tiling& t) {
  json root;
  root["kind"] = "tiling";
  root["eps"] = eps_json(t.tol);
  root["tiles"] = boundaries_json(t.tiles);
  return root.dump(2) + "\n";
}

std::string serialize_multicurve(const std::vector<Chain>& members) {
  json root;
  root["kind"] = "multicurve";
  root["members"] = boundaries_json(members);
  return root.dump(2) + "\n";
}

std::string render_svg(const std::vector<Chain>& tiles) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" "
      "viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  out += "<g transform=\"scale(1,-1)\">\n";
  for (size_t i = 0; i < tiles.size(); ++i) {
    const Chain& c = tiles[i];
    if (c.empty()) continue;
    std::string d = "M " + fmt(c.start().x) + " " + fmt(c.start().y);
    for (const Edge& e : c.edges()) {
      const Point q = e.end();
      if (e.is_arc()) {
        const Arc& a = e.arc_data();
        const char* large = std::abs(a.sweep) > kPi ? "1" : "0";
        const char* sweep = a.sweep > 0.0 ? "1" : "0";
        d += " A " + fmt(a.radius) + " " + fmt(a.radius) + " 0 " + large +
             " " + sweep + " " + fmt(q.x) + " " + fmt(q.y);
      } else {
        d += " L " + fmt(q.x) + " " + fmt(q.y);
      }
    }
    d += " Z";
    out += "<path d=\"" + d + "\" fill=\"" + kPalette[i % 12] +
           "\" stroke=\"#555555\" stroke-width=\"0.004\"/>\n";
  }
  out +=
      "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#1a3a6b\" "
      "stroke-width=\"0.01\"/>\n";
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace disctiler
