#include "sga/instance_io.hpp"
#include "sga/errors.hpp"

namespace sga {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ValidationError(std::string("missing or non-string field '") + key + "'");
  return j.at(key).get<std::string>();
}

const json& require_field(const json& j, const char* key) {
  if (!j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

} // namespace

json to_json(const RawGroupoid& g) {
  json j;
  j["kind"] = "groupoid";
  j["version"] = kFormatVersion;
  j["objects"] = g.objects;
  json morphisms = json::array();
  for (const auto& m : g.morphisms)
    morphisms.push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  j["morphisms"] = morphisms;
  j["identity"] = g.identity;
  j["inverse"] = g.inverse;
  json compose = json::array();
  for (const auto& t : g.compose) compose.push_back({t[0], t[1], t[2]});
  j["compose"] = compose;
  return j;
}

json to_json(const Groupoid& g) { return to_json(to_raw(g)); }

json to_json(const PartialAction& a) {
  const RawPartialAction raw = to_raw(a);
  json j;
  j["kind"] = "action";
  j["version"] = kFormatVersion;
  j["groupoid"] = to_json(raw.groupoid);
  j["groupoid"].erase("kind");
  j["groupoid"].erase("version");
  json points = json::array();
  for (const auto& pt : raw.points) points.push_back({{"id", pt.id}, {"unit", pt.unit}});
  j["points"] = points;
  j["domain"] = raw.domain;
  j["map"] = raw.map;
  return j;
}

json to_json(const Ultragraph& u) {
  const RawUltragraph raw = to_raw(u);
  json j;
  j["kind"] = "ultragraph";
  j["version"] = kFormatVersion;
  j["vertices"] = raw.vertices;
  json edges = json::array();
  for (const auto& e : raw.edges)
    edges.push_back({{"id", e.id}, {"source", e.source}, {"range", e.range}});
  j["edges"] = edges;
  return j;
}

RawGroupoid raw_groupoid_from_json(const json& j) {
  RawGroupoid g;
  for (const auto& o : require_field(j, "objects")) g.objects.push_back(o.get<std::string>());
  for (const auto& m : require_field(j, "morphisms"))
    g.morphisms.push_back({require_string(m, "id"), require_string(m, "src"),
                           require_string(m, "dst")});
  for (const auto& [k, v] : require_field(j, "identity").items())
    g.identity[k] = v.get<std::string>();
  for (const auto& [k, v] : require_field(j, "inverse").items())
    g.inverse[k] = v.get<std::string>();
  for (const auto& t : require_field(j, "compose")) {
    if (!t.is_array() || t.size() != 3)
      throw ValidationError("compose entries must be triples");
    g.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                         t[2].get<std::string>()});
  }
  return g;
}

RawPartialAction raw_action_from_json(const json& j) {
  RawPartialAction a;
  a.groupoid = raw_groupoid_from_json(require_field(j, "groupoid"));
  for (const auto& pt : require_field(j, "points"))
    a.points.push_back({require_string(pt, "id"), require_string(pt, "unit")});
  for (const auto& [g, pts] : require_field(j, "domain").items()) {
    std::vector<std::string> v;
    for (const auto& p : pts) v.push_back(p.get<std::string>());
    a.domain[g] = std::move(v);
  }
  for (const auto& [g, m] : require_field(j, "map").items()) {
    std::map<std::string, std::string> mm;
    for (const auto& [from, to] : m.items()) mm[from] = to.get<std::string>();
    a.map[g] = std::move(mm);
  }
  return a;
}

RawUltragraph raw_ultragraph_from_json(const json& j) {
  RawUltragraph u;
  for (const auto& v : require_field(j, "vertices")) u.vertices.push_back(v.get<std::string>());
  for (const auto& e : require_field(j, "edges")) {
    RawUltragraph::Edge edge;
    edge.id = require_string(e, "id");
    edge.source = require_string(e, "source");
    for (const auto& r : require_field(e, "range")) edge.range.push_back(r.get<std::string>());
    u.edges.push_back(std::move(edge));
  }
  return u;
}

Instance parse_instance(const json& j) {
  const std::string kind = require_string(j, "kind");
  if (kind == "groupoid") return validate(raw_groupoid_from_json(j));
  if (kind == "action") return validate(raw_action_from_json(j));
  if (kind == "ultragraph") return validate(raw_ultragraph_from_json(j));
  throw ValidationError("unknown instance kind '" + kind + "'");
}

std::string instance_kind(const Instance& inst) {
  if (std::holds_alternative<Groupoid>(inst)) return "groupoid";
  if (std::holds_alternative<PartialAction>(inst)) return "action";
  return "ultragraph";
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace sga
