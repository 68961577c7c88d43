#include "matroid/json_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/errors.hpp"

namespace matroid {

namespace {

using Json = nlohmann::ordered_json;

Json labels_array(const Matroid& m, Subset s) {
  Json out = Json::array();
  for (int e : elements_of(s)) out.push_back(m.ground().label(e));
  return out;
}

Json family_array(const Matroid& m, const std::vector<Subset>& family) {
  Json out = Json::array();
  for (Subset s : family) out.push_back(labels_array(m, s));
  return out;
}

Json matroid_document(const Matroid& m, bool by_circuits) {
  Json doc;
  doc["ground"] = Json::array();
  for (const std::string& label : m.ground().labels())
    doc["ground"].push_back(label);
  if (by_circuits)
    doc["circuits"] = family_array(m, m.circuits());
  else
    doc["bases"] = family_array(m, m.bases());
  return doc;
}

std::vector<std::string> string_list(const Json& node, const char* what) {
  if (!node.is_array())
    fail(Errc::parse_error, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& item : node) {
    if (!item.is_string())
      fail(Errc::parse_error, std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string matroid_to_json(const Matroid& m, bool by_circuits) {
  return matroid_document(m, by_circuits).dump();
}

Matroid matroid_from_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(Errc::parse_error, "input is not a JSON object");
  const bool has_ground = doc.contains("ground");
  const bool has_bases = doc.contains("bases");
  const bool has_circuits = doc.contains("circuits");
  const bool has_graph = doc.contains("graph");
  if (has_bases + has_circuits + has_graph != 1)
    fail(Errc::parse_error,
         "document needs exactly one of \"bases\", \"circuits\", \"graph\"");
  const std::size_t expected_keys = 1 + (has_ground ? 1 : 0);
  if (doc.size() != expected_keys)
    fail(Errc::parse_error, "document has unrecognized keys");

  if (has_graph) {
    if (has_ground)
      fail(Errc::parse_error,
           "\"graph\" documents carry their own labels; drop \"ground\"");
    std::vector<GraphEdge> edges;
    if (!doc["graph"].is_array())
      fail(Errc::parse_error, "\"graph\" must be an array of edge triples");
    for (const Json& item : doc["graph"]) {
      std::vector<std::string> triple = string_list(item, "edge");
      if (triple.size() != 3)
        fail(Errc::parse_error, "each edge is [tail, head, label]");
      edges.push_back({triple[0], triple[1], triple[2]});
    }
    return Matroid::from_graph(edges);
  }

  if (!has_ground)
    fail(Errc::parse_error, "\"ground\" is required with subset families");
  std::vector<std::string> ground = string_list(doc["ground"], "ground");
  const char* key = has_bases ? "bases" : "circuits";
  if (!doc[key].is_array())
    fail(Errc::parse_error, std::string("\"") + key + "\" must be an array");
  std::vector<std::vector<std::string>> family;
  for (const Json& item : doc[key]) family.push_back(string_list(item, key));
  return has_bases ? Matroid::from_bases(ground, family)
                   : Matroid::from_circuits(ground, family);
}

std::string witness_to_json(const Matroid& m, const Matroid& n,
                            const MinorWitness& w) {
  Json doc;
  doc["contract"] = labels_array(m, w.contract);
  doc["delete"] = labels_array(m, w.remove);
  Json map = Json::object();
  for (int e = 0; e < m.size(); ++e)
    if (w.map[e] >= 0) map[m.ground().label(e)] = n.ground().label(w.map[e]);
  doc["map"] = map;
  return doc.dump();
}

std::string tree_to_json(const DecompTree& t) {
  Json doc;
  doc["original"] = matroid_document(t.original, false);
  doc["vertices"] = Json::array();
  for (const Matroid& v : t.vertices)
    doc["vertices"].push_back(matroid_document(v, false));
  std::vector<TreeEdge> edges = t.edges;
  std::sort(edges.begin(), edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
    return std::pair(std::min(a.u, a.v), std::max(a.u, a.v)) <
           std::pair(std::min(b.u, b.v), std::max(b.u, b.v));
  });
  doc["edges"] = Json::array();
  for (const TreeEdge& e : edges) {
    Json edge;
    edge["u"] = std::min(e.u, e.v);
    edge["v"] = std::max(e.u, e.v);
    edge["basepoint"] = e.basepoint;
    doc["edges"].push_back(edge);
  }
  return doc.dump();
}

std::string report_to_json(const VerificationReport& r, bool with_wall_time) {
  Json doc;
  doc["theorem_id"] = r.theorem_id;
  doc["universe"] = r.universe;
  doc["instances_checked"] = r.instances_checked;
  doc["status"] = r.status;
  doc["counterexamples"] = Json::array();
  for (const Counterexample& c : r.counterexamples) {
    Json item;
    item["matroid"] = matroid_document(c.m, false);
    item["note"] = c.note;
    doc["counterexamples"].push_back(item);
  }
  if (with_wall_time) doc["wall_time_seconds"] = r.wall_time_seconds;
  return doc.dump();
}

}  // namespace matroid
