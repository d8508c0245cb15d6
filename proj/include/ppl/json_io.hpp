#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ppl/preorder.hpp"

namespace ppl {

using json = nlohmann::json;

/// Parse the preorder format:
/// {"vertices": [{"id": "V1", "elements": ["a","c"]}, ...], "relations": [["V1","V4"], ...]}
inline Preorder preorder_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("preorder JSON needs a \"vertices\" array");
  std::map<std::string, int> vertex_index;
  std::vector<std::vector<std::string>> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("elements") || !v["elements"].is_array())
      throw InputError("each vertex needs a string \"id\" and an \"elements\" array");
    const auto id = v["id"].get<std::string>();
    if (!vertex_index.emplace(id, static_cast<int>(names.size())).second) throw InputError("duplicate vertex id " + id);
    names.emplace_back();
    for (const auto& e : v["elements"]) {
      if (!e.is_string()) throw InputError("element names must be strings");
      names.back().push_back(e.get<std::string>());
    }
  }
  std::map<std::string, int> label;
  for (const auto& vs : names)
    for (const auto& e : vs)
      if (!label.emplace(e, 0).second) throw OverlapError("element " + e + " appears twice");
  int next = 0;
  for (auto& [name, l] : label) l = next++;
  std::vector<std::vector<int>> sets;
  for (const auto& vs : names) {
    sets.emplace_back();
    for (const auto& e : vs) sets.back().push_back(label[e]);
  }
  std::vector<std::pair<int, int>> pairs;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) throw InputError("\"relations\" must be an array");
    for (const auto& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        throw InputError("each relation is a pair of vertex ids");
      const auto a = vertex_index.find(r[0].get<std::string>());
      const auto b = vertex_index.find(r[1].get<std::string>());
      if (a == vertex_index.end() || b == vertex_index.end()) throw InputError("relation names an unknown vertex");
      pairs.emplace_back(a->second, b->second);
    }
  }
  return Preorder::build(sets, pairs);
}

inline Preorder preorder_from_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return preorder_from_json(doc);
}

inline Preorder load_preorder(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return preorder_from_string(buf.str());
}

/// Element names "e1".."en", zero-padded so lexicographic order matches the labels.
inline std::string element_name(int label, int n) {
  const std::string digits = std::to_string(label + 1);
  const std::size_t width = std::to_string(n).size();
  return "e" + std::string(width - digits.size(), '0') + digits;
}

inline json preorder_to_json(const Preorder& tau) {
  json vertices = json::array();
  for (int v = 0; v < tau.num_vertices(); ++v) {
    json elems = json::array();
    for (int e = 0; e < tau.size(); ++e)
      if (tau.vertex_mask(v) & bit(e)) elems.push_back(element_name(e, tau.size()));
    vertices.push_back({{"id", "V" + std::to_string(v + 1)}, {"elements", elems}});
  }
  json relations = json::array();
  for (auto [u, v] : tau.covers()) relations.push_back({"V" + std::to_string(u + 1), "V" + std::to_string(v + 1)});
  return {{"vertices", vertices}, {"relations", relations}};
}

}  // namespace ppl
