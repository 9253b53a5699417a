// Model file format:
//
//   {"worlds": ["w1", "w2"],
//    "agents": {"a": [["w1", "w2"], ["w2", "w2"]]},
//    "valuation": {"p": ["w1"]}}
//
// World, agent and atom order follow document order.  Unknown keys are
// rejected.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pal/model.hpp"

namespace pal {

using json = nlohmann::ordered_json;

inline json to_json(const EpistemicModel& m) {
  json doc = json::object();
  doc["worlds"] = m.worlds();
  json agents = json::object();
  for (std::size_t i = 0; i < m.agents().size(); ++i) {
    json pairs = json::array();
    for (auto [x, y] : m.relation(i).pairs()) pairs.push_back({m.worlds()[x], m.worlds()[y]});
    agents[m.agents()[i]] = std::move(pairs);
  }
  doc["agents"] = std::move(agents);
  json val = json::object();
  for (std::size_t i = 0; i < m.atoms().size(); ++i) val[m.atoms()[i]] = m.names_of(m.valuation(i));
  doc["valuation"] = std::move(val);
  return doc;
}

inline EpistemicModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelError("model document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "worlds" && key != "agents" && key != "valuation")
      throw ModelError("unknown key '" + key + "' in model document");
  if (!doc.contains("worlds") || !doc["worlds"].is_array()) throw ModelError("model needs a \"worlds\" array");

  std::vector<std::string> worlds;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string()) throw ModelError("world ids must be strings");
    worlds.push_back(w.get<std::string>());
  }
  ModelBuilder builder(worlds);
  // Builder reports unknown ids; duplicate ids are caught by the model.

  if (doc.contains("agents")) {
    if (!doc["agents"].is_object()) throw ModelError("\"agents\" must be an object");
    for (const auto& [name, pairs] : doc["agents"].items()) {
      if (!pairs.is_array()) throw ModelError("relation of agent '" + name + "' must be an array of pairs");
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
          throw ModelError("relation of agent '" + name + "' must contain [from, to] pairs of world ids");
        edges.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
      builder.agent(name, edges);
    }
  }
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object()) throw ModelError("\"valuation\" must be an object");
    for (const auto& [name, ids] : doc["valuation"].items()) {
      if (!ids.is_array()) throw ModelError("valuation of atom '" + name + "' must be an array of world ids");
      std::vector<std::string> at;
      for (const auto& id : ids) {
        if (!id.is_string()) throw ModelError("valuation of atom '" + name + "' must list world ids");
        at.push_back(id.get<std::string>());
      }
      builder.atom(name, at);
    }
  }
  return builder.build();
}

inline EpistemicModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed model JSON: ") + e.what());
  }
  return model_from_json(doc);
}

inline EpistemicModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace pal
