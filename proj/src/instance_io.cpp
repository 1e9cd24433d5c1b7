// Copyright 2026 The knapmech Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "knapmech/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace knapmech {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& require_field(const json& node, const std::string& key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

Rational rational_field(const json& node, const std::string& key, const std::string& where) {
  const json& field = require_field(node, key, where);
  if (!field.is_string()) {
    throw ParseError(where + "." + key + ": rationals must be quoted strings like \"3/4\"");
  }
  try {
    return Rational::from_string(field.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

int id_field(const json& node, int expected, const std::string& where) {
  const json& field = require_field(node, "id", where);
  if (!field.is_number_integer() || field.get<long>() != expected) {
    throw ParseError(where + ".id: agent ids must be 1..n in order (expected " +
                     std::to_string(expected) + ")");
  }
  return expected;
}

Instance parse_set_instance(const json& root, const Rational& capacity) {
  Instance instance;
  instance.capacity = capacity;
  const json& agents = require_field(root, "agents", "instance");
  if (!agents.is_array()) throw ParseError("instance.agents: must be an array");
  for (std::size_t a = 0; a < agents.size(); ++a) {
    const std::string where = "agents[" + std::to_string(a) + "]";
    const json& agent = agents[a];
    if (!agent.is_object()) throw ParseError(where + ": must be an object");
    id_field(agent, static_cast<int>(a) + 1, where);

    const json& model_field = require_field(agent, "model", where);
    if (!model_field.is_string()) throw ParseError(where + ".model: must be a string");
    const auto model = report_model_from_string(model_field.get<std::string>());
    if (!model) {
      throw ParseError(where + ".model: unknown model '" + model_field.get<std::string>() + "'");
    }
    instance.models.push_back(*model);

    const json& items = require_field(agent, "items", where);
    if (!items.is_array()) throw ParseError(where + ".items: must be an array");
    std::vector<Item> parsed;
    for (std::size_t j = 0; j < items.size(); ++j) {
      const std::string item_where = where + ".items[" + std::to_string(j) + "]";
      const json& item = items[j];
      if (!item.is_object()) throw ParseError(item_where + ": must be an object");
      const json& id = require_field(item, "id", item_where);
      if (!id.is_string() || id.get<std::string>().empty()) {
        throw ParseError(item_where + ".id: must be a non-empty string");
      }
      parsed.push_back({id.get<std::string>(), static_cast<int>(a) + 1,
                        rational_field(item, "value", item_where),
                        rational_field(item, "size", item_where)});
    }
    try {
      instance.true_sets.push_back(ItemSet(std::move(parsed)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ".items: " + e.what());
    }
  }
  const ValidationResult check = validate_instance(instance);
  if (!check.ok) {
    const std::string prefix =
        check.agent > 0 ? "agents[" + std::to_string(check.agent - 1) + "]: " : "instance: ";
    throw ParseError(prefix + check.message);
  }
  return instance;
}

KqusInstance parse_kqus_instance(const json& root, const Rational& capacity) {
  if (capacity != Rational(1)) {
    throw ParseError("instance.capacity: the single-item model fixes capacity at 1");
  }
  KqusInstance instance;
  const json& agents = require_field(root, "agents", "instance");
  if (!agents.is_array()) throw ParseError("instance.agents: must be an array");
  for (std::size_t a = 0; a < agents.size(); ++a) {
    const std::string where = "agents[" + std::to_string(a) + "]";
    const json& agent = agents[a];
    if (!agent.is_object()) throw ParseError(where + ": must be an object");
    id_field(agent, static_cast<int>(a) + 1, where);
    instance.agents.push_back(
        {rational_field(agent, "ratio", where), rational_field(agent, "size", where)});
  }
  const ValidationResult check = validate_kqus(instance);
  if (!check.ok) {
    const std::string prefix =
        check.agent > 0 ? "agents[" + std::to_string(check.agent - 1) + "]: " : "instance: ";
    throw ParseError(prefix + check.message);
  }
  return instance;
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann's message already carries "at line L, column C"; expose the
    // position as fields too.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, column);
  }
  if (!root.is_object()) throw ParseError("instance: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "capacity" && key != "agents" && key != "kqus") {
      throw ParseError("instance: unknown field '" + key + "'");
    }
  }
  const Rational capacity = rational_field(root, "capacity", "instance");
  bool kqus = false;
  if (auto it = root.find("kqus"); it != root.end()) {
    if (!it->is_boolean()) throw ParseError("instance.kqus: must be a boolean");
    kqus = it->get<bool>();
  }
  if (kqus) return parse_kqus_instance(root, capacity);
  return parse_set_instance(root, capacity);
}

ParsedInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
  json root;
  root["capacity"] = instance.capacity.str();
  json agents = json::array();
  for (int a = 0; a < instance.agents(); ++a) {
    json agent;
    agent["id"] = a + 1;
    agent["model"] = to_string(instance.models[static_cast<std::size_t>(a)]);
    json items = json::array();
    for (const Item& item : instance.true_sets[static_cast<std::size_t>(a)].items()) {
      json entry;
      entry["id"] = item.id;
      entry["value"] = item.value.str();
      entry["size"] = item.size.str();
      items.push_back(entry);
    }
    agent["items"] = items;
    agents.push_back(agent);
  }
  root["agents"] = agents;
  return root.dump(2) + "\n";
}

std::string serialize_instance(const KqusInstance& instance) {
  json root;
  root["capacity"] = "1";
  root["kqus"] = true;
  json agents = json::array();
  for (std::size_t a = 0; a < instance.agents.size(); ++a) {
    json agent;
    agent["id"] = static_cast<int>(a) + 1;
    agent["ratio"] = instance.agents[a].ratio.str();
    agent["size"] = instance.agents[a].size.str();
    agents.push_back(agent);
  }
  root["agents"] = agents;
  return root.dump(2) + "\n";
}

std::string serialize_instance(const ParsedInstance& parsed) {
  return std::visit([](const auto& instance) { return serialize_instance(instance); }, parsed);
}

}  // namespace knapmech
