/*
 * Copyright 2026 the netconfmodel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "ncm/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncm/errors.hpp"

namespace ncm {

GroupValue* DeviceModel::find(const std::string& name) {
  for (auto& gv : group_values)
    if (gv.name == name) return &gv;
  return nullptr;
}

const GroupValue* DeviceModel::find(const std::string& name) const {
  for (const auto& gv : group_values)
    if (gv.name == name) return &gv;
  return nullptr;
}

std::string violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::duplicate_group_value_name: return "duplicate-group-value-name";
    case ViolationCode::unknown_group: return "unknown-group";
    case ViolationCode::abstract_group: return "abstract-group";
    case ViolationCode::unknown_item: return "unknown-item";
    case ViolationCode::bad_value_kind: return "bad-value-kind";
    case ViolationCode::missing_config: return "missing-config";
    case ViolationCode::multiple_config: return "multiple-config";
    case ViolationCode::dangling_link: return "dangling-link";
    case ViolationCode::illegal_link: return "illegal-link";
  }
  return "unknown";
}

std::vector<Violation> validate_model(const DeviceModel& model, const Metamodel& mm) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  std::size_t config_count = 0;

  for (const auto& gv : model.group_values) {
    if (!seen.insert(gv.name).second)
      out.push_back({ViolationCode::duplicate_group_value_name, gv.name,
                     "group value name used more than once"});
    const GroupDef* def = mm.find_group(gv.group);
    if (!def) {
      out.push_back({ViolationCode::unknown_group, gv.name,
                     "no group named " + gv.group});
      continue;
    }
    if (def->abstract_)
      out.push_back({ViolationCode::abstract_group, gv.name,
                     gv.group + " is abstract and cannot be instantiated"});
    if (gv.group == "Config") ++config_count;
    for (const auto& [item, value] : gv.slots) {
      const ItemDef* idef = mm.find_item(gv.group, item);
      if (!idef) {
        out.push_back({ViolationCode::unknown_item, gv.name + "." + item,
                       gv.group + " has no item " + item});
        continue;
      }
      if (!value_matches_kind(value, idef->kind))
        out.push_back({ViolationCode::bad_value_kind, gv.name + "." + item,
                       "value '" + value + "' is not a valid " +
                           value_kind_name(idef->kind)});
    }
  }

  if (config_count == 0)
    out.push_back({ViolationCode::missing_config, "Config", "model has no Config value"});
  else if (config_count > 1)
    out.push_back({ViolationCode::multiple_config, "Config",
                   "model has more than one Config value"});

  for (const auto& [a, b] : model.links) {
    const GroupValue* ga = model.find(a);
    const GroupValue* gb = model.find(b);
    if (!ga || !gb) {
      out.push_back({ViolationCode::dangling_link, a + " -- " + b,
                     "link endpoint does not exist"});
      continue;
    }
    if (!mm.association_allows(ga->group, gb->group))
      out.push_back({ViolationCode::illegal_link, a + " -- " + b,
                     "no association between " + ga->group + " and " + gb->group});
  }
  return out;
}

std::string serialize_model(const DeviceModel& model) {
  nlohmann::json j;
  auto values = model.group_values;
  std::sort(values.begin(), values.end(),
            [](const GroupValue& a, const GroupValue& b) { return a.name < b.name; });
  j["groupValues"] = nlohmann::json::array();
  for (const auto& gv : values) {
    nlohmann::json entry;
    entry["name"] = gv.name;
    entry["group"] = gv.group;
    entry["slots"] = nlohmann::json::object();
    for (const auto& [item, value] : gv.slots) entry["slots"][item] = value;
    j["groupValues"].push_back(entry);
  }
  std::vector<std::pair<std::string, std::string>> links;
  for (auto [a, b] : model.links) {
    if (b < a) std::swap(a, b);
    links.emplace_back(a, b);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  j["links"] = nlohmann::json::array();
  for (const auto& [a, b] : links) j["links"].push_back({a, b});
  return j.dump(2) + "\n";
}

DeviceModel deserialize_model(const std::string& text, const Metamodel& mm) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelSchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("groupValues") || !j["groupValues"].is_array())
    throw ModelSchemaError("model JSON must be an object with a groupValues array");

  DeviceModel model;
  for (const auto& entry : j["groupValues"]) {
    if (!entry.is_object() || !entry.contains("name") || !entry.contains("group"))
      throw ModelSchemaError("each group value needs name and group fields");
    GroupValue gv;
    gv.name = entry["name"].get<std::string>();
    gv.group = entry["group"].get<std::string>();
    const GroupDef* def = mm.find_group(gv.group);
    if (!def)
      throw ModelSchemaError("group value " + gv.name + " names unknown group " + gv.group);
    if (entry.contains("slots")) {
      if (!entry["slots"].is_object())
        throw ModelSchemaError("slots of " + gv.name + " must be an object");
      for (const auto& [item, value] : entry["slots"].items()) {
        if (!mm.find_item(gv.group, item))
          throw ModelSchemaError("group " + gv.group + " has no item " + item);
        if (!value.is_string())
          throw ModelSchemaError("slot " + gv.name + "." + item + " must be a string");
        gv.slots[item] = value.get<std::string>();
      }
    }
    model.group_values.push_back(std::move(gv));
  }
  if (j.contains("links")) {
    if (!j["links"].is_array()) throw ModelSchemaError("links must be an array");
    for (const auto& link : j["links"]) {
      if (!link.is_array() || link.size() != 2)
        throw ModelSchemaError("each link must be a two-element array");
      model.links.emplace_back(link[0].get<std::string>(), link[1].get<std::string>());
    }
  }
  return model;
}

DeviceModel load_model_file(const std::string& path, const Metamodel& mm) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_model(buf.str(), mm);
}

namespace {

// Content fingerprint independent of the value's current name: group name
// plus every slot. Ties (identical twins) are broken by original order,
// which both sides of a comparison reach the same way after sorting.
std::string fingerprint(const GroupValue& gv) {
  std::string fp = gv.group;
  for (const auto& [item, value] : gv.slots) fp += "|" + item + "=" + value;
  return fp;
}

}  // namespace

DeviceModel canonicalize_model(const DeviceModel& model) {
  std::vector<std::size_t> order(model.group_values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::string> fps(model.group_values.size());
  for (std::size_t i = 0; i < fps.size(); ++i) fps[i] = fingerprint(model.group_values[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&fps](std::size_t a, std::size_t b) { return fps[a] < fps[b]; });

  std::map<std::string, std::string> rename;
  DeviceModel out;
  std::map<std::string, int> counters;
  for (std::size_t idx : order) {
    const GroupValue& gv = model.group_values[idx];
    int n = ++counters[gv.group];
    GroupValue copy = gv;
    copy.name = gv.group + "#" + std::to_string(n);
    rename[gv.name] = copy.name;
    out.group_values.push_back(std::move(copy));
  }
  for (auto [a, b] : model.links) {
    auto ia = rename.find(a);
    auto ib = rename.find(b);
    std::string na = ia == rename.end() ? a : ia->second;
    std::string nb = ib == rename.end() ? b : ib->second;
    if (nb < na) std::swap(na, nb);
    out.links.emplace_back(na, nb);
  }
  std::sort(out.links.begin(), out.links.end());
  out.links.erase(std::unique(out.links.begin(), out.links.end()), out.links.end());
  return out;
}

namespace {

DeviceModel strip_items(const DeviceModel& model, const std::set<std::string>& ignore_items) {
  if (ignore_items.empty()) return model;
  DeviceModel out = model;
  for (auto& gv : out.group_values)
    for (auto it = gv.slots.begin(); it != gv.slots.end();)
      if (ignore_items.count(gv.group + "." + it->first))
        it = gv.slots.erase(it);
      else
        ++it;
  return out;
}

}  // namespace

std::vector<std::string> model_diff(const DeviceModel& lhs, const DeviceModel& rhs,
                                    const std::set<std::string>& ignore_items) {
  DeviceModel a = canonicalize_model(strip_items(lhs, ignore_items));
  DeviceModel b = canonicalize_model(strip_items(rhs, ignore_items));
  std::vector<std::string> out;

  auto describe = [](const GroupValue& gv) {
    std::string s = gv.name + " (" + gv.group + ")";
    for (const auto& [item, value] : gv.slots) s += " " + item + "=" + value;
    return s;
  };

  std::size_t i = 0, j = 0;
  while (i < a.group_values.size() || j < b.group_values.size()) {
    if (i == a.group_values.size()) {
      out.push_back("only in right: " + describe(b.group_values[j++]));
    } else if (j == b.group_values.size()) {
      out.push_back("only in left: " + describe(a.group_values[i++]));
    } else if (a.group_values[i] == b.group_values[j]) {
      ++i;
      ++j;
    } else if (a.group_values[i].name < b.group_values[j].name ||
               (a.group_values[i].name == b.group_values[j].name &&
                fingerprint(a.group_values[i]) < fingerprint(b.group_values[j]))) {
      out.push_back("only in left: " + describe(a.group_values[i++]));
    } else {
      out.push_back("only in right: " + describe(b.group_values[j++]));
    }
  }

  std::set<std::pair<std::string, std::string>> la(a.links.begin(), a.links.end());
  std::set<std::pair<std::string, std::string>> lb(b.links.begin(), b.links.end());
  for (const auto& link : la)
    if (!lb.count(link))
      out.push_back("link only in left: " + link.first + " -- " + link.second);
  for (const auto& link : lb)
    if (!la.count(link))
      out.push_back("link only in right: " + link.first + " -- " + link.second);
  return out;
}

bool model_equal(const DeviceModel& lhs, const DeviceModel& rhs,
                 const std::set<std::string>& ignore_items) {
  return model_diff(lhs, rhs, ignore_items).empty();
}

ModelStats model_stats(const DeviceModel& model, const Metamodel& mm) {
  return model_stats(std::vector<DeviceModel>{model}, mm);
}

ModelStats model_stats(const std::vector<DeviceModel>& models, const Metamodel& mm) {
  ModelStats stats;
  std::set<std::pair<std::string, std::string>> kinds;
  for (const auto& model : models) {
    stats.group_value_count += model.group_values.size();
    stats.link_count += model.links.size();
    for (const auto& gv : model.group_values) {
      stats.slot_value_count += gv.slots.size();
      for (const auto& [item, value] : gv.slots) {
        auto owner = mm.defining_group(gv.group, item);
        kinds.emplace(owner.value_or(gv.group), item);
      }
    }
  }
  stats.distinct_item_kinds = kinds.size();
  return stats;
}

}  // namespace ncm
