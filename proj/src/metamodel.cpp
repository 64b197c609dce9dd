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
#include "ncm/metamodel.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ncm {

std::string value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::string_: return "string";
    case ValueKind::integer: return "integer";
    case ValueKind::boolean: return "boolean";
    case ValueKind::ip_address: return "ip-address";
    case ValueKind::ip_mask: return "ip-mask";
  }
  return "string";
}

namespace {

bool is_dotted_quad(const std::string& value) {
  int octets = 0;
  std::size_t i = 0;
  while (i < value.size()) {
    std::size_t start = i;
    while (i < value.size() && std::isdigit(static_cast<unsigned char>(value[i]))) ++i;
    if (i == start || i - start > 3) return false;
    int v = std::stoi(value.substr(start, i - start));
    if (v > 255) return false;
    ++octets;
    if (i < value.size()) {
      if (value[i] != '.' || octets == 4) return false;
      ++i;
      if (i == value.size()) return false;
    }
  }
  return octets == 4;
}

}  // namespace

bool value_matches_kind(const std::string& value, ValueKind kind) {
  switch (kind) {
    case ValueKind::string_:
      return true;
    case ValueKind::integer:
      return !value.empty() &&
             std::all_of(value.begin(), value.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    case ValueKind::boolean:
      return value == "true" || value == "false";
    case ValueKind::ip_address:
    case ValueKind::ip_mask:
      return is_dotted_quad(value);
  }
  return false;
}

const GroupDef* Metamodel::find_group(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

std::vector<std::string> Metamodel::supergroups_of(const std::string& name) const {
  std::vector<std::string> out;
  for (const auto& [sub, super] : generalizations)
    if (sub == name) out.push_back(super);
  return out;
}

std::vector<std::string> Metamodel::lineage(const std::string& name) const {
  std::vector<std::string> out;
  std::vector<std::string> work{name};
  while (!work.empty()) {
    std::string g = work.back();
    work.pop_back();
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    out.push_back(g);
    for (auto& super : supergroups_of(g)) work.push_back(super);
  }
  return out;
}

std::vector<std::pair<ItemDef, std::string>> Metamodel::item_closure(
    const std::string& group) const {
  std::vector<std::pair<ItemDef, std::string>> out;
  for (const auto& g : lineage(group)) {
    const GroupDef* def = find_group(g);
    if (!def) continue;
    for (const auto& item : def->items) out.emplace_back(item, g);
  }
  return out;
}

std::optional<std::string> Metamodel::defining_group(const std::string& group,
                                                     const std::string& item) const {
  for (const auto& [def, owner] : item_closure(group))
    if (def.name == item) return owner;
  return std::nullopt;
}

const ItemDef* Metamodel::find_item(const std::string& group, const std::string& item) const {
  for (const auto& g : lineage(group)) {
    const GroupDef* def = find_group(g);
    if (!def) continue;
    for (const auto& it : def->items)
      if (it.name == item) return &it;
  }
  return nullptr;
}

bool Metamodel::association_allows(const std::string& group_a,
                                   const std::string& group_b) const {
  auto la = lineage(group_a);
  auto lb = lineage(group_b);
  auto within = [](const std::vector<std::string>& lin, const std::string& g) {
    return std::find(lin.begin(), lin.end(), g) != lin.end();
  };
  for (const auto& assoc : associations) {
    if ((within(la, assoc.group_a) && within(lb, assoc.group_b)) ||
        (within(la, assoc.group_b) && within(lb, assoc.group_a)))
      return true;
  }
  return false;
}

std::vector<std::string> check_metamodel(const Metamodel& mm) {
  std::vector<std::string> problems;
  std::set<std::string> names;
  for (const auto& g : mm.groups) {
    if (!names.insert(g.name).second)
      problems.push_back("duplicate group name: " + g.name);
    std::set<std::string> item_names;
    for (const auto& item : g.items)
      if (!item_names.insert(item.name).second)
        problems.push_back("duplicate item " + item.name + " in group " + g.name);
  }
  std::set<std::string> abbrevs;
  for (const auto& g : mm.groups)
    if (!g.abbrev.empty() && !abbrevs.insert(g.abbrev).second)
      problems.push_back("duplicate group abbreviation: " + g.abbrev);
  for (const auto& [sub, super] : mm.generalizations) {
    if (!names.count(sub)) problems.push_back("generalization from unknown group: " + sub);
    if (!names.count(super)) problems.push_back("generalization to unknown group: " + super);
  }
  for (const auto& assoc : mm.associations) {
    if (!names.count(assoc.group_a))
      problems.push_back("association references unknown group: " + assoc.group_a);
    if (!names.count(assoc.group_b))
      problems.push_back("association references unknown group: " + assoc.group_b);
  }
  // Cycle check: lineage() terminates because it tracks visited nodes, so a
  // cycle shows up as a group appearing in a strict ancestor's lineage.
  for (const auto& g : mm.groups) {
    for (const auto& super : mm.supergroups_of(g.name)) {
      auto lin = mm.lineage(super);
      if (std::find(lin.begin(), lin.end(), g.name) != lin.end())
        problems.push_back("generalization cycle through group: " + g.name);
    }
  }
  return problems;
}

const Metamodel& builtin_metamodel() {
  static const Metamodel mm = [] {
    Metamodel m;
    auto group = [&m](std::string name, std::string abbrev, bool abstract_,
                      std::vector<ItemDef> items) {
      m.groups.push_back({std::move(name), std::move(abbrev), abstract_, std::move(items)});
    };

    group("Config", "Cf", false, {{"deviceModel", ValueKind::string_}});
    group("Hostname", "Hn", false, {{"name", ValueKind::string_}});

    group("EthernetSetting", "", true,
          {{"port", ValueKind::string_}, {"ipAddress", ValueKind::ip_address}});
    group("VlanSetting", "", true, {{"vlanNum", ValueKind::integer}});
    group("StaticRouteSetting", "", true,
          {{"destination", ValueKind::string_}, {"nextHop", ValueKind::ip_address}});
    group("StpSetting", "", true, {});
    group("OspfSetting", "", true, {});
    group("AccessListSetting", "", true, {});

    group("CiscoEthernetSetting", "CES", false,
          {{"stack", ValueKind::integer},
           {"slot", ValueKind::integer},
           {"mode", ValueKind::string_},
           {"accessVlan", ValueKind::integer},
           {"accessListNumber", ValueKind::integer},
           {"accessListDirection", ValueKind::string_},
           {"shutdown", ValueKind::boolean}});
    group("CiscoVlanSetting", "CVS", false,
          {{"vlanName", ValueKind::string_},
           {"ipAddress", ValueKind::ip_address},
           {"subnetMask", ValueKind::ip_mask},
           {"shutdown", ValueKind::boolean},
           {"accessListNumber", ValueKind::integer},
           {"accessListDirection", ValueKind::string_}});
    group("CiscoStaticRouteSetting", "CSR", false, {{"mask", ValueKind::ip_mask}});
    group("CiscoStpSetting", "CST", false,
          {{"vlanNum", ValueKind::integer},
           {"priority", ValueKind::integer},
           {"mode", ValueKind::string_}});
    group("CiscoOspfSetting", "COS", false,
          {{"processId", ValueKind::integer}, {"routerId", ValueKind::ip_address}});
    group("OspfNetwork", "ON", false,
          {{"address", ValueKind::ip_address},
           {"wildcard", ValueKind::ip_mask},
           {"area", ValueKind::integer}});
    group("OspfVirtualLink", "OVL", false,
          {{"area", ValueKind::integer}, {"routerId", ValueKind::ip_address}});
    group("CiscoAccessList", "CAL", false,
          {{"number", ValueKind::integer},
           {"action", ValueKind::string_},
           {"protocol", ValueKind::string_},
           {"sourceAddress", ValueKind::ip_address},
           {"sourceWildcard", ValueKind::ip_mask},
           {"destinationAddress", ValueKind::ip_address},
           {"destinationWildcard", ValueKind::ip_mask},
           {"portOperator", ValueKind::string_},
           {"portNumber", ValueKind::integer},
           {"direction", ValueKind::string_}});

    group("YamahaEthernetSetting", "YES", false, {{"prefixLength", ValueKind::integer}});
    group("YamahaVlanSetting", "YVS", false, {{"port", ValueKind::string_}});
    group("YamahaStaticRouteSetting", "YSR", false, {{"prefixLength", ValueKind::integer}});

    m.generalizations = {
        {"CiscoEthernetSetting", "EthernetSetting"},
        {"YamahaEthernetSetting", "EthernetSetting"},
        {"CiscoVlanSetting", "VlanSetting"},
        {"YamahaVlanSetting", "VlanSetting"},
        {"CiscoStaticRouteSetting", "StaticRouteSetting"},
        {"YamahaStaticRouteSetting", "StaticRouteSetting"},
        {"CiscoStpSetting", "StpSetting"},
        {"CiscoOspfSetting", "OspfSetting"},
        {"CiscoAccessList", "AccessListSetting"},
    };

    m.associations = {
        {"Config", "Hostname", "1", "0..*"},
        {"Config", "EthernetSetting", "1", "0..*"},
        {"Config", "VlanSetting", "1", "0..*"},
        {"Config", "StaticRouteSetting", "1", "0..*"},
        {"Config", "StpSetting", "1", "0..*"},
        {"Config", "OspfSetting", "1", "0..*"},
        {"Config", "AccessListSetting", "1", "0..*"},
        {"OspfSetting", "OspfNetwork", "1", "0..*"},
        {"OspfSetting", "OspfVirtualLink", "1", "0..*"},
    };
    return m;
  }();
  return mm;
}

}  // namespace ncm
