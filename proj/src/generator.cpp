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
#include "ncm/generator.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncm/errors.hpp"
#include "ncm/extractor.hpp"
#include "ncm/parser.hpp"

namespace ncm {

std::string print_script(const CommandScript& script) {
  std::ostringstream out;
  for (const auto& line : script.lines) out << line << '\n';
  return out.str();
}

namespace {

const std::string* slot_of(const GroupValue& gv, const std::string& item) {
  auto it = gv.slots.find(item);
  return it == gv.slots.end() ? nullptr : &it->second;
}

// Resolves one placeholder; nullopt when an ordinary slot is unpopulated.
std::optional<std::string> resolve_placeholder(const std::string& name,
                                               const GroupValue& gv) {
  if (name == "portPath") {
    std::string path;
    for (const char* part : {"stack", "slot", "port"}) {
      if (const std::string* v = slot_of(gv, part)) {
        if (!path.empty()) path += '/';
        path += *v;
      }
    }
    if (!path.empty()) return path;
    return std::nullopt;
  }
  if (name == "routeTarget") {
    const std::string* dest = slot_of(gv, "destination");
    if (!dest) return std::nullopt;
    if (*dest == "default") return *dest;
    const std::string* prefix = slot_of(gv, "prefixLength");
    if (!prefix)
      throw GenerateError(GenerateError::Kind::missing_required_slot, gv.name,
                          "prefixLength",
                          gv.name + " has a network destination but no prefixLength");
    return *dest + "/" + *prefix;
  }
  if (const std::string* v = slot_of(gv, name)) return *v;
  return std::nullopt;
}

std::optional<std::string> render_clause(const TemplateClause& clause,
                                         const GroupValue& gv) {
  for (const auto& [item, expected] : clause.when) {
    const std::string* v = slot_of(gv, item);
    if (!v || *v != expected) return std::nullopt;
  }
  for (const auto& item : clause.when_absent)
    if (slot_of(gv, item)) return std::nullopt;

  std::string out;
  std::size_t i = 0;
  while (i < clause.pattern.size()) {
    char c = clause.pattern[i];
    if (c != '{') {
      out += c;
      ++i;
      continue;
    }
    std::size_t close = clause.pattern.find('}', i);
    std::string name = clause.pattern.substr(i + 1, close - i - 1);
    auto value = resolve_placeholder(name, gv);
    if (!value) return std::nullopt;
    out += *value;
    i = close + 1;
  }
  return out;
}

std::optional<std::string> render_line(const TemplateLine& line, const GroupValue& gv) {
  std::string out;
  bool first = true;
  for (const auto& clause : line.clauses) {
    auto rendered = render_clause(clause, gv);
    if (!rendered) {
      if (first) return std::nullopt;  // the leading clause gates the line
      continue;
    }
    if (!first && !out.empty() && !rendered->empty()) out += ' ';
    out += *rendered;
    first = false;
  }
  return out;
}

TemplateLine line1(std::string pattern, std::map<std::string, std::string> when = {},
                   std::vector<std::string> when_absent = {}) {
  return {{{std::move(pattern), std::move(when), std::move(when_absent)}}};
}

EmitTemplate base_template(std::string id, std::string group,
                           std::vector<std::string> required,
                           std::vector<TemplateLine> lines) {
  EmitTemplate t;
  t.id = std::move(id);
  t.group = std::move(group);
  t.required = std::move(required);
  t.lines = std::move(lines);
  return t;
}

std::vector<EmitTemplate> make_cisco_templates() {
  std::vector<EmitTemplate> out;

  out.push_back(
      base_template("cisco.hostname", "Hostname", {"name"}, {line1("hostname {name}")}));

  // A VLAN declaration: a CiscoVlanSetting never touched by the interface
  // Present/Absent shutdown pair.
  EmitTemplate vlan_decl =
      base_template("cisco.vlan_decl", "CiscoVlanSetting", {"vlanNum"},
                    {line1("vlan {vlanNum}"), line1("name {vlanName}")});
  vlan_decl.selector_absent = {"shutdown"};
  vlan_decl.optional = {"vlanName"};
  vlan_decl.mode_exit = "exit";
  out.push_back(std::move(vlan_decl));

  EmitTemplate ethernet = base_template(
      "cisco.ethernet", "CiscoEthernetSetting", {"port"},
      {line1("interface fastethernet {portPath}"),
       line1("shutdown", {{"shutdown", "true"}}),
       line1("no shutdown", {{"shutdown", "false"}}), line1("switchport mode {mode}"),
       line1("switchport access vlan {accessVlan}"),
       line1("ip access-group {accessListNumber} {accessListDirection}")});
  ethernet.optional = {"stack",      "slot",       "shutdown",        "mode",
                       "accessVlan", "accessListNumber", "accessListDirection"};
  ethernet.mode_exit = "exit";
  out.push_back(std::move(ethernet));

  EmitTemplate vlan_iface = base_template(
      "cisco.vlan_interface", "CiscoVlanSetting", {"vlanNum"},
      {line1("interface vlan {vlanNum}"), line1("shutdown", {{"shutdown", "true"}}),
       line1("no shutdown", {{"shutdown", "false"}}),
       line1("ip address {ipAddress} {subnetMask}"),
       line1("ip access-group {accessListNumber} {accessListDirection}")});
  vlan_iface.selector_present = {"shutdown"};
  vlan_iface.optional = {"ipAddress", "subnetMask", "accessListNumber",
                         "accessListDirection"};
  vlan_iface.mode_exit = "exit";
  out.push_back(std::move(vlan_iface));

  out.push_back(base_template("cisco.static_route", "CiscoStaticRouteSetting",
                              {"destination", "mask", "nextHop"},
                              {line1("ip route {destination} {mask} {nextHop}")}));

  EmitTemplate stp_vlan =
      base_template("cisco.stp_vlan", "CiscoStpSetting", {"vlanNum", "priority"},
                    {line1("spanning-tree vlan {vlanNum} priority {priority}")});
  stp_vlan.selector_present = {"vlanNum"};
  out.push_back(std::move(stp_vlan));

  EmitTemplate stp_mode = base_template("cisco.stp_mode", "CiscoStpSetting", {"mode"},
                                        {line1("spanning-tree mode {mode}")});
  stp_mode.selector_present = {"mode"};
  stp_mode.selector_absent = {"vlanNum"};
  out.push_back(std::move(stp_mode));

  EmitTemplate ospf =
      base_template("cisco.ospf", "CiscoOspfSetting", {"processId"},
                    {line1("router ospf {processId}"), line1("router-id {routerId}")});
  ospf.optional = {"routerId"};
  ospf.mode_exit = "exit";
  ospf.child_groups = {"OspfVirtualLink", "OspfNetwork"};
  out.push_back(std::move(ospf));

  EmitTemplate vlink =
      base_template("cisco.ospf_virtual_link", "OspfVirtualLink", {"area", "routerId"},
                    {line1("area {area} virtual-link {routerId}")});
  vlink.child_only = true;
  out.push_back(std::move(vlink));

  EmitTemplate network =
      base_template("cisco.ospf_network", "OspfNetwork", {"address", "wildcard", "area"},
                    {line1("network {address} {wildcard} area {area}")});
  network.child_only = true;
  out.push_back(std::move(network));

  // The port clause is optional: an access list lacking port items still
  // emits its base line.
  TemplateLine acl_line;
  acl_line.clauses.push_back(
      {"access-list {number} {action} {protocol} {sourceAddress} {sourceWildcard} "
       "{destinationAddress} {destinationWildcard}",
       {},
       {}});
  acl_line.clauses.push_back({"{portOperator} {portNumber}", {}, {}});
  EmitTemplate acl = base_template(
      "cisco.access_list", "CiscoAccessList",
      {"number", "action", "protocol", "sourceAddress", "sourceWildcard",
       "destinationAddress", "destinationWildcard"},
      {acl_line});
  acl.optional = {"portOperator", "portNumber"};
  out.push_back(std::move(acl));

  return out;
}

std::vector<EmitTemplate> make_yamaha_templates() {
  std::vector<EmitTemplate> out;
  out.push_back(base_template("yamaha.vlan", "YamahaVlanSetting", {"port", "vlanNum"},
                              {line1("vlan {port} 802.1q vid={vlanNum}")}));
  out.push_back(base_template("yamaha.if_address", "YamahaEthernetSetting",
                              {"port", "ipAddress", "prefixLength"},
                              {line1("ip {port} address {ipAddress}/{prefixLength}")}));
  EmitTemplate route =
      base_template("yamaha.static_route", "YamahaStaticRouteSetting",
                    {"destination", "nextHop"},
                    {line1("ip route {routeTarget} gateway {nextHop}")});
  route.optional = {"prefixLength"};
  out.push_back(std::move(route));
  return out;
}

bool selectors_match(const EmitTemplate& tpl, const GroupValue& gv) {
  for (const auto& item : tpl.selector_present)
    if (!slot_of(gv, item)) return false;
  for (const auto& item : tpl.selector_absent)
    if (slot_of(gv, item)) return false;
  return true;
}

class Generation {
 public:
  Generation(const DeviceModel& model, const Metamodel& mm,
             const std::vector<EmitTemplate>& templates, Vendor vendor)
      : model_(model), mm_(mm), templates_(templates) {
    script_.vendor = vendor;
  }

  CommandScript run() {
    auto violations = validate_model(model_, mm_);
    if (!violations.empty())
      throw GenerateError(GenerateError::Kind::invalid_model, violations.front().subject,
                          "",
                          "model does not validate: " +
                              violation_code_name(violations.front().code) + " on " +
                              violations.front().subject);

    if (script_.vendor == Vendor::cisco) {
      script_.lines.push_back("enable");
      script_.lines.push_back("configure terminal");
    }
    for (const auto& tpl : templates_) {
      if (tpl.child_only) continue;
      for (const GroupValue* gv : values_of(tpl.group)) {
        if (!selectors_match(tpl, *gv)) continue;
        emit(tpl, *gv);
      }
    }
    // Config has no command form. Anything else must at least have a
    // template available, or the model cannot be expressed in this vendor's
    // command language.
    for (const auto& gv : model_.group_values) {
      if (gv.group == "Config" || emitted_.count(gv.name)) continue;
      bool known = std::any_of(templates_.begin(), templates_.end(),
                               [&gv](const EmitTemplate& tpl) { return tpl.group == gv.group; });
      if (!known)
        throw GenerateError(GenerateError::Kind::unknown_group, gv.name, "",
                            "no emit template for group " + gv.group);
    }
    if (script_.vendor == Vendor::cisco) {
      script_.lines.push_back("exit");
      script_.lines.push_back("copy running-config startup-config");
    }
    return std::move(script_);
  }

 private:
  // Values of `group` in name order. A value already emitted through an
  // earlier template (two templates can share a group) is not re-emitted.
  std::vector<const GroupValue*> values_of(const std::string& group) {
    std::vector<const GroupValue*> out;
    for (const auto& gv : model_.group_values)
      if (gv.group == group && !emitted_.count(gv.name)) out.push_back(&gv);
    std::sort(out.begin(), out.end(),
              [](const GroupValue* a, const GroupValue* b) { return a->name < b->name; });
    return out;
  }

  std::vector<const GroupValue*> linked_values_of(const GroupValue& parent,
                                                  const std::string& group) {
    std::set<std::string> linked;
    for (const auto& [a, b] : model_.links) {
      if (a == parent.name) linked.insert(b);
      if (b == parent.name) linked.insert(a);
    }
    std::vector<const GroupValue*> out;
    for (const auto& gv : model_.group_values)
      if (gv.group == group && linked.count(gv.name)) out.push_back(&gv);
    std::sort(out.begin(), out.end(),
              [](const GroupValue* a, const GroupValue* b) { return a->name < b->name; });
    return out;
  }

  const EmitTemplate* template_for(const std::string& group, const GroupValue& gv) const {
    for (const auto& tpl : templates_)
      if (tpl.group == group && selectors_match(tpl, gv)) return &tpl;
    return nullptr;
  }

  void emit(const EmitTemplate& tpl, const GroupValue& gv) {
    for (const auto& item : tpl.required)
      if (!slot_of(gv, item))
        throw GenerateError(GenerateError::Kind::missing_required_slot, gv.name, item,
                            gv.name + " (" + gv.group + ") is missing required item " +
                                item);
    emitted_.insert(gv.name);
    bool entered = false;
    for (std::size_t i = 0; i < tpl.lines.size(); ++i) {
      auto rendered = render_line(tpl.lines[i], gv);
      if (!rendered) {
        if (i == 0) return;  // no mode entry, nothing to emit
        continue;
      }
      script_.lines.push_back(*rendered);
      if (i == 0) entered = true;
    }
    for (const auto& child_group : tpl.child_groups) {
      for (const GroupValue* child : linked_values_of(gv, child_group)) {
        const EmitTemplate* child_tpl = template_for(child_group, *child);
        if (child_tpl) emit(*child_tpl, *child);
      }
    }
    if (entered && !tpl.mode_exit.empty()) script_.lines.push_back(tpl.mode_exit);
  }

  const DeviceModel& model_;
  const Metamodel& mm_;
  const std::vector<EmitTemplate>& templates_;
  CommandScript script_;
  std::set<std::string> emitted_;
};

Vendor infer_vendor(const DeviceModel& model) {
  bool cisco = false;
  bool yamaha = false;
  for (const auto& gv : model.group_values) {
    if (gv.group.rfind("Cisco", 0) == 0 || gv.group == "OspfNetwork" ||
        gv.group == "OspfVirtualLink")
      cisco = true;
    if (gv.group.rfind("Yamaha", 0) == 0) yamaha = true;
  }
  if (cisco && yamaha)
    throw GenerateError(GenerateError::Kind::mixed_vendor, "", "",
                        "model mixes Cisco and Yamaha group values");
  return yamaha ? Vendor::yamaha : Vendor::cisco;
}

}  // namespace

const std::vector<EmitTemplate>& default_templates(Vendor vendor) {
  static const std::vector<EmitTemplate> cisco = make_cisco_templates();
  static const std::vector<EmitTemplate> yamaha = make_yamaha_templates();
  return vendor == Vendor::cisco ? cisco : yamaha;
}

CommandScript generate_with(const DeviceModel& model, const Metamodel& mm,
                            const std::vector<EmitTemplate>& templates, Vendor vendor) {
  return Generation(model, mm, templates, vendor).run();
}

CommandScript generate(const DeviceModel& model, const Metamodel& mm) {
  Vendor vendor = infer_vendor(model);
  return generate_with(model, mm, default_templates(vendor), vendor);
}

bool mode_balanced(const CommandScript& script) {
  int depth = 0;
  for (const auto& line : script.lines) {
    if (line == "exit") {
      if (depth == 0) return false;
      --depth;
      continue;
    }
    bool enters = line == "configure terminal" || line.rfind("interface ", 0) == 0 ||
                  line.rfind("router ", 0) == 0;
    if (!enters && line.rfind("vlan ", 0) == 0)
      enters = line.find_first_not_of("0123456789", 5) == std::string::npos;
    if (enters) ++depth;
  }
  return depth == 0;
}

RoundtripResult roundtrip_check(const std::string& config_text, Vendor vendor,
                                const MappingTable& table, const Metamodel& mm,
                                const std::vector<EmitTemplate>* templates) {
  RoundtripResult result;
  ParseTree first_tree = parse_text(config_text, vendor);
  result.first = extract(first_tree, table, mm);
  result.script = templates
                      ? generate_with(result.first, mm, *templates, vendor)
                      : generate_with(result.first, mm, default_templates(vendor), vendor);
  ParseTree second_tree = parse_text(print_script(result.script), vendor);
  result.second = extract(second_tree, table, mm);
  result.diff = model_diff(result.first, result.second, {"Config.deviceModel"});
  result.equal = result.diff.empty();
  return result;
}

}  // namespace ncm
