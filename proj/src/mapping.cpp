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
#include "ncm/mapping.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "ncm/errors.hpp"
#include "ncm/parser.hpp"

namespace ncm {

namespace {

constexpr const char* kHeader =
    "subtree_root\tparent\ttarget\tpresence\toriginal\treplaced\tgroup\titem";

bool known_rule(Vendor vendor, const std::string& name) {
  const auto& names = rule_names(vendor);
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool known_target(Vendor vendor, const std::string& name) {
  TokenKind k;
  return known_rule(vendor, name) || kind_from_name(name, k);
}

std::string row_label(const std::vector<std::string>& labels, std::size_t i) {
  if (i < labels.size()) return labels[i];
  return "rule " + std::to_string(i + 1);
}

}  // namespace

std::vector<std::string> check_mapping(const MappingTable& table, const Metamodel& mm,
                                       const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  // key = (root, parent, target, presence); at most one of each
  std::map<std::tuple<std::string, std::string, std::string, Presence>, std::size_t> keys;
  std::map<std::string, std::string> root_group;

  for (std::size_t i = 0; i < table.rules.size(); ++i) {
    const MappingRule& r = table.rules[i];
    const std::string at = " at " + row_label(labels, i);

    if (r.subtree_root.empty() || r.parent.empty() || r.target.empty() ||
        r.group.empty() || r.item.empty()) {
      out.push_back("empty column" + at);
      continue;
    }
    if (!known_rule(table.vendor, r.subtree_root))
      out.push_back("unknown subtree root rule '" + r.subtree_root + "'" + at);
    if (!known_rule(table.vendor, r.parent))
      out.push_back("unknown parent rule '" + r.parent + "'" + at);
    if (!known_target(table.vendor, r.target))
      out.push_back("unknown target '" + r.target + "'" + at);

    if (r.presence == Presence::present) {
      if (r.original.empty() != r.replaced.empty())
        out.push_back("original and replaced must be both empty or both set" + at);
    } else if (r.replaced.empty()) {
      out.push_back("Absent rule needs a replaced value" + at);
    }
    if (!r.original.empty()) {
      try {
        std::regex probe(r.original);
      } catch (const std::regex_error& e) {
        out.push_back("bad regex '" + r.original + "' (" + e.what() + ")" + at);
      }
    }

    const GroupDef* def = mm.find_group(r.group);
    if (!def) {
      out.push_back("unknown specification item group '" + r.group + "'" + at);
    } else {
      if (def->abstract_)
        out.push_back("group '" + r.group + "' is abstract" + at);
      if (!mm.find_item(r.group, r.item))
        out.push_back("group '" + r.group + "' has no item '" + r.item + "'" + at);
    }

    auto key = std::make_tuple(r.subtree_root, r.parent, r.target, r.presence);
    auto [it, inserted] = keys.emplace(key, i);
    if (!inserted)
      out.push_back("duplicate key (" + r.subtree_root + ", " + r.parent + ", " +
                    r.target + ") for the same presence" + at);

    // Every rule sharing a subtree root must write into the same group: the
    // root opens exactly one group value.
    auto [git, ginserted] = root_group.emplace(r.subtree_root, r.group);
    if (!ginserted && git->second != r.group)
      out.push_back("subtree root '" + r.subtree_root + "' maps to both '" + git->second +
                    "' and '" + r.group + "'" + at);
    if (r.subtree_root == "file" && r.group != "Config")
      out.push_back("rules rooted at 'file' must target Config" + at);
  }

  for (std::size_t i = 0; i < table.rules.size(); ++i) {
    const MappingRule& r = table.rules[i];
    if (r.presence != Presence::absent) continue;
    auto sibling = std::make_tuple(r.subtree_root, r.parent, r.target, Presence::present);
    if (!keys.count(sibling))
      out.push_back("Absent rule without a Present sibling at " + row_label(labels, i));
  }
  return out;
}

namespace {

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

MappingTable load_mapping_text(const std::string& text, Vendor vendor) {
  MappingTable table;
  table.vendor = vendor;
  std::vector<std::string> labels;
  std::vector<std::string> diagnostics;
  bool header_seen = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;

    if (!header_seen) {
      if (line != kHeader)
        diagnostics.push_back("missing or wrong header row at line " +
                              std::to_string(lineno));
      header_seen = true;
      if (line == kHeader) continue;
      // A wrong header is reported once; do not also parse it as a row.
      continue;
    }

    auto cols = split_tsv(line);
    if (cols.size() != 8) {
      diagnostics.push_back("expected 8 tab-separated columns, got " +
                            std::to_string(cols.size()) + " at line " +
                            std::to_string(lineno));
      continue;
    }
    MappingRule r;
    r.subtree_root = cols[0];
    r.parent = cols[1];
    r.target = cols[2];
    if (cols[3] == "Present") {
      r.presence = Presence::present;
    } else if (cols[3] == "Absent") {
      r.presence = Presence::absent;
    } else {
      diagnostics.push_back("presence must be Present or Absent, got '" + cols[3] +
                            "' at line " + std::to_string(lineno));
      continue;
    }
    r.original = cols[4];
    r.replaced = cols[5];
    r.group = cols[6];
    r.item = cols[7];
    table.rules.push_back(std::move(r));
    labels.push_back("line " + std::to_string(lineno));
  }

  if (!header_seen) diagnostics.push_back("empty mapping file: header row required");
  auto structural = check_mapping(table, builtin_metamodel(), labels);
  diagnostics.insert(diagnostics.end(), structural.begin(), structural.end());
  if (!diagnostics.empty()) {
    std::string msg = "mapping table invalid (" + std::to_string(diagnostics.size()) +
                      " problem" + (diagnostics.size() == 1 ? "" : "s") +
                      "): " + diagnostics.front();
    throw MappingLoadError(std::move(diagnostics), msg);
  }
  return table;
}

MappingTable load_mapping(const std::string& path, Vendor vendor) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_mapping_text(buf.str(), vendor);
}

std::string serialize_mapping(const MappingTable& table) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& r : table.rules) {
    out << r.subtree_root << '\t' << r.parent << '\t' << r.target << '\t'
        << (r.presence == Presence::present ? "Present" : "Absent") << '\t'
        << r.original << '\t' << r.replaced << '\t' << r.group << '\t' << r.item
        << '\n';
  }
  return out.str();
}

namespace {

MappingRule row(std::string root, std::string parent, std::string target,
                Presence presence, std::string original, std::string replaced,
                std::string group, std::string item) {
  return {std::move(root),     std::move(parent),   std::move(target), presence,
          std::move(original), std::move(replaced), std::move(group),  std::move(item)};
}

MappingTable make_cisco_table() {
  const Presence P = Presence::present;
  const Presence A = Presence::absent;
  MappingTable t;
  t.vendor = Vendor::cisco;
  t.rules = {
      row("hostname", "hostname", "any", P, "", "", "Hostname", "name"),
      row("ethernet", "port", "NUM", P, "", "", "CiscoEthernetSetting", "port"),
      row("ethernet", "interface_setting", "SHUTDOWN", P, ".+", "true",
          "CiscoEthernetSetting", "shutdown"),
      row("ethernet", "interface_setting", "SHUTDOWN", A, ".*", "false",
          "CiscoEthernetSetting", "shutdown"),
      row("ethernet", "access_vlan", "MODE_SETTING", P, "", "", "CiscoEthernetSetting",
          "mode"),
      row("ethernet", "vlan_num", "NUM", P, "", "", "CiscoEthernetSetting", "accessVlan"),
      row("if_vlan", "if_vlan", "NUM", P, "", "", "CiscoVlanSetting", "vlanNum"),
      row("if_vlan", "interface_setting", "SHUTDOWN", P, ".+", "true", "CiscoVlanSetting",
          "shutdown"),
      row("if_vlan", "interface_setting", "SHUTDOWN", A, ".*", "false", "CiscoVlanSetting",
          "shutdown"),
      row("if_vlan", "ip_address", "IP_ADDRESS_NUM", P, "", "", "CiscoVlanSetting",
          "ipAddress"),
      row("if_vlan", "subnet_mask", "IP_ADDRESS_NUM", P, "", "", "CiscoVlanSetting",
          "subnetMask"),
      // Rows below extend the published set to the rest of the grammar.
      row("ethernet", "stack", "NUM", P, "", "", "CiscoEthernetSetting", "stack"),
      row("ethernet", "slot", "NUM", P, "", "", "CiscoEthernetSetting", "slot"),
      row("ethernet", "port_mode", "MODE_SETTING", P, "", "", "CiscoEthernetSetting",
          "mode"),
      row("ethernet", "trunk", "MODE_SETTING", P, "", "", "CiscoEthernetSetting", "mode"),
      row("ethernet", "access_group", "NUM", P, "", "", "CiscoEthernetSetting",
          "accessListNumber"),
      row("ethernet", "access_group", "DIRECTION", P, "", "", "CiscoEthernetSetting",
          "accessListDirection"),
      row("if_vlan", "access_group", "NUM", P, "", "", "CiscoVlanSetting",
          "accessListNumber"),
      row("if_vlan", "access_group", "DIRECTION", P, "", "", "CiscoVlanSetting",
          "accessListDirection"),
      row("vlan_decl", "vlan_decl", "NUM", P, "", "", "CiscoVlanSetting", "vlanNum"),
      row("vlan_decl", "vlan_name", "any", P, "", "", "CiscoVlanSetting", "vlanName"),
      row("static_route", "route_dest", "IP_ADDRESS_NUM", P, "", "",
          "CiscoStaticRouteSetting", "destination"),
      row("static_route", "route_mask", "IP_ADDRESS_NUM", P, "", "",
          "CiscoStaticRouteSetting", "mask"),
      row("static_route", "route_nexthop", "IP_ADDRESS_NUM", P, "", "",
          "CiscoStaticRouteSetting", "nextHop"),
      row("stp", "vlan_num", "NUM", P, "", "", "CiscoStpSetting", "vlanNum"),
      row("stp", "stp_priority", "NUM", P, "", "", "CiscoStpSetting", "priority"),
      row("stp", "stp_mode", "any", P, "", "", "CiscoStpSetting", "mode"),
      row("ospf", "ospf", "NUM", P, "", "", "CiscoOspfSetting", "processId"),
      row("ospf", "ospf_router_id", "IP_ADDRESS_NUM", P, "", "", "CiscoOspfSetting",
          "routerId"),
      row("ospf_network", "net_address", "IP_ADDRESS_NUM", P, "", "", "OspfNetwork",
          "address"),
      row("ospf_network", "net_wildcard", "IP_ADDRESS_NUM", P, "", "", "OspfNetwork",
          "wildcard"),
      row("ospf_network", "net_area", "NUM", P, "", "", "OspfNetwork", "area"),
      row("ospf_virtual_link", "vl_area", "NUM", P, "", "", "OspfVirtualLink", "area"),
      row("ospf_virtual_link", "vl_router_id", "IP_ADDRESS_NUM", P, "", "",
          "OspfVirtualLink", "routerId"),
      row("acl", "acl_num", "NUM", P, "", "", "CiscoAccessList", "number"),
      row("acl", "acl_action", "ACL_ACTION", P, "", "", "CiscoAccessList", "action"),
      row("acl", "acl", "acl_protocol", P, "", "", "CiscoAccessList", "protocol"),
      row("acl", "acl_src", "IP_ADDRESS_NUM", P, "", "", "CiscoAccessList",
          "sourceAddress"),
      row("acl", "acl_src_wc", "IP_ADDRESS_NUM", P, "", "", "CiscoAccessList",
          "sourceWildcard"),
      row("acl", "acl_dst", "IP_ADDRESS_NUM", P, "", "", "CiscoAccessList",
          "destinationAddress"),
      row("acl", "acl_dst_wc", "IP_ADDRESS_NUM", P, "", "", "CiscoAccessList",
          "destinationWildcard"),
      row("acl", "acl_port", "EQ", P, "", "", "CiscoAccessList", "portOperator"),
      row("acl", "acl_port", "NUM", P, "", "", "CiscoAccessList", "portNumber"),
      row("file", "version_info", "MODEL_NAME", P, "", "", "Config", "deviceModel"),
  };
  return t;
}

MappingTable make_yamaha_table() {
  const Presence P = Presence::present;
  MappingTable t;
  t.vendor = Vendor::yamaha;
  t.rules = {
      row("if_address", "if_address", "lan_port", P, "", "", "YamahaEthernetSetting",
          "port"),
      row("if_address", "ip_address", "IP_ADDRESS_NUM", P, "", "",
          "YamahaEthernetSetting", "ipAddress"),
      row("if_address", "prefix_length", "NUM", P, "", "", "YamahaEthernetSetting",
          "prefixLength"),
      row("static_route", "route_dest", "DEFAULT", P, "", "", "YamahaStaticRouteSetting",
          "destination"),
      row("static_route", "ip_address", "IP_ADDRESS_NUM", P, "", "",
          "YamahaStaticRouteSetting", "destination"),
      row("static_route", "prefix_length", "NUM", P, "", "", "YamahaStaticRouteSetting",
          "prefixLength"),
      row("static_route", "route_gateway", "IP_ADDRESS_NUM", P, "", "",
          "YamahaStaticRouteSetting", "nextHop"),
      row("vlan_assign", "vlan_assign", "lan_port", P, "", "", "YamahaVlanSetting",
          "port"),
      row("vlan_assign", "vid", "NUM", P, "", "", "YamahaVlanSetting", "vlanNum"),
  };
  return t;
}

}  // namespace

const MappingTable& builtin_cisco_table() {
  static const MappingTable t = make_cisco_table();
  return t;
}

const MappingTable& builtin_yamaha_table() {
  static const MappingTable t = make_yamaha_table();
  return t;
}

const MappingTable& builtin_table(Vendor vendor) {
  return vendor == Vendor::cisco ? builtin_cisco_table() : builtin_yamaha_table();
}

}  // namespace ncm
