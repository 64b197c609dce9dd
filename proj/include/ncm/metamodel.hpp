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
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ncm {

// Lexical value categories for item validation.
enum class ValueKind { string_, integer, boolean, ip_address, ip_mask };

std::string value_kind_name(ValueKind kind);
// Lexical check only: integer [0-9]+, boolean true|false, ip-address and
// ip-mask four dotted octets in 0..255, string anything.
bool value_matches_kind(const std::string& value, ValueKind kind);

struct ItemDef {
  std::string name;
  ValueKind kind;
};

struct GroupDef {
  std::string name;
  std::string abbrev;  // used for generated group-value names
  bool abstract_ = false;
  std::vector<ItemDef> items;
};

struct Association {
  std::string group_a;
  std::string group_b;
  std::string mult_a;  // descriptive only, not enforced
  std::string mult_b;
};

// Group definitions plus the generalization edges (sub, super) and the
// associations links must conform to.
struct Metamodel {
  std::vector<GroupDef> groups;
  std::vector<std::pair<std::string, std::string>> generalizations;
  std::vector<Association> associations;

  const GroupDef* find_group(const std::string& name) const;
  // Direct supergroups of `name`.
  std::vector<std::string> supergroups_of(const std::string& name) const;
  // `name` plus all its ancestors.
  std::vector<std::string> lineage(const std::string& name) const;
  // Items visible on `group` (own plus inherited), each with the group that
  // defines it.
  std::vector<std::pair<ItemDef, std::string>> item_closure(const std::string& group) const;
  // The defining group of `item` as seen from `group`, if any.
  std::optional<std::string> defining_group(const std::string& group,
                                            const std::string& item) const;
  const ItemDef* find_item(const std::string& group, const std::string& item) const;
  // True when some association relates the two groups, either directly or
  // through their ancestors, in either direction.
  bool association_allows(const std::string& group_a, const std::string& group_b) const;
};

// Structural problems in a metamodel (duplicate names, cyclic
// generalizations, dangling references). Empty for the builtin metamodel.
std::vector<std::string> check_metamodel(const Metamodel& mm);

// The fixed metamodel this artifact ships: a vendor-neutral layer
// (EthernetSetting, VlanSetting, StaticRouteSetting, StpSetting,
// OspfSetting, AccessListSetting) with cisco/yamaha specializations,
// Hostname, Config, and the OSPF child groups.
const Metamodel& builtin_metamodel();

}  // namespace ncm
