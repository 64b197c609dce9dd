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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncm/metamodel.hpp"

namespace ncm {

// One instantiated group: a named bag of item values ("slots").
struct GroupValue {
  std::string name;   // unique within a model, e.g. "CES1"
  std::string group;  // concrete group this instantiates
  std::map<std::string, std::string> slots;

  bool operator==(const GroupValue&) const = default;
};

// A device configuration model: group values plus undirected links.
struct DeviceModel {
  std::vector<GroupValue> group_values;
  std::vector<std::pair<std::string, std::string>> links;

  GroupValue* find(const std::string& name);
  const GroupValue* find(const std::string& name) const;
};

enum class ViolationCode {
  duplicate_group_value_name,
  unknown_group,
  abstract_group,
  unknown_item,
  bad_value_kind,
  missing_config,
  multiple_config,
  dangling_link,
  illegal_link,
};

std::string violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string subject;  // group-value name, link endpoint, or item path
  std::string detail;
};

// Checks a model against the metamodel: every group value names a concrete
// group, every slot names an item visible on that group with a value of the
// item's kind, exactly one Config exists, and every link joins existing
// values along a declared association. Returns all violations found.
std::vector<Violation> validate_model(const DeviceModel& model, const Metamodel& mm);

// JSON round-trip. Serialization is deterministic: group values sorted by
// name, links as sorted pairs sorted overall.
std::string serialize_model(const DeviceModel& model);
// Throws ModelSchemaError on malformed JSON or names unknown to `mm`.
DeviceModel deserialize_model(const std::string& text, const Metamodel& mm);
DeviceModel load_model_file(const std::string& path, const Metamodel& mm);

// Renames group values to a canonical scheme derived from content rather
// than discovery order, so two extractions of equivalent configurations
// compare equal. Links are rewritten to the new names.
DeviceModel canonicalize_model(const DeviceModel& model);

// Human-readable difference report between canonicalized models; empty when
// they are equivalent. `ignore_items` drops the named slots (as
// "Group.item") from both sides before comparing.
std::vector<std::string> model_diff(const DeviceModel& lhs, const DeviceModel& rhs,
                                    const std::set<std::string>& ignore_items = {});
bool model_equal(const DeviceModel& lhs, const DeviceModel& rhs,
                 const std::set<std::string>& ignore_items = {});

// Size figures used by the reporting command.
struct ModelStats {
  std::size_t group_value_count = 0;
  std::size_t link_count = 0;
  std::size_t slot_value_count = 0;
  // Distinct (defining group, item) pairs among populated slots; inherited
  // items count once for the group that defines them.
  std::size_t distinct_item_kinds = 0;
};

ModelStats model_stats(const DeviceModel& model, const Metamodel& mm);
// Aggregate over several models: counts are summed, distinct item kinds are
// unioned.
ModelStats model_stats(const std::vector<DeviceModel>& models, const Metamodel& mm);

}  // namespace ncm
