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

#include <string>
#include <vector>

#include "ncm/mapping.hpp"
#include "ncm/model.hpp"
#include "ncm/parse_tree.hpp"

namespace ncm {

// Walks the tree depth-first and builds a model per the mapping table:
//  - a rule node named in some rule's subtree_root column opens a new group
//    value of that root's group, linked to the nearest enclosing open one;
//    the `file` node always opens the Config value;
//  - inside an open subtree, reaching a node named in a rule's parent column
//    checks that node's direct children for the target (token kind or rule
//    name). A Present rule fires per match, applying the full-match
//    original -> replaced rewrite (pass-through when original is empty). The
//    Absent rule of the same key fires when the parent's subtree ends with
//    no match, storing its replaced value;
//  - fired values land in the slot (group, item) of the open group value.
// Writing two different values to one slot is a slot_conflict error; equal
// repeated writes are idempotent. The result passes validate_model.
DeviceModel extract(const ParseTree& tree, const MappingTable& table, const Metamodel& mm);

struct MultiInput {
  std::string path;
  Vendor vendor = Vendor::cisco;
};

// Per-file outcome: either a model (error empty) or an error message.
// device_name is the Hostname value's name slot when present, else the
// file stem.
struct MultiResult {
  std::string path;
  std::string device_name;
  DeviceModel model;
  std::string error;
};

// Batch extraction with the builtin table of each input's vendor. A failing
// file reports its error without aborting the others. Results keep input
// order. extract_multi processes files in parallel when OpenMP is enabled;
// extract_multi_serial is the plain loop it must agree with.
std::vector<MultiResult> extract_multi(const std::vector<MultiInput>& inputs,
                                       const Metamodel& mm);
std::vector<MultiResult> extract_multi_serial(const std::vector<MultiInput>& inputs,
                                              const Metamodel& mm);

}  // namespace ncm
