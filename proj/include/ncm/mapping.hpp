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

#include "ncm/lexer.hpp"
#include "ncm/metamodel.hpp"

namespace ncm {

enum class Presence { present, absent };

// One row of the mapping table that drives extraction. The parse-tree side
// names where to look (a subtree root rule, the parent rule of the target,
// and the target: a token kind or a rule name). The processing side gives a
// full-match regex rewrite; empty original/replaced means pass the matched
// text through unchanged. The model side names the slot written.
struct MappingRule {
  std::string subtree_root;
  std::string parent;
  std::string target;
  Presence presence = Presence::present;
  std::string original;
  std::string replaced;
  std::string group;
  std::string item;

  bool operator==(const MappingRule&) const = default;
};

struct MappingTable {
  Vendor vendor = Vendor::cisco;
  std::vector<MappingRule> rules;

  bool operator==(const MappingTable&) const = default;
};

// Structural diagnostics for a table against `mm`: presence pairing, regex
// validity, group/item resolution, root-group consistency, duplicate keys.
// `labels` optionally maps rule index to a location string for messages.
std::vector<std::string> check_mapping(const MappingTable& table, const Metamodel& mm,
                                       const std::vector<std::string>& labels = {});

// Parses the 8-column TSV format (header row required, `#` comments
// allowed) and validates the result. Throws MappingLoadError carrying all
// per-row diagnostics, or IoError when the file cannot be read.
MappingTable load_mapping(const std::string& path, Vendor vendor = Vendor::cisco);
MappingTable load_mapping_text(const std::string& text, Vendor vendor = Vendor::cisco);

// Emits the TSV form (header + rows, no comments). load_mapping_text of the
// result reproduces the table exactly.
std::string serialize_mapping(const MappingTable& table);

// Embedded tables for the two grammars; validated by construction.
const MappingTable& builtin_cisco_table();
const MappingTable& builtin_yamaha_table();
const MappingTable& builtin_table(Vendor vendor);

}  // namespace ncm
