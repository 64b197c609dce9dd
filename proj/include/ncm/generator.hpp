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
#include <optional>
#include <string>
#include <vector>

#include "ncm/mapping.hpp"
#include "ncm/model.hpp"

namespace ncm {

struct CommandScript {
  Vendor vendor = Vendor::cisco;
  std::vector<std::string> lines;
};

// Lines joined with LF, trailing newline.
std::string print_script(const CommandScript& script);

// One renderable fragment of a command line. `pattern` may hold {item}
// placeholders plus the computed {portPath} (stack/slot/port joined with
// '/') and {routeTarget} ("default" or destination/prefixLength). A clause
// renders only when every placeholder resolves, every `when` entry matches
// the slot exactly, and no `when_absent` item is populated.
struct TemplateClause {
  std::string pattern;
  std::map<std::string, std::string> when;
  std::vector<std::string> when_absent;
};

// A command line assembled from clauses: the first clause gates the line;
// renders of all applicable clauses are joined with single spaces.
struct TemplateLine {
  std::vector<TemplateClause> clauses;
};

// How one group's values become command lines. A group may have several
// templates distinguished by selectors (e.g. a VLAN declaration vs a VLAN
// interface); the first template whose selectors match the value is used.
struct EmitTemplate {
  std::string id;
  std::string group;
  std::vector<std::string> selector_present;
  std::vector<std::string> selector_absent;
  std::vector<std::string> required;  // missing -> MissingRequiredSlot
  std::vector<std::string> optional;  // missing -> clause/line omitted
  std::vector<TemplateLine> lines;    // first line is the mode entry if any
  std::string mode_exit;              // emitted after children when non-empty
  std::vector<std::string> child_groups;  // linked values emitted inside the mode
  bool child_only = false;                // emitted only through a parent template
};

// The shipped template sets, in emission category order.
const std::vector<EmitTemplate>& default_templates(Vendor vendor);

// Emits commands for the model: cisco scripts are framed by enable /
// configure terminal ... exit / copy running-config startup-config and use
// lowercase keywords; group values are emitted template-order first, then
// name order. Values whose selectors match no template are skipped.
// Throws GenerateError on missing required slots, unknown concrete groups,
// mixed-vendor models, or a model failing validation.
CommandScript generate(const DeviceModel& model, const Metamodel& mm);
CommandScript generate_with(const DeviceModel& model, const Metamodel& mm,
                            const std::vector<EmitTemplate>& templates, Vendor vendor);

// True when mode-entering lines (configure terminal, interface/router/vlan)
// and `exit` lines balance like parentheses.
bool mode_balanced(const CommandScript& script);

struct RoundtripResult {
  bool equal = false;
  std::vector<std::string> diff;
  DeviceModel first;
  DeviceModel second;
  CommandScript script;
};

// extract -> generate -> print -> re-parse -> re-extract, comparing the two
// models under canonical renaming. Config.deviceModel is excluded from the
// comparison: it records hardware identity from `show version` output and
// has no generating command. Pass `templates` to override the defaults.
RoundtripResult roundtrip_check(const std::string& config_text, Vendor vendor,
                                const MappingTable& table, const Metamodel& mm,
                                const std::vector<EmitTemplate>* templates = nullptr);

}  // namespace ncm
