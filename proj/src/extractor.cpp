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
#include "ncm/extractor.hpp"

#include <filesystem>
#include <map>
#include <regex>

#include "ncm/errors.hpp"
#include "ncm/parser.hpp"

namespace ncm {

namespace {

struct OpenRoot {
  std::string rule;
  std::size_t gv_index;
};

class Extraction {
 public:
  Extraction(const MappingTable& table, const Metamodel& mm) : table_(table), mm_(mm) {
    for (std::size_t i = 0; i < table.rules.size(); ++i) {
      const MappingRule& r = table.rules[i];
      root_group_.emplace(r.subtree_root, r.group);  // first writer wins
      by_parent_[r.parent].push_back(i);
    }
    root_group_["file"] = "Config";
  }

  DeviceModel run(const ParseTree& tree) {
    if (!tree.root || tree.root->rule != "file")
      throw ExtractError(ExtractError::Kind::internal, {1, 1},
                         "extraction requires a tree rooted at 'file'");
    source_ = &tree.source;
    visit(*tree.root);
    auto violations = validate_model(model_, mm_);
    if (!violations.empty())
      throw ExtractError(ExtractError::Kind::internal, {0, 0},
                         "extracted model does not validate: " +
                             violation_code_name(violations.front().code) + " on " +
                             violations.front().subject);
    return std::move(model_);
  }

 private:
  std::size_t open_value(const std::string& group, const Node& node) {
    const GroupDef* def = mm_.find_group(group);
    std::string abbrev = def && !def->abbrev.empty() ? def->abbrev : group;
    GroupValue gv;
    gv.group = group;
    gv.name = abbrev + std::to_string(++counters_[group]);
    model_.group_values.push_back(std::move(gv));
    std::size_t idx = model_.group_values.size() - 1;
    if (!open_.empty()) {
      // Containment links attach to the nearest enclosing open root.
      model_.links.emplace_back(model_.group_values[open_.back().gv_index].name,
                                model_.group_values[idx].name);
    }
    open_.push_back({node.rule, idx});
    return idx;
  }

  // The open root a rule binds to: nearest on the stack with the rule's
  // subtree_root name, or none (the rule does not apply here).
  const OpenRoot* binding_root(const MappingRule& rule) const {
    for (auto it = open_.rbegin(); it != open_.rend(); ++it)
      if (it->rule == rule.subtree_root) return &*it;
    return nullptr;
  }

  static bool target_matches(const MappingRule& rule, const Node& child) {
    if (child.is_rule) return child.rule == rule.target;
    return kind_name(child.token.kind) == rule.target;
  }

  std::string rewrite(const MappingRule& rule, const std::string& text) const {
    if (rule.original.empty()) return text;
    std::regex re(rule.original);
    std::smatch m;
    if (!std::regex_match(text, m, re)) return text;
    return m.format(rule.replaced);
  }

  void store(const MappingRule& rule, std::size_t gv_index, const std::string& value,
             SourcePos pos) {
    GroupValue& gv = model_.group_values[gv_index];
    if (gv.group != rule.group)
      throw ExtractError(ExtractError::Kind::no_open_group, pos,
                         "rule targets group " + rule.group +
                             " but the open group value " + gv.name + " is a " + gv.group);
    auto it = gv.slots.find(rule.item);
    if (it != gv.slots.end()) {
      if (it->second != value)
        throw ExtractError(ExtractError::Kind::slot_conflict, pos,
                           "conflicting values for " + gv.name + "." + rule.item + ": '" +
                               it->second + "' vs '" + value + "'");
      return;
    }
    gv.slots.emplace(rule.item, value);
  }

  void visit(const Node& node) {
    if (!node.is_rule) return;
    std::size_t opened = open_.size();

    if (node.rule == "file") {
      open_value("Config", node);
    } else {
      auto rooted = root_group_.find(node.rule);
      if (rooted != root_group_.end()) {
        for (const auto& r : open_)
          if (r.rule == node.rule)
            throw ExtractError(ExtractError::Kind::nested_root, node_pos(node),
                               "subtree root '" + node.rule + "' nested inside itself");
        open_value(rooted->second, node);
      }
    }

    // Presence checks for this node in its role as a parent-of-target.
    struct Check {
      const MappingRule* rule;
      std::size_t gv_index;
      bool found = false;
    };
    std::vector<Check> checks;
    auto rules_here = by_parent_.find(node.rule);
    if (rules_here != by_parent_.end()) {
      for (std::size_t idx : rules_here->second) {
        const MappingRule& rule = table_.rules[idx];
        if (const OpenRoot* root = binding_root(rule))
          checks.push_back({&rule, root->gv_index, false});
      }
    }
    for (const auto& child : node.children) {
      for (auto& check : checks) {
        if (!target_matches(*check.rule, *child)) continue;
        check.found = true;
        if (check.rule->presence == Presence::present)
          store(*check.rule, check.gv_index,
                rewrite(*check.rule, node_text(*child, *source_)), node_pos(*child));
      }
    }

    for (const auto& child : node.children) visit(*child);

    // Absence resolves once the whole subtree under this parent is searched.
    for (const auto& check : checks) {
      if (check.found || check.rule->presence != Presence::absent) continue;
      store(*check.rule, check.gv_index, check.rule->replaced, node_pos(node));
    }

    open_.resize(opened);
  }

  const MappingTable& table_;
  const Metamodel& mm_;
  const std::string* source_ = nullptr;
  DeviceModel model_;
  std::vector<OpenRoot> open_;
  std::map<std::string, std::string> root_group_;
  std::map<std::string, std::vector<std::size_t>> by_parent_;
  std::map<std::string, int> counters_;
};

}  // namespace

DeviceModel extract(const ParseTree& tree, const MappingTable& table, const Metamodel& mm) {
  return Extraction(table, mm).run(tree);
}

namespace {

MultiResult extract_one(const MultiInput& input, const Metamodel& mm) {
  MultiResult result;
  result.path = input.path;
  try {
    ParseTree tree = parse_file(input.path, input.vendor);
    result.model = extract(tree, builtin_table(input.vendor), mm);
    result.device_name = std::filesystem::path(input.path).stem().string();
    for (const auto& gv : result.model.group_values) {
      if (gv.group != "Hostname") continue;
      auto slot = gv.slots.find("name");
      if (slot != gv.slots.end()) {
        result.device_name = slot->second;
        break;
      }
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  return result;
}

}  // namespace

std::vector<MultiResult> extract_multi_serial(const std::vector<MultiInput>& inputs,
                                              const Metamodel& mm) {
  std::vector<MultiResult> results(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = extract_one(inputs[i], mm);
  return results;
}

std::vector<MultiResult> extract_multi(const std::vector<MultiInput>& inputs,
                                       const Metamodel& mm) {
  std::vector<MultiResult> results(inputs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(inputs.size()); ++i)
    results[i] = extract_one(inputs[i], mm);
#else
  for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = extract_one(inputs[i], mm);
#endif
  return results;
}

}  // namespace ncm
