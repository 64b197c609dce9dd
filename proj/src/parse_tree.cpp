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
#include "ncm/parse_tree.hpp"

#include <sstream>

namespace ncm {

void collect_leaves(const Node& n, std::vector<const Token*>& out) {
  if (!n.is_rule) {
    out.push_back(&n.token);
    return;
  }
  for (const auto& c : n.children) collect_leaves(*c, out);
}

SourcePos node_pos(const Node& n) {
  std::vector<const Token*> leaves;
  collect_leaves(n, leaves);
  if (leaves.empty()) return {0, 0};
  return {leaves.front()->line, leaves.front()->column};
}

std::string node_text(const Node& n, const std::string& source) {
  if (!n.is_rule) return n.token.text;
  std::vector<const Token*> leaves;
  collect_leaves(n, leaves);
  if (leaves.empty()) return "";
  if (leaves.size() == 1) return leaves.front()->text;

  const Token* first = leaves.front();
  const Token* last = leaves.back();
  bool single_line = true;
  bool ascending = true;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i]->line != first->line) single_line = false;
    if (i > 0 && leaves[i]->offset <= leaves[i - 1]->offset) ascending = false;
  }
  std::size_t end = last->offset + last->text.size();
  if (single_line && ascending && end <= source.size() && first->offset < end) {
    return source.substr(first->offset, end - first->offset);
  }
  std::string joined;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (i > 0) joined += ' ';
    joined += leaves[i]->text;
  }
  return joined;
}

namespace {

void dump_node(const Node& n, int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  if (n.is_rule) {
    out << "rule: " << n.rule << '\n';
    for (const auto& c : n.children) dump_node(*c, depth + 1, out);
  } else {
    out << "tok " << kind_name(n.token.kind) << " '" << n.token.text << "'\n";
  }
}

}  // namespace

std::string dump_tree(const ParseTree& tree) {
  std::ostringstream out;
  if (tree.root) dump_node(*tree.root, 0, out);
  return out.str();
}

}  // namespace ncm
