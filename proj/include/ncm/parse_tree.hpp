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

#include <memory>
#include <string>
#include <vector>

#include "ncm/lexer.hpp"

namespace ncm {

// A node is either an inner rule node (rule name + children) or a token leaf.
struct Node {
  bool is_rule = false;
  std::string rule;  // set when is_rule
  Token token;       // set when !is_rule
  std::vector<std::unique_ptr<Node>> children;

  static std::unique_ptr<Node> make_rule(std::string name) {
    auto n = std::make_unique<Node>();
    n->is_rule = true;
    n->rule = std::move(name);
    return n;
  }
  static std::unique_ptr<Node> make_leaf(Token t) {
    auto n = std::make_unique<Node>();
    n->is_rule = false;
    n->token = std::move(t);
    return n;
  }
};

struct ParseTree {
  std::unique_ptr<Node> root;
  Vendor vendor = Vendor::cisco;
  std::string source;  // the tokenized text, kept for exact node spans
};

// All token leaves under `n`, in source order.
void collect_leaves(const Node& n, std::vector<const Token*>& out);

// Position of the first token under `n` (0,0 if the subtree is empty).
SourcePos node_pos(const Node& n);

// The string a node represents. For a leaf this is the token text. For a
// rule node whose leaves sit on one source line it is the exact source span
// (so adjacent tokens such as CHAR+NUM concatenate without spaces);
// otherwise leaf texts joined with single spaces.
std::string node_text(const Node& n, const std::string& source);

// Debug rendering: one node per line, two-space indentation per depth,
// "rule: <name>" for rule nodes and "tok KIND 'text'" for leaves.
std::string dump_tree(const ParseTree& tree);

}  // namespace ncm
