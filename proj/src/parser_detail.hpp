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

#include "ncm/errors.hpp"
#include "ncm/parse_tree.hpp"

namespace ncm::detail {

// Shared recursive-descent machinery: token cursor, lookahead, diagnostics.
class ParserBase {
 public:
  explicit ParserBase(std::vector<Token>& tokens) : tokens_(tokens) {}

 protected:
  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token& peek(int ahead = 0) const {
    static const Token eof{TokenKind::CHAR, "", 0, 0, 0};
    std::size_t i = pos_ + static_cast<std::size_t>(ahead);
    return i < tokens_.size() ? tokens_[i] : eof;
  }

  // Kind of the token `ahead` positions away; CHAR with empty text past EOF.
  TokenKind peek_kind(int ahead = 0) const {
    std::size_t i = pos_ + static_cast<std::size_t>(ahead);
    return i < tokens_.size() ? tokens_[i].kind : TokenKind::CHAR;
  }

  std::unique_ptr<Node> advance() {
    return Node::make_leaf(tokens_[pos_++]);
  }

  std::unique_ptr<Node> expect(TokenKind kind) {
    if (at_end() || tokens_[pos_].kind != kind) {
      fail({kind_name(kind)}, "expected " + kind_name(kind));
    }
    return advance();
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    SourcePos pos{0, 0};
    std::string found = "end of input";
    if (!at_end()) {
      const Token& t = tokens_[pos_];
      pos = {t.line, t.column};
      found = kind_name(t.kind) + " '" + t.text + "'";
    } else if (!tokens_.empty()) {
      pos = {tokens_.back().line, tokens_.back().column};
    } else {
      pos = {1, 1};
    }
    throw ParseError(pos, std::move(expected), found,
                     "parse error at " + std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + what + ", found " + found);
  }

  std::unique_ptr<Node> parse_any();

 private:
  std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

std::unique_ptr<Node> parse_yamaha_file(std::vector<Token>& tokens);

}  // namespace ncm::detail
