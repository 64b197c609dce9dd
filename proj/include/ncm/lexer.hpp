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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ncm/errors.hpp"

namespace ncm {

enum class Vendor { cisco, yamaha };

std::string vendor_name(Vendor v);
Vendor vendor_from_name(std::string_view name);

// Token kinds for both vendor grammars. The enumerator spelling is the kind
// name used in mapping tables and in dump-tree output.
enum class TokenKind {
  // cisco keywords
  INTERFACE,
  ETHERNET,
  BRI,
  HOSTNAME,
  IP,
  ADDRESS,
  SHUTDOWN,
  SWITCHPORT,
  NO,
  MODE_SETTING,
  IF_VLAN,
  VLAN,
  ROUTE,
  ROUTER,
  OSPF,
  ROUTER_ID,
  NETWORK,
  AREA,
  VIRTUAL_LINK,
  SPANNING_TREE,
  PRIORITY,
  MODE,
  ACCESS_LIST,
  ACCESS_GROUP,
  ACL_ACTION,
  EQ,
  DIRECTION,
  NAME,
  SLASH,
  // device identity line captured from "show version" output
  VERSION_CISCO,
  MODEL_NAME,
  // yamaha keywords
  LAN_IF,
  GATEWAY,
  DEFAULT,
  TAG_8021Q,
  VID_ASSIGN,
  // shared value tokens
  IP_ADDRESS_NUM,
  NUM,
  CHAR,
  CHAR_HYPH,
};

std::string kind_name(TokenKind kind);
// Returns true and sets `out` when `name` names a token kind.
bool kind_from_name(std::string_view name, TokenKind& out);

struct Token {
  TokenKind kind;
  std::string text;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::size_t offset = 0;  // byte offset into the tokenized text

  bool operator==(const Token& other) const {
    return kind == other.kind && text == other.text;
  }
};

// Splits `text` into tokens for the given vendor. Longest match wins; on a
// tie the rule declared earlier wins (keywords are declared before CHAR).
// Comment lines ('!' for cisco, '#' for yamaha) are skipped, as are the
// script framing commands a generated script carries (enable, configure
// terminal, exit, end, copy ...). "show version" / "show vlan-switch"
// sections introduced by a prompt line are normalized: the version section
// contributes only the device model line, a vlan-switch table row
// contributes the equivalent "vlan N" / "name X" tokens.
// Throws LexError with the position of the first unrecognized character.
std::vector<Token> tokenize(const std::string& text, Vendor vendor);

}  // namespace ncm
