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
#include "parser_detail.hpp"

namespace ncm::detail {
namespace {

// Yamaha "show config" subset: interface addressing, static routes and
// 802.1q vlan assignment. See docs/grammar.md.
class YamahaParser : public ParserBase {
 public:
  using ParserBase::ParserBase;

  std::unique_ptr<Node> parse_file_rule() {
    auto file = Node::make_rule("file");
    if (at_end()) {
      fail({"category"}, "expected category: config is empty");
    }
    while (!at_end()) {
      file->children.push_back(parse_category());
    }
    return file;
  }

 private:
  std::unique_ptr<Node> parse_category() {
    auto category = Node::make_rule("category");
    if (peek_kind() == TokenKind::IP) {
      if (peek_kind(1) == TokenKind::LAN_IF) {
        category->children.push_back(parse_if_address());
        return category;
      }
      if (peek_kind(1) == TokenKind::ROUTE) {
        category->children.push_back(parse_static_route());
        return category;
      }
      fail({"LAN_IF", "ROUTE"}, "expected interface address or route");
    }
    if (peek_kind() == TokenKind::VLAN) {
      category->children.push_back(parse_vlan_assign());
      return category;
    }
    fail({"category"}, "expected category");
    return nullptr;
  }

  // lan_port: LAN_IF (SLASH NUM)?
  std::unique_ptr<Node> parse_lan_port() {
    auto n = Node::make_rule("lan_port");
    n->children.push_back(expect(TokenKind::LAN_IF));
    if (peek_kind() == TokenKind::SLASH) {
      n->children.push_back(advance());
      n->children.push_back(expect(TokenKind::NUM));
    }
    return n;
  }

  // if_address: IP lan_port ADDRESS ip_address SLASH prefix_length
  std::unique_ptr<Node> parse_if_address() {
    auto n = Node::make_rule("if_address");
    n->children.push_back(expect(TokenKind::IP));
    n->children.push_back(parse_lan_port());
    n->children.push_back(expect(TokenKind::ADDRESS));
    auto addr = Node::make_rule("ip_address");
    addr->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(addr));
    n->children.push_back(expect(TokenKind::SLASH));
    auto prefix = Node::make_rule("prefix_length");
    prefix->children.push_back(expect(TokenKind::NUM));
    n->children.push_back(std::move(prefix));
    return n;
  }

  // static_route: IP ROUTE route_dest GATEWAY route_gateway
  // route_dest: DEFAULT | ip_address SLASH prefix_length
  std::unique_ptr<Node> parse_static_route() {
    auto n = Node::make_rule("static_route");
    n->children.push_back(expect(TokenKind::IP));
    n->children.push_back(expect(TokenKind::ROUTE));
    auto dest = Node::make_rule("route_dest");
    if (peek_kind() == TokenKind::DEFAULT) {
      dest->children.push_back(advance());
    } else {
      auto addr = Node::make_rule("ip_address");
      addr->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
      dest->children.push_back(std::move(addr));
      dest->children.push_back(expect(TokenKind::SLASH));
      auto prefix = Node::make_rule("prefix_length");
      prefix->children.push_back(expect(TokenKind::NUM));
      dest->children.push_back(std::move(prefix));
    }
    n->children.push_back(std::move(dest));
    n->children.push_back(expect(TokenKind::GATEWAY));
    auto gw = Node::make_rule("route_gateway");
    gw->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(gw));
    return n;
  }

  // vlan_assign: VLAN lan_port TAG_8021Q VID_ASSIGN vid
  std::unique_ptr<Node> parse_vlan_assign() {
    auto n = Node::make_rule("vlan_assign");
    n->children.push_back(expect(TokenKind::VLAN));
    n->children.push_back(parse_lan_port());
    n->children.push_back(expect(TokenKind::TAG_8021Q));
    n->children.push_back(expect(TokenKind::VID_ASSIGN));
    auto vid = Node::make_rule("vid");
    vid->children.push_back(expect(TokenKind::NUM));
    n->children.push_back(std::move(vid));
    return n;
  }
};

}  // namespace

std::unique_ptr<Node> parse_yamaha_file(std::vector<Token>& tokens) {
  YamahaParser p(tokens);
  return p.parse_file_rule();
}

}  // namespace ncm::detail
