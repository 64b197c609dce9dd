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
#include "ncm/parser.hpp"

#include <fstream>
#include <sstream>

#include "parser_detail.hpp"

namespace ncm {
namespace detail {

// Cisco grammar; see docs/grammar.md for the rule listing. Line-oriented
// only in one respect: `any` never crosses the line of its first token.
class CiscoParser : public ParserBase {
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
    switch (peek_kind()) {
      case TokenKind::HOSTNAME:
        category->children.push_back(parse_hostname());
        break;
      case TokenKind::INTERFACE:
        category->children.push_back(parse_interface());
        break;
      case TokenKind::IP:
        category->children.push_back(parse_static_route());
        break;
      case TokenKind::SPANNING_TREE:
        category->children.push_back(parse_stp());
        break;
      case TokenKind::ROUTER:
        category->children.push_back(parse_ospf());
        break;
      case TokenKind::ACCESS_LIST:
        category->children.push_back(parse_acl());
        break;
      case TokenKind::VLAN:
        category->children.push_back(parse_vlan_decl());
        break;
      case TokenKind::VERSION_CISCO:
        category->children.push_back(parse_version_info());
        break;
      default:
        fail({"category"}, "expected category");
    }
    return category;
  }

  std::unique_ptr<Node> parse_hostname() {
    auto n = Node::make_rule("hostname");
    n->children.push_back(expect(TokenKind::HOSTNAME));
    n->children.push_back(parse_any());
    return n;
  }

  std::unique_ptr<Node> parse_interface() {
    auto n = Node::make_rule("interface");
    n->children.push_back(expect(TokenKind::INTERFACE));
    auto name = Node::make_rule("interface_name");
    switch (peek_kind()) {
      case TokenKind::ETHERNET:
        name->children.push_back(parse_ethernet());
        break;
      case TokenKind::BRI:
        name->children.push_back(parse_bri());
        break;
      case TokenKind::IF_VLAN:
      case TokenKind::VLAN:  // generated scripts write "interface vlan N"
        name->children.push_back(parse_if_vlan());
        break;
      default:
        fail({"ETHERNET", "BRI", "IF_VLAN"}, "expected interface name");
    }
    n->children.push_back(std::move(name));
    return n;
  }

  // ((stack '/')? slot '/')? port — resolved by counting the NUM/SLASH run.
  void parse_port_path(Node& parent) {
    int nums = 1;
    if (peek_kind(1) == TokenKind::SLASH) {
      nums = peek_kind(3) == TokenKind::SLASH ? 3 : 2;
    }
    if (nums == 3) {
      auto stack = Node::make_rule("stack");
      stack->children.push_back(expect(TokenKind::NUM));
      parent.children.push_back(std::move(stack));
      parent.children.push_back(expect(TokenKind::SLASH));
    }
    if (nums >= 2) {
      auto slot = Node::make_rule("slot");
      slot->children.push_back(expect(TokenKind::NUM));
      parent.children.push_back(std::move(slot));
      parent.children.push_back(expect(TokenKind::SLASH));
    }
    auto port = Node::make_rule("port");
    port->children.push_back(expect(TokenKind::NUM));
    parent.children.push_back(std::move(port));
  }

  std::unique_ptr<Node> parse_ethernet() {
    auto n = Node::make_rule("ethernet");
    n->children.push_back(expect(TokenKind::ETHERNET));
    parse_port_path(*n);
    n->children.push_back(parse_interface_setting());
    return n;
  }

  std::unique_ptr<Node> parse_bri() {
    auto n = Node::make_rule("bri");
    n->children.push_back(expect(TokenKind::BRI));
    parse_port_path(*n);
    n->children.push_back(parse_interface_setting());
    return n;
  }

  std::unique_ptr<Node> parse_if_vlan() {
    auto n = Node::make_rule("if_vlan");
    n->children.push_back(advance());  // IF_VLAN, or VLAN in generated scripts
    n->children.push_back(expect(TokenKind::NUM));
    n->children.push_back(parse_interface_setting());
    return n;
  }

  std::unique_ptr<Node> parse_interface_setting() {
    auto n = Node::make_rule("interface_setting");
    for (;;) {
      switch (peek_kind()) {
        case TokenKind::SHUTDOWN:
          n->children.push_back(advance());
          continue;
        case TokenKind::NO:
          if (peek_kind(1) == TokenKind::SHUTDOWN) {
            auto ns = Node::make_rule("no_shutdown");
            ns->children.push_back(advance());
            ns->children.push_back(advance());
            n->children.push_back(std::move(ns));
            continue;
          }
          if (peek_kind(1) == TokenKind::IP && peek_kind(2) == TokenKind::ADDRESS) {
            n->children.push_back(parse_if_ip_address());
            continue;
          }
          return n;
        case TokenKind::IP:
          if (peek_kind(1) == TokenKind::ADDRESS) {
            n->children.push_back(parse_if_ip_address());
            continue;
          }
          if (peek_kind(1) == TokenKind::ACCESS_GROUP) {
            n->children.push_back(parse_access_group());
            continue;
          }
          return n;  // "ip route ..." starts the next category
        case TokenKind::SWITCHPORT:
          n->children.push_back(parse_switchport_setting());
          continue;
        default:
          return n;
      }
    }
  }

  std::unique_ptr<Node> parse_if_ip_address() {
    auto n = Node::make_rule("if_ip_address");
    if (peek_kind() == TokenKind::NO) n->children.push_back(advance());
    n->children.push_back(expect(TokenKind::IP));
    n->children.push_back(expect(TokenKind::ADDRESS));
    auto addr = Node::make_rule("ip_address");
    addr->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(addr));
    auto mask = Node::make_rule("subnet_mask");
    mask->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(mask));
    return n;
  }

  std::unique_ptr<Node> parse_access_group() {
    auto n = Node::make_rule("access_group");
    n->children.push_back(expect(TokenKind::IP));
    n->children.push_back(expect(TokenKind::ACCESS_GROUP));
    n->children.push_back(expect(TokenKind::NUM));
    n->children.push_back(expect(TokenKind::DIRECTION));
    return n;
  }

  // switchport_setting: SWITCHPORT (port_mode | access_vlan | trunk)
  // with the MODE_SETTING-led alternatives left-factored by one lookahead.
  std::unique_ptr<Node> parse_switchport_setting() {
    auto n = Node::make_rule("switchport_setting");
    n->children.push_back(expect(TokenKind::SWITCHPORT));
    if (peek_kind() == TokenKind::MODE) {
      auto pm = Node::make_rule("port_mode");
      pm->children.push_back(advance());
      pm->children.push_back(expect(TokenKind::MODE_SETTING));
      n->children.push_back(std::move(pm));
      return n;
    }
    if (peek_kind() == TokenKind::MODE_SETTING) {
      if (peek_kind(1) == TokenKind::VLAN) {
        auto av = Node::make_rule("access_vlan");
        av->children.push_back(advance());
        auto vn = Node::make_rule("vlan_num");
        vn->children.push_back(expect(TokenKind::VLAN));
        vn->children.push_back(expect(TokenKind::NUM));
        av->children.push_back(std::move(vn));
        n->children.push_back(std::move(av));
        return n;
      }
      auto trunk = Node::make_rule("trunk");
      trunk->children.push_back(advance());
      n->children.push_back(std::move(trunk));
      return n;
    }
    fail({"MODE", "MODE_SETTING"}, "expected switchport setting");
    return nullptr;
  }

  std::unique_ptr<Node> parse_static_route() {
    auto n = Node::make_rule("static_route");
    n->children.push_back(expect(TokenKind::IP));
    n->children.push_back(expect(TokenKind::ROUTE));
    auto dest = Node::make_rule("route_dest");
    dest->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(dest));
    auto mask = Node::make_rule("route_mask");
    mask->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(mask));
    auto hop = Node::make_rule("route_nexthop");
    hop->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
    n->children.push_back(std::move(hop));
    return n;
  }

  std::unique_ptr<Node> parse_stp() {
    auto n = Node::make_rule("stp");
    n->children.push_back(expect(TokenKind::SPANNING_TREE));
    if (peek_kind() == TokenKind::VLAN) {
      auto sv = Node::make_rule("stp_vlan");
      auto vn = Node::make_rule("vlan_num");
      vn->children.push_back(advance());
      vn->children.push_back(expect(TokenKind::NUM));
      sv->children.push_back(std::move(vn));
      auto pr = Node::make_rule("stp_priority");
      pr->children.push_back(expect(TokenKind::PRIORITY));
      pr->children.push_back(expect(TokenKind::NUM));
      sv->children.push_back(std::move(pr));
      n->children.push_back(std::move(sv));
      return n;
    }
    if (peek_kind() == TokenKind::MODE) {
      auto sm = Node::make_rule("stp_mode");
      sm->children.push_back(advance());
      sm->children.push_back(parse_any());
      n->children.push_back(std::move(sm));
      return n;
    }
    fail({"VLAN", "MODE"}, "expected spanning-tree setting");
    return nullptr;
  }

  std::unique_ptr<Node> parse_ospf() {
    auto n = Node::make_rule("ospf");
    n->children.push_back(expect(TokenKind::ROUTER));
    n->children.push_back(expect(TokenKind::OSPF));
    n->children.push_back(expect(TokenKind::NUM));
    for (;;) {
      switch (peek_kind()) {
        case TokenKind::ROUTER_ID: {
          auto rid = Node::make_rule("ospf_router_id");
          rid->children.push_back(advance());
          rid->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
          n->children.push_back(std::move(rid));
          continue;
        }
        case TokenKind::NETWORK: {
          auto net = Node::make_rule("ospf_network");
          net->children.push_back(advance());
          auto addr = Node::make_rule("net_address");
          addr->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
          net->children.push_back(std::move(addr));
          auto wc = Node::make_rule("net_wildcard");
          wc->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
          net->children.push_back(std::move(wc));
          net->children.push_back(expect(TokenKind::AREA));
          auto area = Node::make_rule("net_area");
          area->children.push_back(expect(TokenKind::NUM));
          net->children.push_back(std::move(area));
          n->children.push_back(std::move(net));
          continue;
        }
        case TokenKind::AREA: {
          auto vl = Node::make_rule("ospf_virtual_link");
          vl->children.push_back(advance());
          auto area = Node::make_rule("vl_area");
          area->children.push_back(expect(TokenKind::NUM));
          vl->children.push_back(std::move(area));
          vl->children.push_back(expect(TokenKind::VIRTUAL_LINK));
          auto rid = Node::make_rule("vl_router_id");
          rid->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
          vl->children.push_back(std::move(rid));
          n->children.push_back(std::move(vl));
          continue;
        }
        default:
          return n;
      }
    }
  }

  std::unique_ptr<Node> parse_acl() {
    auto n = Node::make_rule("acl");
    n->children.push_back(expect(TokenKind::ACCESS_LIST));
    auto num = Node::make_rule("acl_num");
    num->children.push_back(expect(TokenKind::NUM));
    n->children.push_back(std::move(num));
    auto action = Node::make_rule("acl_action");
    action->children.push_back(expect(TokenKind::ACL_ACTION));
    n->children.push_back(std::move(action));
    auto proto = Node::make_rule("acl_protocol");
    switch (peek_kind()) {
      case TokenKind::CHAR:
      case TokenKind::IP:
      case TokenKind::OSPF:
        proto->children.push_back(advance());
        break;
      default:
        fail({"CHAR", "IP", "OSPF"}, "expected protocol");
    }
    n->children.push_back(std::move(proto));
    const char* parts[] = {"acl_src", "acl_src_wc", "acl_dst", "acl_dst_wc"};
    for (const char* part : parts) {
      auto p = Node::make_rule(part);
      p->children.push_back(expect(TokenKind::IP_ADDRESS_NUM));
      n->children.push_back(std::move(p));
    }
    if (peek_kind() == TokenKind::EQ) {
      auto port = Node::make_rule("acl_port");
      port->children.push_back(advance());
      port->children.push_back(expect(TokenKind::NUM));
      n->children.push_back(std::move(port));
    }
    return n;
  }

  std::unique_ptr<Node> parse_vlan_decl() {
    auto n = Node::make_rule("vlan_decl");
    n->children.push_back(expect(TokenKind::VLAN));
    n->children.push_back(expect(TokenKind::NUM));
    if (peek_kind() == TokenKind::NAME) {
      auto vn = Node::make_rule("vlan_name");
      vn->children.push_back(advance());
      vn->children.push_back(parse_any());
      n->children.push_back(std::move(vn));
    }
    return n;
  }

  std::unique_ptr<Node> parse_version_info() {
    auto n = Node::make_rule("version_info");
    n->children.push_back(expect(TokenKind::VERSION_CISCO));
    n->children.push_back(expect(TokenKind::MODEL_NAME));
    return n;
  }
};

}  // namespace detail

namespace {

bool is_any_kind(TokenKind k) {
  return k == TokenKind::NUM || k == TokenKind::CHAR || k == TokenKind::CHAR_HYPH;
}

}  // namespace

namespace detail {

// any: (NUM | CHAR | CHAR_HYPH)+, bounded to the line of its first token.
std::unique_ptr<Node> ParserBase::parse_any() {
  if (!is_any_kind(peek_kind())) {
    fail({"NUM", "CHAR", "CHAR_HYPH"}, "expected word");
  }
  auto n = Node::make_rule("any");
  int line = peek().line;
  while (!at_end() && is_any_kind(peek_kind()) && peek().line == line) {
    n->children.push_back(advance());
  }
  return n;
}

}  // namespace detail

ParseTree parse(std::vector<Token> tokens, Vendor vendor, std::string source) {
  ParseTree tree;
  tree.vendor = vendor;
  tree.source = std::move(source);
  if (vendor == Vendor::cisco) {
    detail::CiscoParser p(tokens);
    tree.root = p.parse_file_rule();
  } else {
    tree.root = detail::parse_yamaha_file(tokens);
  }
  return tree;
}

ParseTree parse_text(const std::string& text, Vendor vendor) {
  return parse(tokenize(text, vendor), vendor, text);
}

ParseTree parse_file(const std::string& path, Vendor vendor) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), vendor);
}

const std::vector<std::string>& rule_names(Vendor vendor) {
  static const std::vector<std::string> cisco = {
      "file", "category", "hostname", "interface", "interface_name",
      "ethernet", "bri", "if_vlan", "stack", "slot", "port",
      "interface_setting", "no_shutdown", "if_ip_address", "ip_address",
      "subnet_mask", "switchport_setting", "port_mode", "access_vlan",
      "trunk", "vlan_num", "access_group", "static_route", "route_dest",
      "route_mask", "route_nexthop", "stp", "stp_vlan", "stp_priority",
      "stp_mode", "ospf", "ospf_router_id", "ospf_network", "net_address",
      "net_wildcard", "net_area", "ospf_virtual_link", "vl_area",
      "vl_router_id", "acl", "acl_num", "acl_action", "acl_protocol",
      "acl_src", "acl_src_wc", "acl_dst", "acl_dst_wc", "acl_port",
      "vlan_decl", "vlan_name", "version_info", "any"};
  static const std::vector<std::string> yamaha = {
      "file", "category", "if_address", "lan_port", "ip_address",
      "prefix_length", "static_route", "route_dest", "route_gateway",
      "vlan_assign", "vid"};
  return vendor == Vendor::cisco ? cisco : yamaha;
}

}  // namespace ncm
