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
#include <doctest.h>

#include <string>
#include <vector>

#include "ncm/lexer.hpp"

namespace {

using ncm::TokenKind;
using ncm::Vendor;

std::vector<TokenKind> kinds(const std::vector<ncm::Token>& tokens) {
  std::vector<TokenKind> out;
  for (const auto& t : tokens) out.push_back(t.kind);
  return out;
}

std::vector<std::string> texts(const std::vector<ncm::Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

}  // namespace

TEST_CASE("vendor names round-trip and reject unknowns") {
  CHECK(ncm::vendor_name(Vendor::cisco) == "cisco");
  CHECK(ncm::vendor_name(Vendor::yamaha) == "yamaha");
  CHECK(ncm::vendor_from_name("cisco") == Vendor::cisco);
  CHECK(ncm::vendor_from_name("yamaha") == Vendor::yamaha);
  CHECK_THROWS_AS(ncm::vendor_from_name("juniper"), ncm::Error);
}

TEST_CASE("token kind names round-trip") {
  for (TokenKind k : {TokenKind::INTERFACE, TokenKind::IP_ADDRESS_NUM, TokenKind::NUM,
                      TokenKind::CHAR_HYPH, TokenKind::VID_ASSIGN, TokenKind::MODEL_NAME}) {
    TokenKind back;
    REQUIRE(ncm::kind_from_name(ncm::kind_name(k), back));
    CHECK(back == k);
  }
  TokenKind ignored;
  CHECK_FALSE(ncm::kind_from_name("NOT_A_KIND", ignored));
}

TEST_CASE("address line splits into keyword and dotted-quad tokens") {
  auto tokens = ncm::tokenize("ip address 192.168.100.1 255.255.255.0", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::IP, TokenKind::ADDRESS,
                                                TokenKind::IP_ADDRESS_NUM,
                                                TokenKind::IP_ADDRESS_NUM});
  CHECK(tokens[2].text == "192.168.100.1");
  CHECK(tokens[3].text == "255.255.255.0");
}

TEST_CASE("longest match wins over keywords") {
  // "access" alone is the mode-setting keyword; a longer word is CHAR.
  auto t1 = ncm::tokenize("access", Vendor::cisco);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].kind == TokenKind::MODE_SETTING);
  auto t2 = ncm::tokenize("accesses", Vendor::cisco);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].kind == TokenKind::CHAR);
}

TEST_CASE("keywords win length ties against generic words") {
  // "router2" is ROUTER + NUM, not one CHAR-ish identifier.
  auto tokens = ncm::tokenize("router2", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::ROUTER, TokenKind::NUM});
  // "router-id" ties CHAR_HYPH at full length; the keyword is declared first.
  auto rid = ncm::tokenize("router-id 1.1.1.1", Vendor::cisco);
  CHECK(rid[0].kind == TokenKind::ROUTER_ID);
}

TEST_CASE("two-word mode settings lex as one token") {
  auto tokens = ncm::tokenize("switchport mode dynamic auto", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::SWITCHPORT, TokenKind::MODE,
                                                TokenKind::MODE_SETTING});
  CHECK(tokens[2].text == "dynamic auto");
}

TEST_CASE("hyphenated words lex as CHAR_HYPH") {
  auto tokens = ncm::tokenize("spanning-tree mode rapid-pvst", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::SPANNING_TREE, TokenKind::MODE,
                                                TokenKind::CHAR_HYPH});
  CHECK(tokens[2].text == "rapid-pvst");
}

TEST_CASE("alphanumeric names split into letter and digit runs") {
  auto tokens = ncm::tokenize("hostname campus1", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::HOSTNAME, TokenKind::CHAR,
                                                TokenKind::NUM});
  CHECK(texts(tokens) == std::vector<std::string>{"hostname", "campus", "1"});
}

TEST_CASE("token positions are 1-based line and column") {
  auto tokens = ncm::tokenize("hostname edge\ninterface Vlan10", Vendor::cisco);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].line == 1);
  CHECK(tokens[0].column == 1);
  CHECK(tokens[1].column == 10);
  CHECK(tokens[2].line == 2);
  CHECK(tokens[2].column == 1);
  CHECK(tokens[3].kind == TokenKind::IF_VLAN);
  CHECK(tokens[3].column == 11);
  CHECK(tokens[4].kind == TokenKind::NUM);
  CHECK(tokens[4].column == 15);
}

TEST_CASE("offsets index into the original text") {
  std::string text = "hostname edge\n shutdown";
  auto tokens = ncm::tokenize(text, Vendor::cisco);
  for (const auto& t : tokens) {
    CHECK(text.substr(t.offset, t.text.size()) == t.text);
  }
}

TEST_CASE("comment and blank lines disappear") {
  auto tokens = ncm::tokenize("! building A closet 3\n\nhostname edge\n!\n", Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::HOSTNAME, TokenKind::CHAR});
}

TEST_CASE("script framing commands are skipped") {
  std::string script =
      "enable\n"
      "configure terminal\n"
      "hostname edge\n"
      "exit\n"
      "end\n"
      "copy running-config startup-config\n";
  auto tokens = ncm::tokenize(script, Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::HOSTNAME, TokenKind::CHAR});
}

TEST_CASE("CRLF input lexes like LF input") {
  auto lf = ncm::tokenize("hostname edge\nshutdown\n", Vendor::cisco);
  auto crlf = ncm::tokenize("hostname edge\r\nshutdown\r\n", Vendor::cisco);
  CHECK(lf == crlf);
}

TEST_CASE("show version contributes only the device identity") {
  std::string text =
      "top# show version\n"
      "Cisco IOS Software, C890 Software (C890-UNIVERSALK9-M), Version 15.1(4)M4\n"
      "Cisco 892J (MPC8300) processor (revision 1.0) with 498688K bytes of memory.\n"
      "Processor board ID FCZ1538C1QG\n";
  auto tokens = ncm::tokenize(text, Vendor::cisco);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].kind == TokenKind::VERSION_CISCO);
  CHECK(tokens[1].kind == TokenKind::MODEL_NAME);
  CHECK(tokens[1].text == "892J");
}

TEST_CASE("show vlan-switch rows normalize to vlan declarations") {
  std::string text =
      "sw# show vlan-switch\n"
      "VLAN Name                             Status    Ports\n"
      "---- -------------------------------- --------- -----\n"
      "10   VLAN0010                         active    Fa3, Fa4\n";
  auto tokens = ncm::tokenize(text, Vendor::cisco);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::VLAN, TokenKind::NUM,
                                                TokenKind::NAME, TokenKind::CHAR,
                                                TokenKind::NUM});
  CHECK(texts(tokens) ==
        std::vector<std::string>{"vlan", "10", "name", "VLAN", "0010"});
}

TEST_CASE("a show command returns the lexer to config mode") {
  std::string text =
      "sw# show version\n"
      "Cisco 892J (MPC8300) processor (revision 1.0) with memory.\n"
      "sw# show running-config\n"
      "hostname edge\n";
  auto tokens = ncm::tokenize(text, Vendor::cisco);
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[2].kind == TokenKind::HOSTNAME);
  CHECK(tokens[3].text == "edge");
}

TEST_CASE("unrecognized input raises a positioned lex error") {
  try {
    ncm::tokenize("interface FastEthernet3\n switchport @ccess vlan 10\n", Vendor::cisco);
    FAIL("expected LexError");
  } catch (const ncm::LexError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 13);
    CHECK(e.offending() == "@ccess");
  }
}

TEST_CASE("incomplete dotted quads do not lex as addresses") {
  auto tokens = ncm::tokenize("ip route 10.0.0.1 255.255.255.0 10.0.0.2", Vendor::cisco);
  CHECK(tokens.size() == 5);
  // Three dots only: the '.' after the last full quad has no rule.
  CHECK_THROWS_AS(ncm::tokenize("ip route 10.0.0 x", Vendor::cisco), ncm::LexError);
}

TEST_CASE("yamaha lines lex with interface and vid tokens") {
  auto tokens = ncm::tokenize("ip lan1 address 192.168.1.1/24", Vendor::yamaha);
  CHECK(kinds(tokens) == std::vector<TokenKind>{TokenKind::IP, TokenKind::LAN_IF,
                                                TokenKind::ADDRESS,
                                                TokenKind::IP_ADDRESS_NUM,
                                                TokenKind::SLASH, TokenKind::NUM});
  auto vlan = ncm::tokenize("vlan lan1/1 802.1q vid=10", Vendor::yamaha);
  CHECK(kinds(vlan) == std::vector<TokenKind>{TokenKind::VLAN, TokenKind::LAN_IF,
                                              TokenKind::SLASH, TokenKind::NUM,
                                              TokenKind::TAG_8021Q, TokenKind::VID_ASSIGN,
                                              TokenKind::NUM});
}

TEST_CASE("yamaha comments start with a hash") {
  auto tokens = ncm::tokenize("# RTX1210\nip route default gateway 10.0.0.1\n",
                              Vendor::yamaha);
  CHECK(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::IP);
  CHECK(tokens[2].kind == TokenKind::DEFAULT);
  CHECK(tokens[3].kind == TokenKind::GATEWAY);
}
