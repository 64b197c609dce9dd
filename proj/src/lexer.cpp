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
#include "ncm/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <utility>

namespace ncm {

std::string vendor_name(Vendor v) {
  return v == Vendor::cisco ? "cisco" : "yamaha";
}

Vendor vendor_from_name(std::string_view name) {
  if (name == "cisco") return Vendor::cisco;
  if (name == "yamaha") return Vendor::yamaha;
  throw Error("unknown vendor '" + std::string(name) + "' (expected cisco or yamaha)");
}

namespace {

struct KindName {
  TokenKind kind;
  const char* name;
};

constexpr std::array<KindName, 40> kKindNames{{
    {TokenKind::INTERFACE, "INTERFACE"},
    {TokenKind::ETHERNET, "ETHERNET"},
    {TokenKind::BRI, "BRI"},
    {TokenKind::HOSTNAME, "HOSTNAME"},
    {TokenKind::IP, "IP"},
    {TokenKind::ADDRESS, "ADDRESS"},
    {TokenKind::SHUTDOWN, "SHUTDOWN"},
    {TokenKind::SWITCHPORT, "SWITCHPORT"},
    {TokenKind::NO, "NO"},
    {TokenKind::MODE_SETTING, "MODE_SETTING"},
    {TokenKind::IF_VLAN, "IF_VLAN"},
    {TokenKind::VLAN, "VLAN"},
    {TokenKind::ROUTE, "ROUTE"},
    {TokenKind::ROUTER, "ROUTER"},
    {TokenKind::OSPF, "OSPF"},
    {TokenKind::ROUTER_ID, "ROUTER_ID"},
    {TokenKind::NETWORK, "NETWORK"},
    {TokenKind::AREA, "AREA"},
    {TokenKind::VIRTUAL_LINK, "VIRTUAL_LINK"},
    {TokenKind::SPANNING_TREE, "SPANNING_TREE"},
    {TokenKind::PRIORITY, "PRIORITY"},
    {TokenKind::MODE, "MODE"},
    {TokenKind::ACCESS_LIST, "ACCESS_LIST"},
    {TokenKind::ACCESS_GROUP, "ACCESS_GROUP"},
    {TokenKind::ACL_ACTION, "ACL_ACTION"},
    {TokenKind::EQ, "EQ"},
    {TokenKind::DIRECTION, "DIRECTION"},
    {TokenKind::NAME, "NAME"},
    {TokenKind::SLASH, "SLASH"},
    {TokenKind::VERSION_CISCO, "VERSION_CISCO"},
    {TokenKind::MODEL_NAME, "MODEL_NAME"},
    {TokenKind::LAN_IF, "LAN_IF"},
    {TokenKind::GATEWAY, "GATEWAY"},
    {TokenKind::DEFAULT, "DEFAULT"},
    {TokenKind::TAG_8021Q, "TAG_8021Q"},
    {TokenKind::VID_ASSIGN, "VID_ASSIGN"},
    {TokenKind::IP_ADDRESS_NUM, "IP_ADDRESS_NUM"},
    {TokenKind::NUM, "NUM"},
    {TokenKind::CHAR, "CHAR"},
    {TokenKind::CHAR_HYPH, "CHAR_HYPH"},
}};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// A lexer rule is either a set of literal spellings or a builtin scanner.
enum class Builtin { none, ip4, num, word, word_hyph, lan_if };

struct LexRule {
  TokenKind kind;
  std::vector<std::string> literals;
  Builtin builtin = Builtin::none;
};

std::size_t match_builtin(Builtin b, std::string_view s) {
  switch (b) {
    case Builtin::num: {
      std::size_t n = 0;
      while (n < s.size() && is_digit(s[n])) ++n;
      return n;
    }
    case Builtin::word: {
      std::size_t n = 0;
      while (n < s.size() && is_alpha(s[n])) ++n;
      return n;
    }
    case Builtin::word_hyph: {
      // letters, then at least one '-'-joined alphanumeric segment
      std::size_t n = 0;
      while (n < s.size() && is_alpha(s[n])) ++n;
      if (n == 0) return 0;
      while (n < s.size() && is_alnum(s[n])) ++n;
      std::size_t last_good = 0;
      std::size_t i = n;
      while (i < s.size() && s[i] == '-') {
        std::size_t j = i + 1;
        while (j < s.size() && is_alnum(s[j])) ++j;
        if (j == i + 1) break;
        last_good = j;
        i = j;
      }
      return last_good;  // zero unless a hyphen segment matched
    }
    case Builtin::ip4: {
      // NUM '.' NUM '.' NUM '.' NUM
      std::size_t pos = 0;
      for (int part = 0; part < 4; ++part) {
        std::size_t n = 0;
        while (pos + n < s.size() && is_digit(s[pos + n])) ++n;
        if (n == 0) return 0;
        pos += n;
        if (part < 3) {
          if (pos >= s.size() || s[pos] != '.') return 0;
          ++pos;
        }
      }
      return pos;
    }
    case Builtin::lan_if: {
      if (s.size() < 4 || s.substr(0, 3) != "lan") return 0;
      std::size_t n = 3;
      while (n < s.size() && is_digit(s[n])) ++n;
      return n > 3 ? n : 0;
    }
    case Builtin::none:
      return 0;
  }
  return 0;
}

const std::vector<LexRule>& cisco_rules() {
  // Declaration order breaks length ties (keywords before CHAR). Lowercase
  // spellings of ETHERNET cover generated scripts, which emit lowercase.
  static const std::vector<LexRule> rules = {
      {TokenKind::INTERFACE, {"interface"}},
      {TokenKind::ETHERNET,
       {"FastEthernet", "GigabitEthernet", "TenGigabitEthernet", "fastethernet"}},
      {TokenKind::BRI, {"BRI"}},
      {TokenKind::HOSTNAME, {"hostname"}},
      {TokenKind::IP, {"ip"}},
      {TokenKind::ADDRESS, {"address"}},
      {TokenKind::SHUTDOWN, {"shutdown"}},
      {TokenKind::SWITCHPORT, {"switchport"}},
      {TokenKind::NO, {"no"}},
      {TokenKind::MODE_SETTING, {"access", "trunk", "dynamic auto", "dynamic desirable"}},
      {TokenKind::IF_VLAN, {"Vlan"}},
      {TokenKind::VLAN, {"vlan"}},
      {TokenKind::ROUTE, {"route"}},
      {TokenKind::ROUTER, {"router"}},
      {TokenKind::OSPF, {"ospf"}},
      {TokenKind::ROUTER_ID, {"router-id"}},
      {TokenKind::NETWORK, {"network"}},
      {TokenKind::AREA, {"area"}},
      {TokenKind::VIRTUAL_LINK, {"virtual-link"}},
      {TokenKind::SPANNING_TREE, {"spanning-tree"}},
      {TokenKind::PRIORITY, {"priority"}},
      {TokenKind::MODE, {"mode"}},
      {TokenKind::ACCESS_LIST, {"access-list"}},
      {TokenKind::ACCESS_GROUP, {"access-group"}},
      {TokenKind::ACL_ACTION, {"permit", "deny"}},
      {TokenKind::EQ, {"eq"}},
      {TokenKind::DIRECTION, {"in", "out"}},
      {TokenKind::NAME, {"name"}},
      {TokenKind::SLASH, {"/"}},
      {TokenKind::IP_ADDRESS_NUM, {}, Builtin::ip4},
      {TokenKind::NUM, {}, Builtin::num},
      {TokenKind::CHAR, {}, Builtin::word},
      {TokenKind::CHAR_HYPH, {}, Builtin::word_hyph},
  };
  return rules;
}

const std::vector<LexRule>& yamaha_rules() {
  static const std::vector<LexRule> rules = {
      {TokenKind::IP, {"ip"}},
      {TokenKind::ROUTE, {"route"}},
      {TokenKind::ADDRESS, {"address"}},
      {TokenKind::GATEWAY, {"gateway"}},
      {TokenKind::DEFAULT, {"default"}},
      {TokenKind::VLAN, {"vlan"}},
      {TokenKind::TAG_8021Q, {"802.1q"}},
      {TokenKind::VID_ASSIGN, {"vid="}},
      {TokenKind::LAN_IF, {}, Builtin::lan_if},
      {TokenKind::SLASH, {"/"}},
      {TokenKind::IP_ADDRESS_NUM, {}, Builtin::ip4},
      {TokenKind::NUM, {}, Builtin::num},
      {TokenKind::CHAR, {}, Builtin::word},
      {TokenKind::CHAR_HYPH, {}, Builtin::word_hyph},
  };
  return rules;
}

struct LineRef {
  std::string_view text;
  std::size_t offset;  // into the full input
  int number;          // 1-based
  int col_base = 0;    // 0-based column of `text` within its source line
};

std::vector<LineRef> split_lines(const std::string& text) {
  std::vector<LineRef> lines;
  std::size_t start = 0;
  int number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::size_t len = end - start;
    if (len > 0 && text[start + len - 1] == '\r') --len;
    lines.push_back({std::string_view(text).substr(start, len), start, number});
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return lines;
}

std::string_view ltrim(std::string_view s, std::size_t& removed) {
  removed = 0;
  while (removed < s.size() && (s[removed] == ' ' || s[removed] == '\t')) ++removed;
  return s.substr(removed);
}

std::string_view rtrim(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && (s[n - 1] == ' ' || s[n - 1] == '\t')) --n;
  return s.substr(0, n);
}

// Lexes one line with the given rules, appending tokens.
void lex_line(const LineRef& line, const std::vector<LexRule>& rules,
              std::vector<Token>& out) {
  std::string_view s = line.text;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t') {
      ++pos;
      continue;
    }
    std::string_view rest = s.substr(pos);
    std::size_t best_len = 0;
    std::size_t best_rule = 0;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const LexRule& rule = rules[r];
      std::size_t len = 0;
      for (const std::string& lit : rule.literals) {
        if (lit.size() > len && rest.substr(0, lit.size()) == lit) len = lit.size();
      }
      if (rule.builtin != Builtin::none) {
        len = std::max(len, match_builtin(rule.builtin, rest));
      }
      if (len > best_len) {
        best_len = len;
        best_rule = r;
      }
    }
    if (best_len == 0) {
      std::size_t bad_end = rest.find(' ');
      std::string offending(rest.substr(0, std::min(bad_end, std::size_t{16})));
      SourcePos p{line.number, line.col_base + static_cast<int>(pos) + 1};
      throw LexError(p, offending,
                     "lex error at " + std::to_string(p.line) + ":" +
                         std::to_string(p.column) + ": unrecognized input '" +
                         offending + "'");
    }
    out.push_back(Token{rules[best_rule].kind, std::string(rest.substr(0, best_len)),
                        line.number, line.col_base + static_cast<int>(pos) + 1,
                        line.offset + pos});
    pos += best_len;
  }
}

enum class Section { config, version, vlan_switch };

// "router# show version", "> show vlan-switch", or a bare "show ..." line.
const std::regex kShowMarker(R"(^(?:\S*[#>])?\s*show\s+([A-Za-z][A-Za-z-]*).*$)");
// Device identity line inside show version output, e.g.
// "Cisco 1812-J (MPC8500) processor (revision 0x400) with ... memory."
const std::regex kVersionModel(R"(^Cisco\s+(\S+)\s+.*processor.*$)");
// Data row of a show vlan-switch table: "10   VLAN0010   active    Fa3, Fa4"
const std::regex kVlanSwitchRow(R"(^(\d+)\s+(\S+)\s+(active|suspended|act/unsup)\b.*$)");

bool is_framing_command(std::string_view trimmed) {
  return trimmed == "enable" || trimmed == "configure terminal" ||
         trimmed == "exit" || trimmed == "end" ||
         trimmed.substr(0, 5) == "copy ";
}

void tokenize_cisco(const std::string& text, std::vector<Token>& out) {
  Section section = Section::config;
  for (const LineRef& raw : split_lines(text)) {
    std::size_t indent = 0;
    std::string_view body = rtrim(ltrim(raw.text, indent));
    if (body.empty()) continue;
    if (body[0] == '!') continue;

    std::string line_str(body);
    std::smatch m;
    if (std::regex_match(line_str, m, kShowMarker)) {
      std::string what = m[1].str();
      if (what == "version") {
        section = Section::version;
      } else if (what == "vlan-switch") {
        section = Section::vlan_switch;
      } else {
        section = Section::config;
      }
      continue;
    }

    LineRef line{body, raw.offset + indent, raw.number, static_cast<int>(indent)};
    switch (section) {
      case Section::version: {
        if (std::regex_match(line_str, m, kVersionModel)) {
          std::size_t model_col = line_str.find(m[1].str());
          out.push_back(Token{TokenKind::VERSION_CISCO, "Cisco", line.number,
                              line.col_base + 1, line.offset});
          out.push_back(Token{TokenKind::MODEL_NAME, m[1].str(), line.number,
                              line.col_base + static_cast<int>(model_col) + 1,
                              line.offset + model_col});
        }
        break;  // every other version line is ignored
      }
      case Section::vlan_switch: {
        if (std::regex_match(line_str, m, kVlanSwitchRow)) {
          // Normalize the table row into declaration tokens: vlan <id> name <name>
          std::size_t name_col = line_str.find(m[2].str(), m[1].str().size());
          out.push_back(Token{TokenKind::VLAN, "vlan", line.number,
                              line.col_base + 1, line.offset});
          out.push_back(Token{TokenKind::NUM, m[1].str(), line.number,
                              line.col_base + 1, line.offset});
          out.push_back(Token{TokenKind::NAME, "name", line.number,
                              line.col_base + static_cast<int>(name_col) + 1,
                              line.offset + name_col});
          // The name itself goes through the normal character rules so that a
          // name like VLAN0010 yields the same tokens as a "name" config line.
          LineRef name_ref{std::string_view(line_str).substr(name_col, m[2].str().size()),
                           line.offset + name_col, line.number,
                           line.col_base + static_cast<int>(name_col)};
          lex_line(name_ref, cisco_rules(), out);
        }
        break;  // headers, separators and continuation rows are ignored
      }
      case Section::config: {
        if (is_framing_command(body)) continue;
        lex_line(line, cisco_rules(), out);
        break;
      }
    }
  }
}

void tokenize_yamaha(const std::string& text, std::vector<Token>& out) {
  for (const LineRef& raw : split_lines(text)) {
    std::size_t indent = 0;
    std::string_view body = rtrim(ltrim(raw.text, indent));
    if (body.empty()) continue;
    if (body[0] == '#') continue;
    LineRef line{body, raw.offset + indent, raw.number, static_cast<int>(indent)};
    lex_line(line, yamaha_rules(), out);
  }
}

}  // namespace

std::string kind_name(TokenKind kind) {
  for (const KindName& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

bool kind_from_name(std::string_view name, TokenKind& out) {
  for (const KindName& kn : kKindNames) {
    if (name == kn.name) {
      out = kn.kind;
      return true;
    }
  }
  return false;
}

std::vector<Token> tokenize(const std::string& text, Vendor vendor) {
  std::vector<Token> out;
  if (vendor == Vendor::cisco) {
    tokenize_cisco(text, out);
  } else {
    tokenize_yamaha(text, out);
  }
  return out;
}

}  // namespace ncm
