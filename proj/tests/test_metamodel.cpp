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

#include <algorithm>
#include <string>
#include <vector>

#include "ncm/errors.hpp"
#include "ncm/metamodel.hpp"
#include "ncm/model.hpp"

namespace {

using ncm::DeviceModel;
using ncm::GroupValue;
using ncm::Metamodel;
using ncm::ValueKind;
using ncm::Violation;
using ncm::ViolationCode;

bool has_violation(const std::vector<Violation>& vs, ViolationCode code,
                   const std::string& subject) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.code == code && v.subject == subject;
  });
}

// Smallest model that validates cleanly.
DeviceModel valid_model() {
  DeviceModel m;
  m.group_values.push_back({"Cf1", "Config", {}});
  m.group_values.push_back({"Hn1", "Hostname", {{"name", "edge"}}});
  m.links.emplace_back("Cf1", "Hn1");
  return m;
}

}  // namespace

TEST_CASE("the builtin metamodel is structurally sound") {
  CHECK(ncm::check_metamodel(ncm::builtin_metamodel()).empty());
}

TEST_CASE("group lookup distinguishes concrete, abstract, and unknown") {
  const Metamodel& mm = ncm::builtin_metamodel();
  const ncm::GroupDef* config = mm.find_group("Config");
  REQUIRE(config != nullptr);
  CHECK_FALSE(config->abstract_);
  CHECK(config->abbrev == "Cf");

  const ncm::GroupDef* eth = mm.find_group("EthernetSetting");
  REQUIRE(eth != nullptr);
  CHECK(eth->abstract_);
  CHECK(eth->abbrev.empty());

  CHECK(mm.find_group("Switchboard") == nullptr);
}

TEST_CASE("lineage walks the generalization edges") {
  const Metamodel& mm = ncm::builtin_metamodel();
  CHECK(mm.supergroups_of("CiscoEthernetSetting") ==
        std::vector<std::string>{"EthernetSetting"});
  CHECK(mm.supergroups_of("Config").empty());

  auto lin = mm.lineage("CiscoVlanSetting");
  CHECK(lin.size() == 2);
  CHECK(lin[0] == "CiscoVlanSetting");
  CHECK(lin[1] == "VlanSetting");
  CHECK(mm.lineage("StpSetting") == std::vector<std::string>{"StpSetting"});
}

TEST_CASE("item closure includes inherited items with their owners") {
  const Metamodel& mm = ncm::builtin_metamodel();
  auto closure = mm.item_closure("CiscoEthernetSetting");
  // 7 own items plus port/ipAddress from the vendor-neutral layer.
  CHECK(closure.size() == 9);
  bool saw_port = false, saw_shutdown = false;
  for (const auto& [item, owner] : closure) {
    if (item.name == "port") {
      saw_port = true;
      CHECK(owner == "EthernetSetting");
    }
    if (item.name == "shutdown") {
      saw_shutdown = true;
      CHECK(owner == "CiscoEthernetSetting");
    }
  }
  CHECK(saw_port);
  CHECK(saw_shutdown);
}

TEST_CASE("defining_group resolves own, inherited, and missing items") {
  const Metamodel& mm = ncm::builtin_metamodel();
  CHECK(mm.defining_group("CiscoEthernetSetting", "port") == "EthernetSetting");
  CHECK(mm.defining_group("YamahaEthernetSetting", "port") == "EthernetSetting");
  CHECK(mm.defining_group("CiscoVlanSetting", "vlanNum") == "VlanSetting");
  // CiscoVlanSetting declares its own ipAddress; it is not the ethernet one.
  CHECK(mm.defining_group("CiscoVlanSetting", "ipAddress") == "CiscoVlanSetting");
  CHECK(mm.defining_group("CiscoStpSetting", "vlanNum") == "CiscoStpSetting");
  CHECK(!mm.defining_group("CiscoEthernetSetting", "color").has_value());
}

TEST_CASE("find_item reports each item's value kind") {
  const Metamodel& mm = ncm::builtin_metamodel();
  const ncm::ItemDef* vlan = mm.find_item("CiscoEthernetSetting", "accessVlan");
  REQUIRE(vlan != nullptr);
  CHECK(vlan->kind == ValueKind::integer);
  CHECK(mm.find_item("CiscoVlanSetting", "subnetMask")->kind == ValueKind::ip_mask);
  CHECK(mm.find_item("CiscoEthernetSetting", "shutdown")->kind == ValueKind::boolean);
  CHECK(mm.find_item("CiscoEthernetSetting", "port")->kind == ValueKind::string_);
  CHECK(mm.find_item("Hostname", "color") == nullptr);
}

TEST_CASE("associations apply to whole lineages, in both directions") {
  const Metamodel& mm = ncm::builtin_metamodel();
  CHECK(mm.association_allows("Config", "Hostname"));
  CHECK(mm.association_allows("Config", "CiscoEthernetSetting"));
  CHECK(mm.association_allows("YamahaStaticRouteSetting", "Config"));
  CHECK(mm.association_allows("CiscoOspfSetting", "OspfNetwork"));
  CHECK(mm.association_allows("OspfVirtualLink", "CiscoOspfSetting"));
  CHECK_FALSE(mm.association_allows("Hostname", "CiscoEthernetSetting"));
  CHECK_FALSE(mm.association_allows("Config", "OspfNetwork"));
}

TEST_CASE("value kinds are checked lexically") {
  using ncm::value_matches_kind;
  CHECK(value_matches_kind("", ValueKind::string_));
  CHECK(value_matches_kind("anything at all", ValueKind::string_));

  CHECK(value_matches_kind("10", ValueKind::integer));
  CHECK_FALSE(value_matches_kind("abc", ValueKind::integer));
  CHECK_FALSE(value_matches_kind("-1", ValueKind::integer));
  CHECK_FALSE(value_matches_kind("", ValueKind::integer));

  CHECK(value_matches_kind("true", ValueKind::boolean));
  CHECK(value_matches_kind("false", ValueKind::boolean));
  CHECK_FALSE(value_matches_kind("True", ValueKind::boolean));

  CHECK(value_matches_kind("192.168.100.1", ValueKind::ip_address));
  CHECK(value_matches_kind("255.255.255.0", ValueKind::ip_mask));
  CHECK_FALSE(value_matches_kind("10.0.0", ValueKind::ip_address));
  CHECK_FALSE(value_matches_kind("256.0.0.1", ValueKind::ip_address));
  CHECK_FALSE(value_matches_kind("1.2.3.4.5", ValueKind::ip_address));
  CHECK_FALSE(value_matches_kind("1.2.3.", ValueKind::ip_address));
}

TEST_CASE("value kind names are stable") {
  CHECK(ncm::value_kind_name(ValueKind::string_) == "string");
  CHECK(ncm::value_kind_name(ValueKind::integer) == "integer");
  CHECK(ncm::value_kind_name(ValueKind::boolean) == "boolean");
  CHECK(ncm::value_kind_name(ValueKind::ip_address) == "ip-address");
  CHECK(ncm::value_kind_name(ValueKind::ip_mask) == "ip-mask");
}

TEST_CASE("check_metamodel flags structural defects") {
  Metamodel mm;
  mm.groups.push_back({"A", "A1", false, {{"x", ValueKind::string_}, {"x", ValueKind::integer}}});
  mm.groups.push_back({"A", "A2", false, {}});
  mm.groups.push_back({"B", "A1", false, {}});
  mm.generalizations = {{"A", "Ghost"}, {"Ghost2", "B"}};
  mm.associations = {{"A", "Ghost3", "1", "1"}};

  auto problems = ncm::check_metamodel(mm);
  auto has = [&](const std::string& needle) {
    return std::any_of(problems.begin(), problems.end(), [&](const std::string& p) {
      return p.find(needle) != std::string::npos;
    });
  };
  CHECK(has("duplicate group name: A"));
  CHECK(has("duplicate item x in group A"));
  CHECK(has("duplicate group abbreviation: A1"));
  CHECK(has("generalization to unknown group: Ghost"));
  CHECK(has("generalization from unknown group: Ghost2"));
  CHECK(has("association references unknown group: Ghost3"));
}

TEST_CASE("check_metamodel detects generalization cycles") {
  Metamodel mm;
  mm.groups.push_back({"A", "", false, {}});
  mm.groups.push_back({"B", "", false, {}});
  mm.generalizations = {{"A", "B"}, {"B", "A"}};
  auto problems = ncm::check_metamodel(mm);
  CHECK(std::any_of(problems.begin(), problems.end(), [](const std::string& p) {
    return p.find("generalization cycle") != std::string::npos;
  }));
  // lineage() itself must still terminate on the cyclic input.
  CHECK(mm.lineage("A").size() == 2);
}

TEST_CASE("a well-formed model validates cleanly") {
  CHECK(ncm::validate_model(valid_model(), ncm::builtin_metamodel()).empty());
}

TEST_CASE("validate_model reports every violation class") {
  const Metamodel& mm = ncm::builtin_metamodel();

  SUBCASE("duplicate group value names") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"Hn1", "Hostname", {}});
    CHECK(has_violation(ncm::validate_model(m, mm),
                        ViolationCode::duplicate_group_value_name, "Hn1"));
  }
  SUBCASE("unknown group") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"Zz1", "Frobnicator", {}});
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::unknown_group, "Zz1"));
  }
  SUBCASE("abstract group instantiated") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"ES1", "EthernetSetting", {}});
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::abstract_group, "ES1"));
  }
  SUBCASE("unknown item") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"CES1", "CiscoEthernetSetting", {{"color", "red"}}});
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::unknown_item,
                        "CES1.color"));
  }
  SUBCASE("value of the wrong kind") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"CES1", "CiscoEthernetSetting", {{"accessVlan", "abc"}}});
    auto vs = ncm::validate_model(m, mm);
    CHECK(has_violation(vs, ViolationCode::bad_value_kind, "CES1.accessVlan"));
  }
  SUBCASE("missing Config") {
    DeviceModel m;
    m.group_values.push_back({"Hn1", "Hostname", {}});
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::missing_config,
                        "Config"));
  }
  SUBCASE("more than one Config") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"Cf2", "Config", {}});
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::multiple_config,
                        "Config"));
  }
  SUBCASE("dangling link") {
    DeviceModel m = valid_model();
    m.links.emplace_back("Cf1", "Ghost9");
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::dangling_link,
                        "Cf1 -- Ghost9"));
  }
  SUBCASE("link without an association") {
    DeviceModel m = valid_model();
    m.group_values.push_back({"CES1", "CiscoEthernetSetting", {{"port", "1"}}});
    m.links.emplace_back("Hn1", "CES1");
    CHECK(has_violation(ncm::validate_model(m, mm), ViolationCode::illegal_link,
                        "Hn1 -- CES1"));
  }
}

TEST_CASE("violation code names are stable") {
  CHECK(ncm::violation_code_name(ViolationCode::bad_value_kind) == "bad-value-kind");
  CHECK(ncm::violation_code_name(ViolationCode::illegal_link) == "illegal-link");
}

TEST_CASE("serialization is deterministic and order-insensitive") {
  DeviceModel a = valid_model();
  DeviceModel b;
  // Same content, different declaration and link order.
  b.group_values.push_back({"Hn1", "Hostname", {{"name", "edge"}}});
  b.group_values.push_back({"Cf1", "Config", {}});
  b.links.emplace_back("Hn1", "Cf1");
  CHECK(ncm::serialize_model(a) == ncm::serialize_model(b));
  CHECK(ncm::serialize_model(a).back() == '\n');
}

TEST_CASE("models survive a JSON round trip") {
  const Metamodel& mm = ncm::builtin_metamodel();
  DeviceModel m = valid_model();
  m.group_values.push_back({"CES1", "CiscoEthernetSetting",
                            {{"port", "3"}, {"shutdown", "true"}}});
  m.links.emplace_back("Cf1", "CES1");
  DeviceModel back = ncm::deserialize_model(ncm::serialize_model(m), mm);
  CHECK(ncm::model_equal(m, back));
  CHECK(back.find("CES1") != nullptr);
  CHECK(back.find("CES1")->slots.at("port") == "3");
  CHECK(m.find("Nope") == nullptr);
}

TEST_CASE("deserialization rejects malformed input") {
  const Metamodel& mm = ncm::builtin_metamodel();
  CHECK_THROWS_AS(ncm::deserialize_model("{not json", mm), ncm::ModelSchemaError);
  CHECK_THROWS_AS(ncm::deserialize_model("[]", mm), ncm::ModelSchemaError);
  CHECK_THROWS_AS(ncm::deserialize_model(R"({"groupValues":[{"name":"X1"}]})", mm),
                  ncm::ModelSchemaError);
  CHECK_THROWS_AS(ncm::deserialize_model(
                      R"({"groupValues":[{"name":"X1","group":"Widget"}]})", mm),
                  ncm::ModelSchemaError);
  CHECK_THROWS_AS(
      ncm::deserialize_model(
          R"({"groupValues":[{"name":"H1","group":"Hostname","slots":{"color":"red"}}]})",
          mm),
      ncm::ModelSchemaError);
  CHECK_THROWS_AS(
      ncm::deserialize_model(
          R"({"groupValues":[{"name":"H1","group":"Hostname","slots":{"name":7}}]})", mm),
      ncm::ModelSchemaError);
  CHECK_THROWS_AS(ncm::deserialize_model(
                      R"({"groupValues":[],"links":[["a","b","c"]]})", mm),
                  ncm::ModelSchemaError);
  CHECK_THROWS_AS(ncm::load_model_file("/nonexistent/m.json", mm), ncm::IoError);
}

TEST_CASE("canonicalization makes extraction names irrelevant") {
  DeviceModel a = valid_model();
  DeviceModel b;
  b.group_values.push_back({"Hostname7", "Hostname", {{"name", "edge"}}});
  b.group_values.push_back({"TheConfig", "Config", {}});
  b.links.emplace_back("Hostname7", "TheConfig");
  CHECK(ncm::model_equal(a, b));

  DeviceModel canon = ncm::canonicalize_model(b);
  REQUIRE(canon.group_values.size() == 2);
  CHECK(canon.find("Config#1") != nullptr);
  CHECK(canon.find("Hostname#1") != nullptr);
  REQUIRE(canon.links.size() == 1);
  CHECK(canon.links[0] == std::make_pair(std::string("Config#1"),
                                         std::string("Hostname#1")));
}

TEST_CASE("model_diff pinpoints differences and honors ignored items") {
  DeviceModel a = valid_model();
  DeviceModel b = valid_model();
  b.find("Hn1")->slots["name"] = "core";

  auto diff = ncm::model_diff(a, b);
  REQUIRE(diff.size() == 2);
  CHECK(diff[0].find("only in right:") != std::string::npos);
  CHECK(diff[0].find("name=core") != std::string::npos);
  CHECK(diff[1].find("only in left:") != std::string::npos);
  CHECK(diff[1].find("name=edge") != std::string::npos);
  CHECK_FALSE(ncm::model_equal(a, b));
  CHECK(ncm::model_equal(a, b, {"Hostname.name"}));

  DeviceModel c = valid_model();
  c.links.clear();
  auto link_diff = ncm::model_diff(a, c);
  REQUIRE(link_diff.size() == 1);
  CHECK(link_diff[0] == "link only in left: Config#1 -- Hostname#1");
}

TEST_CASE("model stats count values, links, slots, and item kinds") {
  const Metamodel& mm = ncm::builtin_metamodel();
  DeviceModel m = valid_model();
  m.group_values.push_back({"CES1", "CiscoEthernetSetting",
                            {{"port", "3"}, {"shutdown", "true"}}});
  m.links.emplace_back("Cf1", "CES1");

  ncm::ModelStats one = ncm::model_stats(m, mm);
  CHECK(one.group_value_count == 3);
  CHECK(one.link_count == 2);
  CHECK(one.slot_value_count == 3);
  // name, port (owned by EthernetSetting), shutdown.
  CHECK(one.distinct_item_kinds == 3);

  ncm::ModelStats agg = ncm::model_stats(std::vector<DeviceModel>{m, m}, mm);
  CHECK(agg.group_value_count == 6);
  CHECK(agg.link_count == 4);
  CHECK(agg.slot_value_count == 6);
  CHECK(agg.distinct_item_kinds == 3);
}
