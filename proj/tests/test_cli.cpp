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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncm/cli.hpp"
#include "ncm/extractor.hpp"
#include "ncm/generator.hpp"
#include "ncm/parser.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int rc = 0;
  std::string out;
  std::string err;
};

// Runs the front end with stdout/stderr captured.
CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  int rc = ncm::run(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {rc, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(NCM_FIXTURES_DIR) + "/configs/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Temp file that removes itself; contents written on construction.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name, const std::string& contents = {}) {
    path = fs::temp_directory_path() / name;
    if (!contents.empty()) {
      std::ofstream out(path, std::ios::binary);
      out << contents;
    }
  }
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
  std::string str() const { return path.string(); }
};

std::string expected_model(const std::string& config, ncm::Vendor vendor) {
  return ncm::serialize_model(ncm::extract(ncm::parse_file(config, vendor),
                                           ncm::builtin_table(vendor),
                                           ncm::builtin_metamodel()));
}

}  // namespace

TEST_CASE("extract writes one model as JSON to stdout") {
  CliResult r = cli({"extract", "--vendor", "cisco", fixture("list1.cfg")});
  CHECK(r.rc == 0);
  CHECK(r.err.empty());
  CHECK(r.out == expected_model(fixture("list1.cfg"), ncm::Vendor::cisco));
  CHECK(nlohmann::json::parse(r.out).contains("groupValues"));
}

TEST_CASE("extract honors --output and its short form") {
  TempFile out1("ncm_cli_extract1.json");
  CliResult r1 = cli({"extract", "--vendor", "cisco", "--output", out1.str(),
                      fixture("list1.cfg")});
  CHECK(r1.rc == 0);
  CHECK(r1.out.empty());
  CHECK(slurp(out1.str()) == expected_model(fixture("list1.cfg"), ncm::Vendor::cisco));

  TempFile out2("ncm_cli_extract2.json");
  CliResult r2 = cli({"extract", "--vendor", "cisco", "-o", out2.str(),
                      fixture("yamaha1.cfg")});
  // Wrong dialect for the file: the parse fails, nothing is written.
  CHECK(r2.rc == 1);
  CHECK_FALSE(fs::exists(out2.path));

  CliResult r3 = cli({"extract", "--vendor", "yamaha", "-o", out2.str(),
                      fixture("yamaha1.cfg")});
  CHECK(r3.rc == 0);
  CHECK(slurp(out2.str()) == expected_model(fixture("yamaha1.cfg"), ncm::Vendor::yamaha));
}

TEST_CASE("extracting several files yields a device array") {
  CliResult r = cli({"extract", "--vendor", "cisco", fixture("list1.cfg"),
                     fixture("campus1.cfg")});
  CHECK(r.rc == 0);
  nlohmann::json arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["device"] == "Router");
  CHECK(arr[0]["path"] == fixture("list1.cfg"));
  CHECK(arr[0]["model"].contains("groupValues"));
  CHECK(arr[1]["device"] == "campus1");
}

TEST_CASE("batch extraction keeps going past bad files") {
  CliResult r = cli({"extract", "--vendor", "cisco", fixture("list1.cfg"),
                     fixture("badtoken.cfg")});
  CHECK(r.rc == 1);
  CHECK(r.err.find(fixture("badtoken.cfg") + ":3:13: ") != std::string::npos);
  nlohmann::json arr = nlohmann::json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 1);

  CliResult r2 = cli({"extract", "--vendor", "cisco", fixture("list1.cfg"),
                      "/nonexistent/void.cfg"});
  CHECK(r2.rc == 2);
  CHECK(r2.err.find("cannot read") != std::string::npos);
  CHECK(nlohmann::json::parse(r2.out).size() == 1);
}

TEST_CASE("diagnostics carry file, line, and column") {
  CliResult lex = cli({"extract", "--vendor", "cisco", fixture("badtoken.cfg")});
  CHECK(lex.rc == 1);
  CHECK(lex.err.find(fixture("badtoken.cfg") + ":3:13: ") != std::string::npos);

  CliResult parse = cli({"extract", "--vendor", "cisco", fixture("parseerr.cfg")});
  CHECK(parse.rc == 1);
  CHECK(parse.err.find(fixture("parseerr.cfg") + ":3:1: ") != std::string::npos);

  CliResult ext = cli({"extract", "--vendor", "cisco", fixture("dupslot.cfg")});
  CHECK(ext.rc == 1);
  CHECK(ext.err.find(fixture("dupslot.cfg") + ":4:13: conflicting values") !=
        std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(cli({}).rc == 2);
  CHECK(cli({"frobnicate"}).rc == 2);
  CHECK(cli({"extract", fixture("list1.cfg")}).rc == 2);  // --vendor missing
  CHECK(cli({"extract", "--vendor", "juniper", fixture("list1.cfg")}).rc == 2);
  CHECK(cli({"extract", "--vendor", "cisco"}).rc == 2);  // no inputs
  CHECK(cli({"--help"}).rc == 0);
}

TEST_CASE("generate turns a model file back into commands") {
  TempFile model("ncm_cli_gen_model.json",
                 expected_model(fixture("list1.cfg"), ncm::Vendor::cisco));
  CliResult r = cli({"generate", model.str()});
  CHECK(r.rc == 0);
  CHECK(r.out == slurp(std::string(NCM_FIXTURES_DIR) + "/expected/list1.script.txt"));
}

TEST_CASE("generate reports an inexpressible model") {
  TempFile model("ncm_cli_gen_bad.json", R"({
    "groupValues": [
      {"name": "Cf1", "group": "Config"},
      {"name": "CES1", "group": "CiscoEthernetSetting", "slots": {"shutdown": "true"}}
    ],
    "links": [["Cf1", "CES1"]]
  })");
  CliResult r = cli({"generate", model.str()});
  CHECK(r.rc == 1);
  CHECK(r.err.find("missing required item port") != std::string::npos);
}

TEST_CASE("roundtrip prints OK per config") {
  CliResult one = cli({"roundtrip", "--vendor", "cisco", fixture("list1.cfg")});
  CHECK(one.rc == 0);
  CHECK(one.out == "OK\n");

  CliResult two = cli({"roundtrip", "--vendor", "cisco", fixture("list1.cfg"),
                       fixture("campus4.cfg")});
  CHECK(two.rc == 0);
  CHECK(two.out == "OK " + fixture("list1.cfg") + "\nOK " + fixture("campus4.cfg") + "\n");
}

TEST_CASE("a lossy mapping override surfaces as a roundtrip DIFF") {
  // The rewrite prefixes the hostname on every extraction, so the second
  // pass cannot reproduce the first model.
  TempFile mapping("ncm_cli_diff_mapping.tsv",
                   "subtree_root\tparent\ttarget\tpresence\toriginal\treplaced\tgroup\titem\n"
                   "hostname\thostname\tany\tPresent\t(.*)\tX$1\tHostname\tname\n");
  TempFile config("ncm_cli_diff_config.cfg", "hostname Router\n");
  CliResult r = cli({"roundtrip", "--vendor", "cisco", "--mapping", mapping.str(),
                     config.str()});
  CHECK(r.rc == 1);
  CHECK(r.out == "DIFF\n");
  CHECK(r.err.find(config.str() + ": only in") != std::string::npos);
}

TEST_CASE("a broken mapping override is a usage error with diagnostics") {
  TempFile mapping("ncm_cli_bad_mapping.tsv", "garbage\n");
  CliResult r = cli({"extract", "--vendor", "cisco", "--mapping", mapping.str(),
                     fixture("list1.cfg")});
  CHECK(r.rc == 2);
  CHECK(r.err.find("missing or wrong header row at line 1") != std::string::npos);
}

TEST_CASE("a mapping override equal to the builtin changes nothing") {
  std::string mapping = std::string(NCM_MAPPINGS_DIR) + "/cisco.tsv";
  CliResult with = cli({"extract", "--vendor", "cisco", "--mapping", mapping,
                        fixture("campus1.cfg")});
  CliResult without = cli({"extract", "--vendor", "cisco", fixture("campus1.cfg")});
  CHECK(with.rc == 0);
  CHECK(with.out == without.out);
}

TEST_CASE("check reports OK or the violations") {
  TempFile good("ncm_cli_check_good.json",
                expected_model(fixture("campus1.cfg"), ncm::Vendor::cisco));
  CliResult ok = cli({"check", good.str()});
  CHECK(ok.rc == 0);
  CHECK(ok.out == "OK\n");

  TempFile bad("ncm_cli_check_bad.json", R"({
    "groupValues": [
      {"name": "Cf1", "group": "Config"},
      {"name": "Cf2", "group": "Config"}
    ]
  })");
  CliResult violated = cli({"check", bad.str()});
  CHECK(violated.rc == 1);
  CHECK(violated.err.find("multiple-config Config: model has more than one Config value")
        != std::string::npos);
}

TEST_CASE("stats aggregates one or more model files") {
  TempFile m1("ncm_cli_stats1.json",
              expected_model(fixture("list1.cfg"), ncm::Vendor::cisco));
  CliResult one = cli({"stats", m1.str()});
  CHECK(one.rc == 0);
  nlohmann::json j = nlohmann::json::parse(one.out);
  CHECK(j["groupValueCount"] == 4);
  CHECK(j["linkCount"] == 3);
  CHECK(j["slotValueCount"] == 9);
  CHECK(j["distinctItemKinds"] == 9);

  CliResult two = cli({"stats", m1.str(), m1.str()});
  nlohmann::json j2 = nlohmann::json::parse(two.out);
  CHECK(j2["groupValueCount"] == 8);
  CHECK(j2["slotValueCount"] == 18);
  // The same slots again introduce no new item kinds.
  CHECK(j2["distinctItemKinds"] == 9);

  CHECK(cli({"stats", "/nonexistent/model.json"}).rc == 2);
}

TEST_CASE("dump-tree prints parse trees, with headers for several files") {
  CliResult one = cli({"dump-tree", "--vendor", "cisco", fixture("list1.cfg")});
  CHECK(one.rc == 0);
  CHECK(one.out.find("rule: file") == 0);
  CHECK(one.out.find("== ") == std::string::npos);

  CliResult two = cli({"dump-tree", "--vendor", "cisco", fixture("list1.cfg"),
                       fixture("campus4.cfg")});
  CHECK(two.rc == 0);
  CHECK(two.out.find("== " + fixture("list1.cfg") + " ==\n") != std::string::npos);
  CHECK(two.out.find("== " + fixture("campus4.cfg") + " ==\n") != std::string::npos);
}
