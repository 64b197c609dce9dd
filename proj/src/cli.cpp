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
#include "ncm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncm/errors.hpp"
#include "ncm/extractor.hpp"
#include "ncm/generator.hpp"
#include "ncm/parser.hpp"

namespace ncm {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_payload(const std::string& payload, const std::string& output) {
  if (output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw IoError("cannot write '" + output + "'");
  out << payload;
}

std::string positioned(const std::string& path, SourcePos pos, const std::string& what) {
  return path + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
         ": " + what;
}

// Runs `body` for one input file, turning exceptions into diagnostics.
// Returns the worst exit code seen (0, 1, or 2).
template <typename Fn>
int per_file(const std::string& path, Fn&& body) {
  try {
    body();
    return 0;
  } catch (const LexError& e) {
    std::cerr << positioned(path, e.pos(), e.what()) << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << positioned(path, e.pos(), e.what()) << '\n';
    return 1;
  } catch (const ExtractError& e) {
    std::cerr << positioned(path, e.pos(), e.what()) << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}

struct CommonArgs {
  std::string vendor_name = "cisco";
  std::string mapping_path;
  std::string output;
  std::vector<std::string> inputs;
};

const MappingTable& pick_table(const CommonArgs& args, Vendor vendor,
                               MappingTable& storage) {
  if (args.mapping_path.empty()) return builtin_table(vendor);
  storage = load_mapping(args.mapping_path, vendor);
  return storage;
}

int cmd_extract(const CommonArgs& args) {
  Vendor vendor = vendor_from_name(args.vendor_name);
  MappingTable storage;
  const MappingTable& table = pick_table(args, vendor, storage);
  const Metamodel& mm = builtin_metamodel();

  if (args.inputs.size() == 1) {
    DeviceModel model;
    int rc = per_file(args.inputs[0], [&] {
      model = extract(parse_file(args.inputs[0], vendor), table, mm);
    });
    if (rc != 0) return rc;
    write_payload(serialize_model(model), args.output);
    return 0;
  }

  // Batch mode: an array of per-device results; failures reported on
  // stderr without stopping the rest.
  nlohmann::json out = nlohmann::json::array();
  int worst = 0;
  for (const auto& path : args.inputs) {
    DeviceModel model;
    int rc = per_file(path, [&] { model = extract(parse_file(path, vendor), table, mm); });
    if (rc != 0) {
      worst = std::max(worst, rc);
      continue;
    }
    std::string device = std::filesystem::path(path).stem().string();
    for (const auto& gv : model.group_values) {
      if (gv.group != "Hostname") continue;
      auto slot = gv.slots.find("name");
      if (slot != gv.slots.end()) device = slot->second;
    }
    nlohmann::json entry;
    entry["device"] = device;
    entry["path"] = path;
    entry["model"] = nlohmann::json::parse(serialize_model(model));
    out.push_back(std::move(entry));
  }
  write_payload(out.dump(2) + "\n", args.output);
  return worst;
}

int cmd_generate(const CommonArgs& args) {
  const Metamodel& mm = builtin_metamodel();
  DeviceModel model = load_model_file(args.inputs[0], mm);
  CommandScript script = generate(model, mm);
  write_payload(print_script(script), args.output);
  return 0;
}

int cmd_roundtrip(const CommonArgs& args) {
  Vendor vendor = vendor_from_name(args.vendor_name);
  MappingTable storage;
  const MappingTable& table = pick_table(args, vendor, storage);
  const Metamodel& mm = builtin_metamodel();
  const bool many = args.inputs.size() > 1;

  int worst = 0;
  for (const auto& path : args.inputs) {
    int rc = per_file(path, [&] {
      RoundtripResult result = roundtrip_check(read_file(path), vendor, table, mm);
      std::string suffix = many ? " " + path : "";
      if (result.equal) {
        std::cout << "OK" << suffix << '\n';
      } else {
        std::cout << "DIFF" << suffix << '\n';
        for (const auto& line : result.diff) std::cerr << path << ": " << line << '\n';
        throw Error("round-trip difference in " + path);
      }
    });
    worst = std::max(worst, rc);
  }
  return worst;
}

int cmd_check(const CommonArgs& args) {
  const Metamodel& mm = builtin_metamodel();
  DeviceModel model = load_model_file(args.inputs[0], mm);
  auto violations = validate_model(model, mm);
  if (violations.empty()) {
    std::cout << "OK\n";
    return 0;
  }
  for (const auto& v : violations)
    std::cerr << violation_code_name(v.code) << " " << v.subject << ": " << v.detail
              << '\n';
  return 1;
}

int cmd_stats(const CommonArgs& args) {
  const Metamodel& mm = builtin_metamodel();
  std::vector<DeviceModel> models;
  for (const auto& path : args.inputs) models.push_back(load_model_file(path, mm));
  ModelStats stats = model_stats(models, mm);
  nlohmann::json out;
  out["groupValueCount"] = stats.group_value_count;
  out["linkCount"] = stats.link_count;
  out["slotValueCount"] = stats.slot_value_count;
  out["distinctItemKinds"] = stats.distinct_item_kinds;
  write_payload(out.dump(2) + "\n", args.output);
  return 0;
}

int cmd_dump_tree(const CommonArgs& args) {
  Vendor vendor = vendor_from_name(args.vendor_name);
  const bool many = args.inputs.size() > 1;
  std::ostringstream payload;
  int worst = 0;
  for (const auto& path : args.inputs) {
    int rc = per_file(path, [&] {
      ParseTree tree = parse_file(path, vendor);
      if (many) payload << "== " << path << " ==\n";
      payload << dump_tree(tree);
    });
    worst = std::max(worst, rc);
  }
  write_payload(payload.str(), args.output);
  return worst;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Network device configuration model round-trip tool"};
  app.require_subcommand(1);

  CommonArgs extract_args, generate_args, roundtrip_args, check_args, stats_args,
      dump_args;

  auto add_vendor = [](CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--vendor", args.vendor_name, "Config dialect")
        ->required()
        ->check(CLI::IsMember({"cisco", "yamaha"}));
  };
  auto add_mapping = [](CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--mapping", args.mapping_path,
                    "Mapping table TSV overriding the builtin table");
  };
  auto add_output = [](CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-o,--output", args.output,
                    "Write the payload here instead of stdout");
  };

  CLI::App* extract_cmd =
      app.add_subcommand("extract", "Parse configs and emit device models");
  add_vendor(extract_cmd, extract_args);
  add_mapping(extract_cmd, extract_args);
  add_output(extract_cmd, extract_args);
  extract_cmd->add_option("configs", extract_args.inputs, "Config files")
      ->required()
      ->expected(-1);

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Emit a command script from a model file");
  add_output(generate_cmd, generate_args);
  generate_cmd->add_option("model", generate_args.inputs, "Model JSON file")
      ->required()
      ->expected(1);

  CLI::App* roundtrip_cmd = app.add_subcommand(
      "roundtrip", "Extract, regenerate, re-extract, and compare");
  add_vendor(roundtrip_cmd, roundtrip_args);
  add_mapping(roundtrip_cmd, roundtrip_args);
  roundtrip_cmd->add_option("configs", roundtrip_args.inputs, "Config files")
      ->required()
      ->expected(-1);

  CLI::App* check_cmd =
      app.add_subcommand("check", "Validate a model file against the metamodel");
  check_cmd->add_option("model", check_args.inputs, "Model JSON file")
      ->required()
      ->expected(1);

  CLI::App* stats_cmd =
      app.add_subcommand("stats", "Report aggregate slot/link statistics for models");
  add_output(stats_cmd, stats_args);
  stats_cmd->add_option("models", stats_args.inputs, "Model JSON files")
      ->required()
      ->expected(-1);

  CLI::App* dump_cmd = app.add_subcommand("dump-tree", "Print the parse tree");
  add_vendor(dump_cmd, dump_args);
  add_output(dump_cmd, dump_args);
  dump_cmd->add_option("configs", dump_args.inputs, "Config files")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (extract_cmd->parsed()) return cmd_extract(extract_args);
    if (generate_cmd->parsed()) return cmd_generate(generate_args);
    if (roundtrip_cmd->parsed()) return cmd_roundtrip(roundtrip_args);
    if (check_cmd->parsed()) return cmd_check(check_args);
    if (stats_cmd->parsed()) return cmd_stats(stats_args);
    if (dump_cmd->parsed()) return cmd_dump_tree(dump_args);
  } catch (const IoError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const MappingLoadError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << d << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("netmodel");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ncm
