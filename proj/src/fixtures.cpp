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
#include "ncm/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ncm/errors.hpp"

namespace ncm {

std::vector<Fixture> corpus(const std::string& root) {
  namespace fs = std::filesystem;
  fs::path base(root);
  std::ifstream in(base / "manifest.json", std::ios::binary);
  if (!in) throw IoError("cannot read fixture manifest in '" + root + "'");
  std::ostringstream buf;
  buf << in.rdbuf();

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ModelSchemaError(std::string("broken fixture manifest: ") + e.what());
  }
  if (!j.is_object() || !j.contains("fixtures") || !j["fixtures"].is_array())
    throw ModelSchemaError("fixture manifest needs a fixtures array");

  auto resolve = [&base](const std::string& rel) { return (base / rel).string(); };

  std::vector<Fixture> out;
  for (const auto& entry : j["fixtures"]) {
    Fixture f;
    f.name = entry.at("name").get<std::string>();
    f.config_path = resolve(entry.at("config").get<std::string>());
    f.vendor = vendor_from_name(entry.at("vendor").get<std::string>());
    if (entry.contains("expectedModel"))
      f.expected_model_path = resolve(entry["expectedModel"].get<std::string>());
    if (entry.contains("expectedScript"))
      f.expected_script_path = resolve(entry["expectedScript"].get<std::string>());
    if (entry.contains("description"))
      f.description = entry["description"].get<std::string>();
    if (entry.contains("roundtrip")) f.roundtrip = entry["roundtrip"].get<bool>();
    if (entry.contains("corpusGroup"))
      f.corpus_group = entry["corpusGroup"].get<std::string>();
    if (entry.contains("negative")) {
      f.negative = true;
      const auto& neg = entry["negative"];
      f.failure.kind = neg.at("kind").get<std::string>();
      f.failure.line = neg.at("line").get<int>();
      f.failure.column = neg.at("column").get<int>();
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ncm
