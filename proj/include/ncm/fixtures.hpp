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

#include <string>
#include <vector>

#include "ncm/lexer.hpp"

namespace ncm {

// For negative fixtures: the error class ("lex", "parse", "extract") and
// the position the diagnostic must carry.
struct ExpectedFailure {
  std::string kind;
  int line = 0;
  int column = 0;
};

struct Fixture {
  std::string name;
  std::string config_path;
  Vendor vendor = Vendor::cisco;
  std::string expected_model_path;   // empty when none recorded
  std::string expected_script_path;  // empty when none recorded
  std::string description;
  bool roundtrip = false;  // participates in the round-trip suite
  bool negative = false;
  ExpectedFailure failure;
  std::string corpus_group;  // e.g. "ospf8" for the eight-device corpus
};

// Reads <root>/manifest.json and returns the fixtures with paths resolved
// against `root`. Throws IoError / ModelSchemaError on a broken manifest.
std::vector<Fixture> corpus(const std::string& root);

}  // namespace ncm
