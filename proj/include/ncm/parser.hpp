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

#include "ncm/parse_tree.hpp"

namespace ncm {

// Parses an already-tokenized config. `source` is the text the tokens came
// from (kept in the tree for exact node spans). Throws ParseError at the
// first token that fits no production; parsing does not attempt recovery.
ParseTree parse(std::vector<Token> tokens, Vendor vendor, std::string source);

// tokenize + parse in one step.
ParseTree parse_text(const std::string& text, Vendor vendor);

// Reads the file (UTF-8, LF or CRLF) and parses it. Throws IoError when the
// file cannot be read.
ParseTree parse_file(const std::string& path, Vendor vendor);

// Rule names each vendor grammar can produce, as documented in
// docs/grammar.md. Useful for conformance checks.
const std::vector<std::string>& rule_names(Vendor vendor);

}  // namespace ncm
