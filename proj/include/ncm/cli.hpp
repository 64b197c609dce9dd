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

namespace ncm {

// Runs the command-line front end. Subcommands: extract, generate,
// roundtrip, check, stats, dump-tree. Payload goes to --output or stdout;
// diagnostics go to stderr as file:line:column where positions exist.
// Exit codes: 0 success, 1 data/validation/diff failure, 2 usage or I/O
// error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace ncm
