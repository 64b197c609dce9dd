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

#include <stdexcept>
#include <string>
#include <vector>

namespace ncm {

// 1-based position in an input file.
struct SourcePos {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable file, bad path, etc.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

class LexError : public Error {
 public:
  LexError(SourcePos pos, const std::string& offending, const std::string& msg)
      : Error(msg), pos_(pos), offending_(offending) {}
  SourcePos pos() const { return pos_; }
  const std::string& offending() const { return offending_; }

 private:
  SourcePos pos_;
  std::string offending_;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected,
             const std::string& found, const std::string& msg)
      : Error(msg), pos_(pos), expected_(std::move(expected)), found_(found) {}
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

// TSV mapping table that failed to load; carries one diagnostic per bad row.
class MappingLoadError : public Error {
 public:
  MappingLoadError(std::vector<std::string> diagnostics, const std::string& msg)
      : Error(msg), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

// Malformed or schema-violating serialized model.
class ModelSchemaError : public Error {
 public:
  explicit ModelSchemaError(const std::string& msg) : Error(msg) {}
};

class ExtractError : public Error {
 public:
  enum class Kind { slot_conflict, no_open_group, nested_root, internal };

  ExtractError(Kind kind, SourcePos pos, const std::string& msg)
      : Error(msg), kind_(kind), pos_(pos) {}
  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  Kind kind_;
  SourcePos pos_;
};

class GenerateError : public Error {
 public:
  enum class Kind { missing_required_slot, unknown_group, mixed_vendor, invalid_model };

  GenerateError(Kind kind, const std::string& group_value,
                const std::string& item, const std::string& msg)
      : Error(msg), kind_(kind), group_value_(group_value), item_(item) {}
  Kind kind() const { return kind_; }
  const std::string& group_value() const { return group_value_; }
  const std::string& item() const { return item_; }

 private:
  Kind kind_;
  std::string group_value_;
  std::string item_;
};

}  // namespace ncm
