// Copyright 2026 The gpaiqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpaiqa::records {

// Line-oriented record syntax shared by the catalog, registry and config
// files:
//
//   # comment
//   key = value            <- fields before the first header form the preamble
//
//   [kind]                 <- starts a record
//   key = value
//
// Values are single-line with backslash escapes (\n, \t, \\). Keys may not
// contain '=' or whitespace.

struct Field {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct Record {
  std::string kind;  // empty for the preamble
  std::size_t line = 0;
  std::vector<Field> fields;

  /// First field with this key, if any.
  const Field* find(std::string_view key) const;
};

struct Document {
  Record preamble;
  std::vector<Record> records;
};

/// Thrown for lines that are neither comments, headers nor `key = value`.
struct SyntaxError {
  std::size_t line;
  std::string message;
};

/// Parses the stream into records. Throws SyntaxError.
Document parse(std::istream& in);

/// Incremental writer producing the canonical layout: preamble fields,
/// then one blank line before every record header.
class Writer {
 public:
  void field(std::string_view key, std::string_view value);
  void begin(std::string_view kind);
  std::string str() const { return out_; }

 private:
  std::string out_;
};

}  // namespace gpaiqa::records
