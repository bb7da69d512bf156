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

#include "gpaiqa/record_file.hpp"

#include "gpaiqa/text.hpp"

namespace gpaiqa::records {

const Field* Record::find(std::string_view key) const {
  for (const auto& f : fields) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

Document parse(std::istream& in) {
  Document doc;
  Record* current = &doc.preamble;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && text::starts_with(raw, "\xEF\xBB\xBF")) raw.erase(0, 3);
    const std::string_view line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw SyntaxError{line_no, "unterminated record header"};
      }
      const auto kind = text::trim(line.substr(1, line.size() - 2));
      if (kind.empty()) throw SyntaxError{line_no, "empty record header"};
      doc.records.push_back(Record{std::string(kind), line_no, {}});
      current = &doc.records.back();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SyntaxError{line_no, "expected 'key = value'"};
    const auto key = text::trim(line.substr(0, eq));
    if (key.empty()) throw SyntaxError{line_no, "empty key"};
    for (char c : key) {
      if (c == ' ' || c == '\t') throw SyntaxError{line_no, "whitespace in key"};
    }
    const auto value = text::trim(line.substr(eq + 1));
    current->fields.push_back(Field{std::string(key), text::unescape_field(value), line_no});
  }
  return doc;
}

void Writer::field(std::string_view key, std::string_view value) {
  out_ += key;
  out_ += value.empty() ? " =" : " = ";
  out_ += text::escape_field(value);
  out_ += '\n';
}

void Writer::begin(std::string_view kind) {
  if (!out_.empty()) out_ += '\n';
  out_ += '[';
  out_ += kind;
  out_ += "]\n";
}

}  // namespace gpaiqa::records
