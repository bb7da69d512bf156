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

#include <sstream>

#include <gtest/gtest.h>

#include "gpaiqa/record_file.hpp"

namespace gpaiqa::records {
namespace {

Document parse_text(const std::string& s) {
  std::istringstream in(s);
  return parse(in);
}

TEST(RecordFile, ParsesPreambleRecordsAndComments) {
  const auto doc = parse_text(
      "# header comment\n"
      "name = demo\n"
      "\n"
      "[metric]\n"
      "id = A\n"
      "prompt = has = sign\n"
      "[metric]\n"
      "id = B\n"
      "empty =\n");
  ASSERT_EQ(doc.preamble.fields.size(), 1u);
  EXPECT_EQ(doc.preamble.find("name")->value, "demo");
  ASSERT_EQ(doc.records.size(), 2u);
  EXPECT_EQ(doc.records[0].kind, "metric");
  EXPECT_EQ(doc.records[0].line, 4u);
  EXPECT_EQ(doc.records[0].find("prompt")->value, "has = sign");
  EXPECT_EQ(doc.records[1].find("empty")->value, "");
  EXPECT_EQ(doc.records[1].find("id")->line, 8u);
  EXPECT_EQ(doc.records[1].find("missing"), nullptr);
}

TEST(RecordFile, ReportsSyntaxErrorsWithLine) {
  try {
    parse_text("a = 1\nno equals here\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line, 2u);
  }
  EXPECT_THROW(parse_text("[open\n"), SyntaxError);
  EXPECT_THROW(parse_text("[]\n"), SyntaxError);
  EXPECT_THROW(parse_text(" = value\n"), SyntaxError);
  EXPECT_THROW(parse_text("two words = value\n"), SyntaxError);
}

TEST(RecordFile, WriterOutputParsesBack) {
  Writer w;
  w.field("name", "n");
  w.begin("entry");
  w.field("text", "multi\nline\twith\\escapes ");
  w.field("blank", "");
  const auto doc = parse_text(w.str());
  EXPECT_EQ(doc.preamble.find("name")->value, "n");
  ASSERT_EQ(doc.records.size(), 1u);
  EXPECT_EQ(doc.records[0].find("text")->value, "multi\nline\twith\\escapes ");
  EXPECT_EQ(doc.records[0].find("blank")->value, "");
  EXPECT_EQ(w.str(), "name = n\n\n[entry]\ntext = multi\\nline\\twith\\\\escapes\\s\nblank =\n");
}

TEST(RecordFile, StripsByteOrderMark) {
  const auto doc = parse_text("\xEF\xBB\xBFname = x\n");
  EXPECT_EQ(doc.preamble.find("name")->value, "x");
}

}  // namespace
}  // namespace gpaiqa::records
