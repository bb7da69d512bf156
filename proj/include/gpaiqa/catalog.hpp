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

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpaiqa/errors.hpp"
#include "gpaiqa/rational.hpp"

namespace gpaiqa {

/// The eight assessment sections. Seven follow the public-summary template;
/// Document covers the summary as a document (metadata, provision,
/// structure) and maps to no template section.
enum class Section {
  Document,
  GeneralInformation,
  PublicDataSources,
  PrivateDataSources,
  ScrapedCrawledData,
  UserData,
  SyntheticOtherData,
  DataProcessing,
};

inline constexpr std::array<Section, 8> kAllSections = {
    Section::Document,           Section::GeneralInformation, Section::PublicDataSources,
    Section::PrivateDataSources, Section::ScrapedCrawledData, Section::UserData,
    Section::SyntheticOtherData, Section::DataProcessing,
};

enum class Dimension {
  Clarity,
  Completeness,
  Consistency,
  Correctness,
  Accessibility,
  Comprehension,
};

inline constexpr std::array<Dimension, 6> kAllDimensions = {
    Dimension::Clarity,     Dimension::Completeness,  Dimension::Consistency,
    Dimension::Correctness, Dimension::Accessibility, Dimension::Comprehension,
};

enum class Group { Transparency, Usefulness };

inline constexpr std::array<Group, 2> kAllGroups = {Group::Transparency, Group::Usefulness};

constexpr Group group_of(Dimension d) {
  switch (d) {
    case Dimension::Accessibility:
    case Dimension::Comprehension:
      return Group::Usefulness;
    default:
      return Group::Transparency;
  }
}

std::string_view to_string(Section s);
std::string_view to_string(Dimension d);
std::string_view to_string(Group g);
std::optional<Section> parse_section(std::string_view text);
std::optional<Dimension> parse_dimension(std::string_view text);
std::optional<Group> parse_group(std::string_view text);

/// Human label, e.g. "Scraped/Crawled Data".
std::string_view display_name(Section s);
/// Template sections covered, e.g. "Section 2.5 & 2.6"; empty for Document.
std::string_view template_span(Section s);

enum class GateAnswer { Yes, No };

std::string_view to_string(GateAnswer a);
std::optional<GateAnswer> parse_gate_answer(std::string_view text);

/// Whether a metric counts towards scoring. IfGateEquals ties it to the
/// yes/no answer recorded on another metric of the same catalog.
struct ApplicabilityRule {
  enum class Kind { Always, IfGateEquals };

  Kind kind = Kind::Always;
  std::string gate_metric_id;
  GateAnswer required = GateAnswer::Yes;

  static ApplicabilityRule always() { return {}; }
  static ApplicabilityRule if_gate(std::string gate_id, GateAnswer answer) {
    return {Kind::IfGateEquals, std::move(gate_id), answer};
  }

  bool is_gated() const { return kind == Kind::IfGateEquals; }
  bool operator==(const ApplicabilityRule&) const = default;
};

struct Metric {
  std::string id;          // e.g. "F1.1.a.2"
  std::string element_id;  // template element, e.g. "1.1.a"
  Section section = Section::Document;
  Dimension dimension = Dimension::Completeness;
  Rational weight = 1;
  std::string prompt;
  bool optional_field = false;  // reporting only; scored as mandatory
  ApplicabilityRule applicability;

  bool operator==(const Metric&) const = default;
};

struct CatalogRef {
  std::string name;
  std::string version;

  /// "name@version"
  std::string str() const { return name + "@" + version; }
  static std::optional<CatalogRef> parse(std::string_view text);
  bool operator==(const CatalogRef&) const = default;
};

struct Catalog {
  std::string name;
  std::string version;
  std::vector<Metric> metrics;

  CatalogRef ref() const { return {name, version}; }
  const Metric* find(std::string_view id) const;
  bool operator==(const Catalog&) const = default;
};

/// Decodes the catalog record format. Throws MalformedCatalog for syntax
/// errors and SchemaViolation for missing, unknown, duplicated or
/// ill-typed fields and for duplicate metric ids. Metric order is kept.
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::filesystem::path& path);

/// Canonical encoding; load_catalog(serialize_catalog(c)) == c for any
/// catalog whose text fields carry no leading or trailing whitespace.
std::string serialize_catalog(const Catalog& catalog);

/// Every violated catalog invariant, in catalog order; empty means valid.
std::vector<Finding> validate_catalog(const Catalog& catalog);

/// Metric count per section; always holds all eight keys.
std::map<Section, std::size_t> section_counts(const Catalog& catalog);

}  // namespace gpaiqa
