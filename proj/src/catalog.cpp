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

#include "gpaiqa/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <span>
#include <set>
#include <unordered_map>

#include "gpaiqa/record_file.hpp"
#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace {

struct SectionInfo {
  Section section;
  std::string_view code;
  std::string_view display;
  std::string_view span;
};

constexpr std::array<SectionInfo, 8> kSectionInfo = {{
    {Section::Document, "Document", "Document", ""},
    {Section::GeneralInformation, "GeneralInformation", "General information", "Section 1"},
    {Section::PublicDataSources, "PublicDataSources", "Public Data Sources", "Section 2.1"},
    {Section::PrivateDataSources, "PrivateDataSources", "Private Data Sources", "Section 2.2"},
    {Section::ScrapedCrawledData, "ScrapedCrawledData", "Scraped/Crawled Data", "Section 2.3"},
    {Section::UserData, "UserData", "User Data", "Section 2.4"},
    {Section::SyntheticOtherData, "SyntheticOtherData", "Synthetic & Other Data",
     "Section 2.5 & 2.6"},
    {Section::DataProcessing, "DataProcessing", "Data Processing", "Section 3"},
}};

constexpr std::array<std::string_view, 6> kDimensionNames = {
    "Clarity", "Completeness", "Consistency", "Correctness", "Accessibility", "Comprehension",
};

constexpr std::array<std::string_view, 8> kMetricFields = {
    "id", "element_id", "section", "dimension", "weight", "prompt", "optional_field",
    "applicability",
};

std::string line_locus(std::size_t line, std::string_view field = {}) {
  std::string locus = "line " + std::to_string(line);
  if (!field.empty()) locus += ", field " + std::string(field);
  return locus;
}

std::string format_applicability(const ApplicabilityRule& rule) {
  if (!rule.is_gated()) return "always";
  return "if " + rule.gate_metric_id + " == " + std::string(to_string(rule.required));
}

std::optional<ApplicabilityRule> parse_applicability(std::string_view text) {
  if (text == "always") return ApplicabilityRule::always();
  if (!text::starts_with(text, "if ")) return std::nullopt;
  text.remove_prefix(3);
  const auto op = text.find(" == ");
  if (op == std::string_view::npos) return std::nullopt;
  const auto gate = text::trim(text.substr(0, op));
  const auto answer = parse_gate_answer(text::trim(text.substr(op + 4)));
  if (gate.empty() || gate.find(' ') != std::string_view::npos || !answer) return std::nullopt;
  return ApplicabilityRule::if_gate(std::string(gate), *answer);
}

/// Checks the record holds exactly `expected` keys, each once.
void require_fields(const records::Record& record, std::span<const std::string_view> expected) {
  std::set<std::string_view> seen;
  for (const auto& f : record.fields) {
    if (std::find(expected.begin(), expected.end(), f.key) == expected.end()) {
      throw SchemaViolation("unknown field '" + f.key + "'", line_locus(f.line, f.key));
    }
    if (!seen.insert(f.key).second) {
      throw SchemaViolation("duplicate field '" + f.key + "'", line_locus(f.line, f.key));
    }
  }
  for (auto key : expected) {
    if (!seen.count(key)) {
      throw SchemaViolation("missing field '" + std::string(key) + "'",
                            line_locus(record.line, key));
    }
  }
}

Metric decode_metric(const records::Record& record) {
  require_fields(record, kMetricFields);
  Metric m;
  const auto get = [&](std::string_view key) -> const records::Field& { return *record.find(key); };

  m.id = get("id").value;
  m.element_id = get("element_id").value;
  m.prompt = get("prompt").value;

  const auto& section = get("section");
  auto s = parse_section(section.value);
  if (!s) throw SchemaViolation("unknown section '" + section.value + "'", line_locus(section.line, "section"));
  m.section = *s;

  const auto& dimension = get("dimension");
  auto d = parse_dimension(dimension.value);
  if (!d) {
    throw SchemaViolation("unknown dimension '" + dimension.value + "'",
                          line_locus(dimension.line, "dimension"));
  }
  m.dimension = *d;

  const auto& weight = get("weight");
  auto w = parse_rational(weight.value);
  if (!w) throw SchemaViolation("weight is not a rational number", line_locus(weight.line, "weight"));
  m.weight = *w;

  const auto& optional = get("optional_field");
  if (optional.value == "true") {
    m.optional_field = true;
  } else if (optional.value == "false") {
    m.optional_field = false;
  } else {
    throw SchemaViolation("optional_field must be true or false",
                          line_locus(optional.line, "optional_field"));
  }

  const auto& applicability = get("applicability");
  auto rule = parse_applicability(applicability.value);
  if (!rule) {
    throw SchemaViolation("applicability must be 'always' or 'if <metric-id> == yes|no'",
                          line_locus(applicability.line, "applicability"));
  }
  m.applicability = *rule;
  return m;
}

}  // namespace

std::string_view to_string(Section s) { return kSectionInfo[static_cast<std::size_t>(s)].code; }
std::string_view display_name(Section s) { return kSectionInfo[static_cast<std::size_t>(s)].display; }
std::string_view template_span(Section s) { return kSectionInfo[static_cast<std::size_t>(s)].span; }
std::string_view to_string(Dimension d) { return kDimensionNames[static_cast<std::size_t>(d)]; }

std::string_view to_string(Group g) {
  return g == Group::Transparency ? "Transparency" : "Usefulness";
}

std::string_view to_string(GateAnswer a) { return a == GateAnswer::Yes ? "yes" : "no"; }

std::optional<Section> parse_section(std::string_view text) {
  for (const auto& info : kSectionInfo) {
    if (info.code == text) return info.section;
  }
  return std::nullopt;
}

std::optional<Dimension> parse_dimension(std::string_view text) {
  for (std::size_t i = 0; i < kDimensionNames.size(); ++i) {
    if (kDimensionNames[i] == text) return static_cast<Dimension>(i);
  }
  return std::nullopt;
}

std::optional<Group> parse_group(std::string_view text) {
  if (text == "Transparency") return Group::Transparency;
  if (text == "Usefulness") return Group::Usefulness;
  return std::nullopt;
}

std::optional<GateAnswer> parse_gate_answer(std::string_view text) {
  if (text == "yes") return GateAnswer::Yes;
  if (text == "no") return GateAnswer::No;
  return std::nullopt;
}

std::optional<CatalogRef> CatalogRef::parse(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos || at == 0 || at + 1 == text.size()) return std::nullopt;
  return CatalogRef{std::string(text.substr(0, at)), std::string(text.substr(at + 1))};
}

const Metric* Catalog::find(std::string_view id) const {
  for (const auto& m : metrics) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

Catalog load_catalog(std::istream& in) {
  records::Document doc;
  try {
    doc = records::parse(in);
  } catch (const records::SyntaxError& e) {
    throw MalformedCatalog(e.message, line_locus(e.line));
  }

  constexpr std::array<std::string_view, 2> kPreamble = {"name", "version"};
  doc.preamble.line = 1;
  require_fields(doc.preamble, kPreamble);

  Catalog catalog;
  catalog.name = doc.preamble.find("name")->value;
  catalog.version = doc.preamble.find("version")->value;

  std::unordered_map<std::string, std::size_t> first_line;
  for (const auto& record : doc.records) {
    if (record.kind != "metric") {
      throw SchemaViolation("unknown record kind '" + record.kind + "'", line_locus(record.line));
    }
    Metric metric = decode_metric(record);
    const auto id_line = record.find("id")->line;
    if (auto [it, inserted] = first_line.emplace(metric.id, id_line); !inserted) {
      throw SchemaViolation("duplicate metric id '" + metric.id + "' (first defined on line " +
                                std::to_string(it->second) + ")",
                            line_locus(id_line, "id"));
    }
    catalog.metrics.push_back(std::move(metric));
  }
  return catalog;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedCatalog("cannot open catalog file", path.string());
  try {
    return load_catalog(in);
  } catch (const MalformedCatalog& e) {
    throw MalformedCatalog(e.what(), path.string());
  } catch (const SchemaViolation& e) {
    throw SchemaViolation(e.what(), path.string());
  }
}

std::string serialize_catalog(const Catalog& catalog) {
  records::Writer w;
  w.field("name", catalog.name);
  w.field("version", catalog.version);
  for (const auto& m : catalog.metrics) {
    w.begin("metric");
    w.field("id", m.id);
    w.field("element_id", m.element_id);
    w.field("section", to_string(m.section));
    w.field("dimension", to_string(m.dimension));
    w.field("weight", to_canonical_string(m.weight));
    w.field("prompt", m.prompt);
    w.field("optional_field", m.optional_field ? "true" : "false");
    w.field("applicability", format_applicability(m.applicability));
  }
  return w.str();
}

std::vector<Finding> validate_catalog(const Catalog& catalog) {
  std::vector<Finding> findings;
  if (catalog.name.empty()) findings.push_back({"EmptyField", "catalog", "catalog name is empty"});
  if (catalog.version.empty()) {
    findings.push_back({"EmptyField", "catalog", "catalog version is empty"});
  }
  if (catalog.metrics.empty()) {
    findings.push_back({"EmptyCatalog", "catalog", "catalog has no metrics"});
    return findings;
  }

  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < catalog.metrics.size(); ++i) {
    index.emplace(catalog.metrics[i].id, i);
  }

  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < catalog.metrics.size(); ++i) {
    const auto& m = catalog.metrics[i];
    const std::string locus = m.id.empty() ? "metric #" + std::to_string(i + 1) : m.id;
    if (m.id.empty()) findings.push_back({"EmptyField", locus, "metric id is empty"});
    if (m.element_id.empty()) findings.push_back({"EmptyField", locus, "element_id is empty"});
    if (m.prompt.empty()) findings.push_back({"EmptyField", locus, "prompt is empty"});
    if (!m.id.empty() && !seen.insert(m.id).second) {
      findings.push_back({"DuplicateMetricId", locus, "duplicate metric id"});
    }
    if (m.weight <= 0) {
      findings.push_back({"NonpositiveWeight", locus,
                          "nonpositive weight " + to_canonical_string(m.weight)});
    }
    if (m.applicability.is_gated() && !index.count(m.applicability.gate_metric_id)) {
      findings.push_back({"UnknownGateMetric", locus,
                          "gate metric '" + m.applicability.gate_metric_id + "' is not in the catalog"});
    }
  }

  // Every metric has at most one outgoing gate edge, so the applicability
  // graph is functional: walk each chain once, colouring nodes.
  enum class Mark { Unvisited, OnPath, Done };
  std::vector<Mark> mark(catalog.metrics.size(), Mark::Unvisited);
  std::vector<std::size_t> cycle_heads;
  std::vector<std::string> cycle_text;
  for (std::size_t start = 0; start < catalog.metrics.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t node = start;
    while (true) {
      if (mark[node] == Mark::Done) break;
      if (mark[node] == Mark::OnPath) {
        auto first = std::find(path.begin(), path.end(), node);
        std::string description;
        std::size_t head = *std::min_element(first, path.end());
        auto rotate_at = std::find(first, path.end(), head);
        std::vector<std::size_t> cycle(rotate_at, path.end());
        cycle.insert(cycle.end(), first, rotate_at);
        for (auto n : cycle) description += catalog.metrics[n].id + " -> ";
        description += catalog.metrics[head].id;
        cycle_heads.push_back(head);
        cycle_text.push_back(std::move(description));
        break;
      }
      mark[node] = Mark::OnPath;
      path.push_back(node);
      const auto& rule = catalog.metrics[node].applicability;
      if (!rule.is_gated()) break;
      auto next = index.find(rule.gate_metric_id);
      if (next == index.end()) break;
      node = next->second;
    }
    for (auto n : path) mark[n] = Mark::Done;
  }
  std::vector<std::size_t> order(cycle_heads.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cycle_heads[a] < cycle_heads[b]; });
  for (auto i : order) {
    findings.push_back({"ApplicabilityCycle", catalog.metrics[cycle_heads[i]].id,
                        "applicability cycle: " + cycle_text[i]});
  }
  return findings;
}

std::map<Section, std::size_t> section_counts(const Catalog& catalog) {
  std::map<Section, std::size_t> counts;
  for (auto s : kAllSections) counts[s] = 0;
  for (const auto& m : catalog.metrics) ++counts[m.section];
  return counts;
}

}  // namespace gpaiqa
