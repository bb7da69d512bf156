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

#include "gpaiqa/reporting.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include "gpaiqa/errors.hpp"
#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kScoreCardFormat = "gpaiqa-scorecard/1";
constexpr std::string_view kComparisonFormat = "gpaiqa-comparison/1";

Json score_json(const ScoreValue& v) {
  if (v.is_na()) return std::string(kNotApplicableLabel);
  return Json{{"pct", format_fixed2(v.pct())}, {"exact", to_exact_string(v.pct())}};
}

ScoreValue score_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == kNotApplicableLabel) return ScoreValue::not_applicable();
  if (!j.is_object() || !j.contains("exact") || !j["exact"].is_string()) {
    throw MalformedScoreCard("expected \"N/A\" or {\"pct\", \"exact\"}", where);
  }
  auto exact = parse_rational(j["exact"].get<std::string>());
  if (!exact) throw MalformedScoreCard("bad exact value", where);
  if (!j.contains("pct") || !j["pct"].is_string() || j["pct"].get<std::string>() != format_fixed2(*exact)) {
    throw MalformedScoreCard("pct does not match exact value", where);
  }
  try {
    return ScoreValue::percent(*exact);
  } catch (const Error& e) {
    throw MalformedScoreCard(e.what(), where);
  }
}

template <typename T, typename Parse>
T parse_enum(const Json& j, Parse parse, const std::string& where) {
  if (!j.is_string()) throw MalformedScoreCard("expected string", where);
  auto value = parse(j.get<std::string>());
  if (!value) throw MalformedScoreCard("unknown value '" + j.get<std::string>() + "'", where);
  return *value;
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedScoreCard(std::string("missing key '") + key + "'", where);
  }
  return j.at(key);
}

std::string string_member(const Json& j, const char* key, const std::string& where) {
  const auto& v = member(j, key, where);
  if (!v.is_string()) throw MalformedScoreCard(std::string("'") + key + "' must be a string", where);
  return v.get<std::string>();
}

Json meta_json(const SummaryMeta& m) {
  Json j;
  j["provider"] = m.provider;
  j["model"] = m.model;
  j["summary_title"] = m.summary_title;
  j["source_url"] = m.source_url;
  j["published_form"] = std::string(to_string(m.published_form));
  j["assessed_version_date"] = format_date(m.assessed_version_date);
  j["archived_copy_digest"] = m.archived_copy_digest ? Json(*m.archived_copy_digest) : Json(nullptr);
  return j;
}

std::string severity_class(const ScoreValue& v, const std::vector<SeverityBand>& bands) {
  if (v.is_na()) return "sev-na";
  return "sev-" + std::string(to_string(severity(v.pct(), bands)));
}

std::string html_cell(const ScoreValue& v, const std::vector<SeverityBand>& bands) {
  const std::string text = v.is_na() ? std::string(kNotApplicableLabel) : format_fixed2(v.pct()) + "%";
  return "<td class=\"" + severity_class(v, bands) + "\">" + text + "</td>";
}

std::string html_document(std::string_view title, std::string_view body) {
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
  out += "<title>" + text::html_escape(title) + "</title>\n";
  out += "<style>\n" + std::string(html::stylesheet()) + "</style>\n</head>\n<body>\n";
  out += body;
  out += "</body>\n</html>\n";
  return out;
}

void require_same_catalog(const std::vector<ScoreCard>& cards) {
  for (const auto& card : cards) {
    if (!(card.catalog_ref == cards.front().catalog_ref)) {
      throw CatalogVersionMismatch("cards reference both " + cards.front().catalog_ref.str() +
                                       " and " + card.catalog_ref.str(),
                                   card.meta.model);
    }
  }
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json" || text == "structured-data") return ReportFormat::StructuredData;
  if (text == "tsv" || text == "delimited-table") return ReportFormat::DelimitedTable;
  if (text == "html" || text == "markup-document") return ReportFormat::MarkupDocument;
  throw UnsupportedFormat("unsupported report format '" + std::string(text) + "'");
}

std::string_view file_extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::StructuredData: return "json";
    case ReportFormat::DelimitedTable: return "tsv";
    case ReportFormat::MarkupDocument: return "html";
  }
  return "";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::High: return "high";
    case Severity::Moderate: return "moderate";
    case Severity::Low: return "low";
  }
  return "";
}

std::vector<SeverityBand> default_severity_bands() {
  return {{Severity::High, 80}, {Severity::Moderate, 50}, {Severity::Low, 0}};
}

std::vector<SeverityBand> parse_severity_bands(std::string_view text) {
  auto parts = text::split(text, ',');
  if (parts.size() != 2) throw InvalidConfig("severity must be '<high-min>,<moderate-min>'");
  auto high = parse_rational(text::trim(parts[0]));
  auto moderate = parse_rational(text::trim(parts[1]));
  if (!high || !moderate || !(*moderate > 0) || !(*high > *moderate) || *high > 100) {
    throw InvalidConfig("severity thresholds must satisfy 100 >= high > moderate > 0");
  }
  return {{Severity::High, *high}, {Severity::Moderate, *moderate}, {Severity::Low, 0}};
}

Severity severity(const Rational& pct, const std::vector<SeverityBand>& bands) {
  for (const auto& band : bands) {
    if (band.min_pct <= pct) return band.label;
  }
  return bands.empty() ? Severity::Low : bands.back().label;
}

std::string format_score(const ScoreValue& score) {
  return score.is_na() ? std::string(kNotApplicableLabel) : format_fixed2(score.pct());
}

std::string render_scorecard(const ScoreCard& card, ReportFormat format,
                             const std::vector<SeverityBand>& bands) {
  switch (format) {
    case ReportFormat::StructuredData: {
      Json j;
      j["format"] = std::string(kScoreCardFormat);
      j["catalog"] = Json{{"name", card.catalog_ref.name}, {"version", card.catalog_ref.version}};
      j["summary"] = meta_json(card.meta);
      Json scale = Json::array();
      for (const auto& band : card.config_used.grade_scale.bands()) {
        scale.push_back(Json{{"letter", band.letter}, {"min_pct", to_canonical_string(band.min_pct)}});
      }
      j["aggregation"] = Json{
          {"section_group_strategy", std::string(to_string(card.config_used.section_group_strategy))},
          {"overall_strategy", std::string(to_string(card.config_used.overall_strategy))},
          {"grade_scale", std::move(scale)}};
      Json sections = Json::array();
      for (auto s : kAllSections) {
        Json row;
        row["section"] = std::string(to_string(s));
        Json cells;
        for (auto d : kAllDimensions) cells[std::string(to_string(d))] = score_json(card.per_cell.at({s, d}));
        row["cells"] = std::move(cells);
        for (auto g : kAllGroups) row[std::string(to_string(g))] = score_json(card.per_section_group.at({s, g}));
        sections.push_back(std::move(row));
      }
      j["sections"] = std::move(sections);
      Json dims;
      for (auto d : kAllDimensions) dims[std::string(to_string(d))] = score_json(card.per_dimension_overall.at(d));
      j["dimension_overall"] = std::move(dims);
      Json overall, grades;
      for (auto g : kAllGroups) {
        overall[std::string(to_string(g))] = score_json(card.overall.at(g));
        grades[std::string(to_string(g))] = card.grades.at(g);
      }
      j["overall"] = std::move(overall);
      j["grades"] = std::move(grades);
      return j.dump(2) + "\n";
    }
    case ReportFormat::DelimitedTable: {
      std::string out = "section";
      for (auto d : kAllDimensions) out += "\t" + std::string(to_string(d));
      for (auto g : kAllGroups) out += "\t" + std::string(to_string(g));
      out += "\n";
      for (auto s : kAllSections) {
        out += to_string(s);
        for (auto d : kAllDimensions) out += "\t" + format_score(card.per_cell.at({s, d}));
        for (auto g : kAllGroups) out += "\t" + format_score(card.per_section_group.at({s, g}));
        out += "\n";
      }
      out += "Sum";
      for (auto d : kAllDimensions) out += "\t" + format_score(card.per_dimension_overall.at(d));
      for (auto g : kAllGroups) out += "\t" + format_score(card.overall.at(g));
      out += "\nGrade";
      for (std::size_t i = 0; i < kAllDimensions.size(); ++i) out += "\t";
      for (auto g : kAllGroups) out += "\t" + card.grades.at(g);
      out += "\n";
      return out;
    }
    case ReportFormat::MarkupDocument: {
      const std::string title = card.meta.provider + " " + card.meta.model + " score card";
      std::string body = "<main>\n<h1>" + text::html_escape(title) + "</h1>\n";
      body += html::overall_summary(card, bands);
      body += html::scorecard_table(card, bands);
      body += "</main>\n";
      return html_document(title, body);
    }
  }
  throw UnsupportedFormat("unsupported report format");
}

ScoreCard parse_scorecard(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedScoreCard(e.what());
  }
  if (string_member(j, "format", "$") != kScoreCardFormat) {
    throw MalformedScoreCard("unsupported scorecard format", "$.format");
  }
  ScoreCard card;
  const auto& catalog = member(j, "catalog", "$");
  card.catalog_ref = {string_member(catalog, "name", "$.catalog"),
                      string_member(catalog, "version", "$.catalog")};

  const auto& summary = member(j, "summary", "$");
  const std::string sw = "$.summary";
  card.meta.provider = string_member(summary, "provider", sw);
  card.meta.model = string_member(summary, "model", sw);
  card.meta.summary_title = string_member(summary, "summary_title", sw);
  card.meta.source_url = string_member(summary, "source_url", sw);
  card.meta.published_form = parse_enum<PublishedForm>(member(summary, "published_form", sw),
                                                       parse_published_form, sw + ".published_form");
  auto date = parse_date(string_member(summary, "assessed_version_date", sw));
  if (!date) throw MalformedScoreCard("bad date", sw + ".assessed_version_date");
  card.meta.assessed_version_date = *date;
  const auto& digest = member(summary, "archived_copy_digest", sw);
  if (digest.is_string()) {
    card.meta.archived_copy_digest = digest.get<std::string>();
  } else if (!digest.is_null()) {
    throw MalformedScoreCard("expected string or null", sw + ".archived_copy_digest");
  }

  const auto& agg = member(j, "aggregation", "$");
  card.config_used.section_group_strategy = parse_enum<SectionGroupStrategy>(
      member(agg, "section_group_strategy", "$.aggregation"), parse_section_group_strategy,
      "$.aggregation.section_group_strategy");
  card.config_used.overall_strategy =
      parse_enum<OverallStrategy>(member(agg, "overall_strategy", "$.aggregation"),
                                  parse_overall_strategy, "$.aggregation.overall_strategy");
  std::vector<GradeBand> bands;
  const auto& scale = member(agg, "grade_scale", "$.aggregation");
  if (!scale.is_array()) throw MalformedScoreCard("expected array", "$.aggregation.grade_scale");
  for (const auto& band : scale) {
    auto min = parse_rational(string_member(band, "min_pct", "$.aggregation.grade_scale"));
    if (!min) throw MalformedScoreCard("bad min_pct", "$.aggregation.grade_scale");
    bands.push_back({string_member(band, "letter", "$.aggregation.grade_scale"), *min});
  }
  try {
    card.config_used.grade_scale = GradeScale(std::move(bands));
  } catch (const InvalidGradeScale& e) {
    throw MalformedScoreCard(e.what(), "$.aggregation.grade_scale");
  }

  const auto& sections = member(j, "sections", "$");
  if (!sections.is_array() || sections.size() != kAllSections.size()) {
    throw MalformedScoreCard("expected one entry per section", "$.sections");
  }
  for (std::size_t i = 0; i < kAllSections.size(); ++i) {
    const auto& row = sections[i];
    const std::string where = "$.sections[" + std::to_string(i) + "]";
    const auto s = parse_enum<Section>(member(row, "section", where), parse_section, where + ".section");
    if (s != kAllSections[i]) throw MalformedScoreCard("sections out of order", where);
    const auto& cells = member(row, "cells", where);
    for (auto d : kAllDimensions) {
      const auto key = std::string(to_string(d));
      card.per_cell.emplace(std::pair{s, d}, score_from_json(member(cells, key.c_str(), where), where + "." + key));
    }
    for (auto g : kAllGroups) {
      const auto key = std::string(to_string(g));
      card.per_section_group.emplace(std::pair{s, g},
                                     score_from_json(member(row, key.c_str(), where), where + "." + key));
    }
  }
  const auto& dims = member(j, "dimension_overall", "$");
  for (auto d : kAllDimensions) {
    const auto key = std::string(to_string(d));
    card.per_dimension_overall.emplace(d, score_from_json(member(dims, key.c_str(), "$.dimension_overall"),
                                                          "$.dimension_overall." + key));
  }
  const auto& overall = member(j, "overall", "$");
  const auto& grades = member(j, "grades", "$");
  for (auto g : kAllGroups) {
    const auto key = std::string(to_string(g));
    card.overall.emplace(g, score_from_json(member(overall, key.c_str(), "$.overall"), "$.overall." + key));
    card.grades.emplace(g, string_member(grades, key.c_str(), "$.grades"));
  }
  return card;
}

std::string render_comparison(const std::vector<ScoreCard>& cards, ReportFormat format,
                              const std::vector<SeverityBand>& bands) {
  if (!cards.empty()) require_same_catalog(cards);

  switch (format) {
    case ReportFormat::StructuredData: {
      Json j;
      j["format"] = std::string(kComparisonFormat);
      j["catalog"] = cards.empty() ? Json(nullptr)
                                   : Json{{"name", cards.front().catalog_ref.name},
                                          {"version", cards.front().catalog_ref.version}};
      Json columns = Json::array();
      for (const auto& c : cards) columns.push_back(Json{{"provider", c.meta.provider}, {"model", c.meta.model}});
      j["columns"] = std::move(columns);
      Json rows = Json::array();
      for (auto s : kAllSections) {
        for (auto g : kAllGroups) {
          Json values = Json::array();
          for (const auto& c : cards) values.push_back(format_score(c.per_section_group.at({s, g})));
          rows.push_back(Json{{"section", std::string(to_string(s))},
                              {"group", std::string(to_string(g))},
                              {"values", std::move(values)}});
        }
      }
      j["rows"] = std::move(rows);
      Json overall, grades;
      for (auto g : kAllGroups) {
        Json values = Json::array(), letters = Json::array();
        for (const auto& c : cards) {
          values.push_back(format_score(c.overall.at(g)));
          letters.push_back(c.grades.at(g));
        }
        overall[std::string(to_string(g))] = std::move(values);
        grades[std::string(to_string(g))] = std::move(letters);
      }
      j["overall"] = std::move(overall);
      j["grades"] = std::move(grades);
      return j.dump(2) + "\n";
    }
    case ReportFormat::DelimitedTable: {
      std::string out = "section\tgroup";
      for (const auto& c : cards) out += "\t" + text::escape_field(c.meta.model);
      out += "\n";
      for (auto s : kAllSections) {
        for (auto g : kAllGroups) {
          out += std::string(to_string(s)) + "\t" + std::string(to_string(g));
          for (const auto& c : cards) out += "\t" + format_score(c.per_section_group.at({s, g}));
          out += "\n";
        }
      }
      for (auto g : kAllGroups) {
        out += "Overall\t" + std::string(to_string(g));
        for (const auto& c : cards) out += "\t" + format_score(c.overall.at(g));
        out += "\n";
      }
      for (auto g : kAllGroups) {
        out += "Grade\t" + std::string(to_string(g));
        for (const auto& c : cards) out += "\t" + c.grades.at(g);
        out += "\n";
      }
      return out;
    }
    case ReportFormat::MarkupDocument: {
      const std::string title = "Public summary score comparison";
      std::string body = "<main>\n<h1>" + title + "</h1>\n";
      body += html::comparison_table(cards, {}, bands);
      body += "</main>\n";
      return html_document(title, body);
    }
  }
  throw UnsupportedFormat("unsupported report format");
}

namespace html {

std::string_view stylesheet() {
  return "body{font-family:system-ui,sans-serif;margin:0 auto;max-width:72rem;padding:1rem;line-height:1.4}\n"
         "table{border-collapse:collapse;margin:1rem 0;display:block;overflow-x:auto}\n"
         "th,td{border:1px solid #999;padding:.3rem .5rem;text-align:right}\n"
         "th[scope=row],td.label{text-align:left}\n"
         ".sev-high{background:#c9f2c9}\n.sev-moderate{background:#fde2b8}\n"
         ".sev-low{background:#f7c1c1}\n.sev-na{color:#555}\n"
         ".grade{font-weight:bold}\n";
}

std::string scorecard_table(const ScoreCard& card, const std::vector<SeverityBand>& bands) {
  std::string out = "<table class=\"scorecard\">\n<thead><tr><th scope=\"col\">" +
                    text::html_escape(card.meta.model) + "</th>";
  for (auto d : kAllDimensions) out += "<th scope=\"col\">" + std::string(to_string(d)) + "</th>";
  for (auto g : kAllGroups) out += "<th scope=\"col\">" + std::string(to_string(g)) + "</th>";
  out += "</tr></thead>\n<tbody>\n";
  for (auto s : kAllSections) {
    out += "<tr><th scope=\"row\">" + text::html_escape(display_name(s)) + "</th>";
    for (auto d : kAllDimensions) out += html_cell(card.per_cell.at({s, d}), bands);
    for (auto g : kAllGroups) out += html_cell(card.per_section_group.at({s, g}), bands);
    out += "</tr>\n";
  }
  out += "<tr><th scope=\"row\">Sum</th>";
  for (auto d : kAllDimensions) out += html_cell(card.per_dimension_overall.at(d), bands);
  for (auto g : kAllGroups) out += html_cell(card.overall.at(g), bands);
  out += "</tr>\n<tr><th scope=\"row\">Grade</th>";
  for (std::size_t i = 0; i < kAllDimensions.size(); ++i) out += "<td></td>";
  for (auto g : kAllGroups) out += "<td class=\"grade\">" + text::html_escape(card.grades.at(g)) + "</td>";
  out += "</tr>\n</tbody>\n</table>\n";
  return out;
}

std::string comparison_table(const std::vector<ScoreCard>& cards,
                             const std::vector<std::string>& column_links,
                             const std::vector<SeverityBand>& bands) {
  std::string out = "<table class=\"comparison\">\n<thead><tr><th scope=\"col\">Section</th>"
                    "<th scope=\"col\">Score</th>";
  for (std::size_t i = 0; i < cards.size(); ++i) {
    const auto label = text::html_escape(cards[i].meta.model);
    if (i < column_links.size()) {
      out += "<th scope=\"col\"><a href=\"" + text::html_escape(column_links[i]) + "\">" + label + "</a></th>";
    } else {
      out += "<th scope=\"col\">" + label + "</th>";
    }
  }
  out += "</tr></thead>\n<tbody>\n";
  const auto row = [&](std::string_view section, Group g, auto value_of) {
    out += "<tr><th scope=\"row\">" + text::html_escape(section) + "</th><td class=\"label\">" +
           std::string(to_string(g)) + "</td>";
    for (const auto& c : cards) out += value_of(c);
    out += "</tr>\n";
  };
  for (auto s : kAllSections) {
    for (auto g : kAllGroups) {
      row(display_name(s), g, [&](const ScoreCard& c) { return html_cell(c.per_section_group.at({s, g}), bands); });
    }
  }
  for (auto g : kAllGroups) {
    row("Overall Scores", g, [&](const ScoreCard& c) { return html_cell(c.overall.at(g), bands); });
  }
  for (auto g : kAllGroups) {
    row("Overall Grades", g, [&](const ScoreCard& c) {
      return "<td class=\"grade\">" + text::html_escape(c.grades.at(g)) + "</td>";
    });
  }
  out += "</tbody>\n</table>\n";
  return out;
}

std::string overall_summary(const ScoreCard& card, const std::vector<SeverityBand>& bands) {
  std::string out = "<section class=\"overall\">\n<h2>Overall</h2>\n<dl>\n";
  for (auto g : kAllGroups) {
    const auto& v = card.overall.at(g);
    out += "<dt>" + std::string(to_string(g)) + "</dt><dd class=\"" + severity_class(v, bands) + "\">" +
           "<span class=\"grade\">" + text::html_escape(card.grades.at(g)) + "</span> (" +
           (v.is_na() ? std::string(kNotApplicableLabel) : format_fixed2(v.pct()) + "%") + ")</dd>\n";
  }
  out += "</dl>\n</section>\n";
  return out;
}

std::string section_summary(const ScoreCard& card, const std::vector<SeverityBand>& bands) {
  std::string out = "<section class=\"sections\">\n<h2>Section scores</h2>\n<table>\n<thead><tr>"
                    "<th scope=\"col\">Section</th><th scope=\"col\">Transparency</th>"
                    "<th scope=\"col\">Usefulness</th></tr></thead>\n<tbody>\n";
  for (auto s : kAllSections) {
    out += "<tr><th scope=\"row\">" + text::html_escape(display_name(s)) + "</th>";
    for (auto g : kAllGroups) out += html_cell(card.per_section_group.at({s, g}), bands);
    out += "</tr>\n";
  }
  out += "</tbody>\n</table>\n</section>\n";
  return out;
}

}  // namespace html

}  // namespace gpaiqa
