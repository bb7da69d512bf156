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

#include "gpaiqa/assessment.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <string>
#include <type_traits>
#include <unordered_map>

#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace {

constexpr std::string_view kColumnRow = "metric_id\tverdict\tnote";

constexpr std::array<std::string_view, 10> kHeaderKeys = {
    "provider",          "model",      "summary_title", "source_url", "published_form",
    "assessed_version_date", "archived_copy_digest", "catalog_ref", "evaluator", "verifier",
};

std::string line_locus(std::size_t line) { return "line " + std::to_string(line); }

/// Splits a leading "gate=yes" / "gate=no" token off a note.
void split_gate_prefix(std::string_view raw, Verdict& verdict) {
  for (auto answer : {GateAnswer::Yes, GateAnswer::No}) {
    const std::string token = "gate=" + std::string(to_string(answer));
    if (!text::starts_with(raw, token)) continue;
    auto rest = raw.substr(token.size());
    if (rest.empty()) {
      verdict.gate = answer;
      verdict.note.clear();
      return;
    }
    if (text::starts_with(rest, "; ")) {
      verdict.gate = answer;
      verdict.note = std::string(rest.substr(2));
      return;
    }
  }
  verdict.note = std::string(raw);
}

std::string join_gate_prefix(const Verdict& verdict) {
  if (!verdict.gate) return verdict.note;
  std::string out = "gate=" + std::string(to_string(*verdict.gate));
  if (!verdict.note.empty()) out += "; " + verdict.note;
  return out;
}

GateLookup lookup_for(const Assessment& assessment) {
  return [&assessment](std::string_view id) -> std::optional<GateAnswer> {
    auto it = assessment.verdicts.find(std::string(id));
    if (it == assessment.verdicts.end()) return std::nullopt;
    return it->second.gate;
  };
}

/// Shared checks. `report` returns false to stop at the first problem.
template <typename Report>
void run_checks(const Assessment& a, const Catalog& catalog, Date today, Report&& report) {
  if (!(a.catalog_ref == catalog.ref())) {
    if (!report(CatalogMismatch("assessment references catalog '" + a.catalog_ref.str() +
                                "' but '" + catalog.ref().str() + "' was supplied"))) {
      return;
    }
  }
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < catalog.metrics.size(); ++i) index.emplace(catalog.metrics[i].id, i);

  for (const auto& [id, verdict] : a.verdicts) {
    if (!index.count(id)) {
      if (!report(UnknownMetricId("metric id not in catalog " + catalog.ref().str(), id))) return;
    }
  }
  if (text::trim(a.meta.provider).empty()) {
    if (!report(MalformedAssessment("provider is empty", "provider"))) return;
  }
  if (text::trim(a.meta.model).empty()) {
    if (!report(MalformedAssessment("model is empty", "model"))) return;
  }
  if (std::chrono::sys_days{a.meta.assessed_version_date} > std::chrono::sys_days{today}) {
    if (!report(MalformedAssessment(
            "assessed_version_date " + format_date(a.meta.assessed_version_date) +
                " is in the future",
            "assessed_version_date"))) {
      return;
    }
  }

  std::vector<bool> mask;
  try {
    mask = applicability_mask(catalog, lookup_for(a));
  } catch (const GateUnanswered& e) {
    report(e);
    return;
  }

  std::vector<std::string> missing;
  for (std::size_t i = 0; i < catalog.metrics.size(); ++i) {
    const auto& m = catalog.metrics[i];
    auto it = a.verdicts.find(m.id);
    if (mask[i]) {
      if (it == a.verdicts.end()) missing.push_back(m.id);
    } else if (it != a.verdicts.end() && it->second.value != VerdictValue::NotApplicable) {
      if (!report(MalformedAssessment(
              "metric is inapplicable under its gate but carries verdict " +
                  std::string(to_string(it->second.value)),
              m.id))) {
        return;
      }
    }
  }
  if (!missing.empty()) report(MissingVerdict(std::move(missing)));
}

}  // namespace

std::string_view to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::Sufficient: return "Sufficient";
    case VerdictValue::PartiallySufficient: return "PartiallySufficient";
    case VerdictValue::Insufficient: return "Insufficient";
    case VerdictValue::NotApplicable: return "NotApplicable";
  }
  return "";
}

std::optional<VerdictValue> parse_verdict_value(std::string_view text) {
  if (text == "Sufficient" || text == "1") return VerdictValue::Sufficient;
  if (text == "PartiallySufficient" || text == "0.5") return VerdictValue::PartiallySufficient;
  if (text == "Insufficient" || text == "0") return VerdictValue::Insufficient;
  if (text == "NotApplicable" || text == "N/A") return VerdictValue::NotApplicable;
  return std::nullopt;
}

std::optional<Rational> numeric_value(VerdictValue v) {
  switch (v) {
    case VerdictValue::Sufficient: return Rational(1);
    case VerdictValue::PartiallySufficient: return Rational(1, 2);
    case VerdictValue::Insufficient: return Rational(0);
    case VerdictValue::NotApplicable: return std::nullopt;
  }
  return std::nullopt;
}

std::string_view to_string(PublishedForm f) {
  switch (f) {
    case PublishedForm::WebPage: return "WebPage";
    case PublishedForm::PDF: return "PDF";
    case PublishedForm::MarkdownFile: return "MarkdownFile";
    case PublishedForm::Other: return "Other";
  }
  return "";
}

std::optional<PublishedForm> parse_published_form(std::string_view text) {
  for (auto f : {PublishedForm::WebPage, PublishedForm::PDF, PublishedForm::MarkdownFile,
                 PublishedForm::Other}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

Assessment parse_assessment(std::istream& in) {
  Assessment a;
  std::map<std::string, std::pair<std::string, std::size_t>> header;
  std::string raw;
  std::size_t line_no = 0;
  bool in_rows = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && text::starts_with(raw, "\xEF\xBB\xBF")) raw.erase(0, 3);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();

    if (!in_rows) {
      const auto line = text::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      if (raw == kColumnRow) {
        in_rows = true;
        continue;
      }
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw MalformedAssessment("expected 'key: value' header line or column row",
                                  line_locus(line_no));
      }
      std::string key(text::trim(line.substr(0, colon)));
      if (std::find(kHeaderKeys.begin(), kHeaderKeys.end(), key) == kHeaderKeys.end()) {
        throw MalformedAssessment("unknown header key '" + key + "'", line_locus(line_no));
      }
      std::string value = text::unescape_field(text::trim(line.substr(colon + 1)));
      if (!header.emplace(key, std::make_pair(std::move(value), line_no)).second) {
        throw MalformedAssessment("duplicate header key '" + key + "'", line_locus(line_no));
      }
      continue;
    }

    if (text::trim(raw).empty()) continue;
    auto cols = text::split(raw, '\t');
    if (cols.size() < 2 || cols.size() > 3) {
      throw MalformedAssessment("expected metric_id<TAB>verdict[<TAB>note]", line_locus(line_no));
    }
    Verdict verdict;
    auto value = parse_verdict_value(cols[1]);
    if (!value) {
      throw MalformedAssessment("unknown verdict '" + cols[1] + "'", line_locus(line_no));
    }
    verdict.value = *value;
    if (cols.size() == 3) split_gate_prefix(text::unescape_field(cols[2]), verdict);
    if (cols[0].empty()) throw MalformedAssessment("empty metric id", line_locus(line_no));
    if (!a.verdicts.emplace(cols[0], std::move(verdict)).second) {
      throw MalformedAssessment("duplicate verdict for '" + cols[0] + "'", line_locus(line_no));
    }
  }
  if (!in_rows) throw MalformedAssessment("missing column row '" + text::escape_field(kColumnRow) + "'");

  const auto required = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
    auto it = header.find(key);
    if (it == header.end()) throw MalformedAssessment("missing header key '" + key + "'");
    return it->second;
  };
  const auto optional = [&](const std::string& key) -> std::optional<std::string> {
    auto it = header.find(key);
    if (it == header.end()) return std::nullopt;
    return it->second.first;
  };

  a.meta.provider = required("provider").first;
  a.meta.model = required("model").first;
  a.meta.source_url = required("source_url").first;
  a.meta.summary_title = optional("summary_title").value_or("");
  if (auto form = optional("published_form")) {
    auto parsed = parse_published_form(*form);
    if (!parsed) {
      throw MalformedAssessment("unknown published_form '" + *form + "'",
                                line_locus(header["published_form"].second));
    }
    a.meta.published_form = *parsed;
  }
  const auto& date = required("assessed_version_date");
  auto parsed_date = parse_date(date.first);
  if (!parsed_date) throw MalformedAssessment("date must be YYYY-MM-DD", line_locus(date.second));
  a.meta.assessed_version_date = *parsed_date;
  a.meta.archived_copy_digest = optional("archived_copy_digest");

  const auto& ref = required("catalog_ref");
  auto parsed_ref = CatalogRef::parse(ref.first);
  if (!parsed_ref) throw MalformedAssessment("catalog_ref must be name@version", line_locus(ref.second));
  a.catalog_ref = *parsed_ref;
  a.evaluator = required("evaluator").first;
  a.verifier = optional("verifier");
  return a;
}

std::string serialize_assessment(const Assessment& a) {
  std::string out;
  const auto header = [&](std::string_view key, std::string_view value) {
    out += key;
    out += value.empty() ? ":" : ": ";
    out += text::escape_field(value);
    out += '\n';
  };
  header("provider", a.meta.provider);
  header("model", a.meta.model);
  header("summary_title", a.meta.summary_title);
  header("source_url", a.meta.source_url);
  header("published_form", to_string(a.meta.published_form));
  header("assessed_version_date", format_date(a.meta.assessed_version_date));
  if (a.meta.archived_copy_digest) header("archived_copy_digest", *a.meta.archived_copy_digest);
  header("catalog_ref", a.catalog_ref.str());
  header("evaluator", a.evaluator);
  if (a.verifier) header("verifier", *a.verifier);
  out += '\n';
  out += kColumnRow;
  out += '\n';
  for (const auto& [id, verdict] : a.verdicts) {
    out += id;
    out += '\t';
    out += to_string(verdict.value);
    const auto note = join_gate_prefix(verdict);
    if (!note.empty()) {
      out += '\t';
      out += text::escape_field(note);
    }
    out += '\n';
  }
  return out;
}

void check_assessment(const Assessment& assessment, const Catalog& catalog, Date today) {
  run_checks(assessment, catalog, today, [](const auto& error) -> bool { throw error; });
}

std::vector<Finding> assessment_findings(const Assessment& assessment, const Catalog& catalog,
                                         Date today) {
  std::vector<Finding> findings;
  run_checks(assessment, catalog, today, [&](const auto& error) -> bool {
    if constexpr (std::is_same_v<std::decay_t<decltype(error)>, MissingVerdict>) {
      for (const auto& id : error.metric_ids()) {
        findings.push_back({"MissingVerdict", id, "no verdict for applicable metric"});
      }
    } else {
      findings.push_back(finding_from(error));
    }
    return true;
  });
  return findings;
}

Assessment load_assessment(std::istream& in, const Catalog& catalog, Date today) {
  Assessment a = parse_assessment(in);
  check_assessment(a, catalog, today);
  return a;
}

Assessment load_assessment_file(const std::filesystem::path& path, const Catalog& catalog,
                                Date today) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedAssessment("cannot open assessment file", path.string());
  try {
    return load_assessment(in, catalog, today);
  } catch (const MalformedAssessment& e) {
    throw MalformedAssessment(e.what(), path.string());
  }
}

std::vector<bool> applicability_mask(const Catalog& catalog, const GateLookup& gates) {
  const std::size_t n = catalog.metrics.size();
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(catalog.metrics[i].id, i);

  enum : signed char { kUnknown = -1, kNo = 0, kYes = 1, kVisiting = 2 };
  std::vector<signed char> state(n, kUnknown);

  const std::function<bool(std::size_t)> resolve = [&](std::size_t i) -> bool {
    if (state[i] == kVisiting) {
      throw SchemaViolation("applicability cycle", catalog.metrics[i].id);
    }
    if (state[i] != kUnknown) return state[i] == kYes;
    const auto& rule = catalog.metrics[i].applicability;
    if (!rule.is_gated()) {
      state[i] = kYes;
      return true;
    }
    auto gate = index.find(rule.gate_metric_id);
    if (gate == index.end()) {
      throw SchemaViolation("unknown gate metric '" + rule.gate_metric_id + "'",
                            catalog.metrics[i].id);
    }
    state[i] = kVisiting;
    bool applies = resolve(gate->second);
    if (applies) {
      auto answer = gates(rule.gate_metric_id);
      if (!answer) {
        throw GateUnanswered("gate has no yes/no answer (needed by " + catalog.metrics[i].id + ")",
                             rule.gate_metric_id);
      }
      applies = *answer == rule.required;
    }
    state[i] = applies ? kYes : kNo;
    return applies;
  };

  std::vector<bool> mask(n);
  for (std::size_t i = 0; i < n; ++i) mask[i] = resolve(i);
  return mask;
}

std::vector<std::string> applicable_metrics(const Catalog& catalog, const Assessment& assessment) {
  const auto mask = applicability_mask(catalog, lookup_for(assessment));
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) ids.push_back(catalog.metrics[i].id);
  }
  return ids;
}

}  // namespace gpaiqa
