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

#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpaiqa/calendar.hpp"
#include "gpaiqa/catalog.hpp"
#include "gpaiqa/errors.hpp"
#include "gpaiqa/rational.hpp"

namespace gpaiqa {

enum class VerdictValue { Sufficient, PartiallySufficient, Insufficient, NotApplicable };

std::string_view to_string(VerdictValue v);
/// Accepts the enumerator names and the numeric aliases "1", "0.5", "0", "N/A".
std::optional<VerdictValue> parse_verdict_value(std::string_view text);

/// Sufficient = 1, PartiallySufficient = 1/2, Insufficient = 0;
/// NotApplicable has no numeric value.
std::optional<Rational> numeric_value(VerdictValue v);

struct Verdict {
  VerdictValue value = VerdictValue::Insufficient;
  /// Yes/no answer for gate metrics. Stored in the note column as a
  /// leading "gate=yes" / "gate=no" token.
  std::optional<GateAnswer> gate;
  std::string note;

  bool operator==(const Verdict&) const = default;
};

enum class PublishedForm { WebPage, PDF, MarkdownFile, Other };

std::string_view to_string(PublishedForm f);
std::optional<PublishedForm> parse_published_form(std::string_view text);

struct SummaryMeta {
  std::string provider;
  std::string model;
  std::string summary_title;
  std::string source_url;
  PublishedForm published_form = PublishedForm::WebPage;
  Date assessed_version_date{};
  std::optional<std::string> archived_copy_digest;

  bool operator==(const SummaryMeta&) const = default;
};

struct Assessment {
  SummaryMeta meta;
  CatalogRef catalog_ref;
  std::map<std::string, Verdict> verdicts;
  std::string evaluator;
  std::optional<std::string> verifier;

  bool operator==(const Assessment&) const = default;
};

/// Decodes the assessment file without consulting a catalog. Throws
/// MalformedAssessment with a line locus.
Assessment parse_assessment(std::istream& in);

/// Canonical encoding: header block, blank line, column row, one row per
/// verdict in metric-id order.
std::string serialize_assessment(const Assessment& assessment);

/// Throws on the first violated invariant: CatalogMismatch,
/// UnknownMetricId, MalformedAssessment (metadata or a scored verdict on
/// an inapplicable metric), GateUnanswered, then MissingVerdict.
void check_assessment(const Assessment& assessment, const Catalog& catalog, Date today);

/// Non-throwing variant collecting every violation, for `validate`.
std::vector<Finding> assessment_findings(const Assessment& assessment, const Catalog& catalog,
                                         Date today);

/// parse_assessment followed by check_assessment.
Assessment load_assessment(std::istream& in, const Catalog& catalog, Date today = today_utc());
Assessment load_assessment_file(const std::filesystem::path& path, const Catalog& catalog,
                                Date today = today_utc());

/// Gate answer lookup used by applicability evaluation.
using GateLookup = std::function<std::optional<GateAnswer>(std::string_view metric_id)>;

/// Per-metric applicability in catalog order. A gated metric applies iff
/// its gate metric applies and the gate's answer equals the required one.
/// Throws GateUnanswered when an applicable gate has no answer. The
/// catalog must be acyclic.
std::vector<bool> applicability_mask(const Catalog& catalog, const GateLookup& gates);

/// Ids of the applicable metrics, in catalog order.
std::vector<std::string> applicable_metrics(const Catalog& catalog, const Assessment& assessment);

}  // namespace gpaiqa
