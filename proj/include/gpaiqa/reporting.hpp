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

#include <string>
#include <string_view>
#include <vector>

#include "gpaiqa/rational.hpp"
#include "gpaiqa/scoring.hpp"

namespace gpaiqa {

enum class ReportFormat { StructuredData, DelimitedTable, MarkupDocument };

/// "json" / "structured-data", "tsv" / "delimited-table", "html" / "markup-document".
/// Throws UnsupportedFormat.
ReportFormat parse_report_format(std::string_view text);
std::string_view file_extension(ReportFormat f);

enum class Severity { High, Moderate, Low };

std::string_view to_string(Severity s);

struct SeverityBand {
  Severity label;
  Rational min_pct;
};

/// High >= 80, Moderate >= 50, Low >= 0.
std::vector<SeverityBand> default_severity_bands();
/// "80,50" -> High >= 80, Moderate >= 50, Low >= 0.
std::vector<SeverityBand> parse_severity_bands(std::string_view text);

Severity severity(const Rational& pct, const std::vector<SeverityBand>& bands);

/// "N/A" or the percentage at two decimals without a percent sign.
std::string format_score(const ScoreValue& score);

std::string render_scorecard(const ScoreCard& card, ReportFormat format,
                             const std::vector<SeverityBand>& bands = default_severity_bands());

/// Inverse of the structured-data rendering. Throws MalformedScoreCard.
ScoreCard parse_scorecard(std::string_view json);

/// Section by group comparison, one column per card in input order. Throws
/// CatalogVersionMismatch unless all cards share one catalog reference.
std::string render_comparison(const std::vector<ScoreCard>& cards, ReportFormat format,
                              const std::vector<SeverityBand>& bands = default_severity_bands());

namespace html {

/// Table fragments shared by the markup report and the static site.
std::string scorecard_table(const ScoreCard& card, const std::vector<SeverityBand>& bands);
std::string comparison_table(const std::vector<ScoreCard>& cards,
                             const std::vector<std::string>& column_links,
                             const std::vector<SeverityBand>& bands);
std::string overall_summary(const ScoreCard& card, const std::vector<SeverityBand>& bands);
std::string section_summary(const ScoreCard& card, const std::vector<SeverityBand>& bands);
std::string_view stylesheet();

}  // namespace html

}  // namespace gpaiqa
