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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpaiqa/assessment.hpp"
#include "gpaiqa/catalog.hpp"
#include "gpaiqa/rational.hpp"

namespace gpaiqa {

/// A normalized percentage in [0, 100], or N/A when nothing contributes.
class ScoreValue {
 public:
  static ScoreValue not_applicable() { return ScoreValue(); }
  static ScoreValue percent(Rational pct);

  bool is_na() const { return !pct_.has_value(); }
  /// Precondition: !is_na().
  const Rational& pct() const { return *pct_; }

  bool operator==(const ScoreValue&) const = default;

 private:
  ScoreValue() = default;
  std::optional<Rational> pct_;
};

enum class SectionGroupStrategy { PooledWeighted, MeanOfDimensions };
enum class OverallStrategy { PooledWeighted, MeanOfSections };

std::string_view to_string(SectionGroupStrategy s);
std::string_view to_string(OverallStrategy s);
std::optional<SectionGroupStrategy> parse_section_group_strategy(std::string_view text);
std::optional<OverallStrategy> parse_overall_strategy(std::string_view text);

struct GradeBand {
  std::string letter;
  Rational min_pct;

  bool operator==(const GradeBand&) const = default;
};

/// Ordered letter bands, highest first. min_pct is inclusive; the last
/// band starts at 0.
class GradeScale {
 public:
  /// A+ >= 95, A >= 90, B+ >= 80, B >= 75, C+ >= 70, C >= 60, D >= 30, F >= 0.
  static GradeScale standard();

  /// Throws InvalidGradeScale unless mins strictly decrease, the last is 0,
  /// the first is at most 100 and letters are unique and non-empty.
  explicit GradeScale(std::vector<GradeBand> bands);

  /// "A+:95,A:90,...,F:0"
  static GradeScale parse(std::string_view text);
  std::string str() const;

  const std::vector<GradeBand>& bands() const { return bands_; }
  /// Band index for a percentage; 0 is the best band.
  std::size_t band_index(const Rational& pct) const;

  bool operator==(const GradeScale&) const = default;

 private:
  std::vector<GradeBand> bands_;
};

struct AggregationConfig {
  SectionGroupStrategy section_group_strategy = SectionGroupStrategy::PooledWeighted;
  OverallStrategy overall_strategy = OverallStrategy::PooledWeighted;
  GradeScale grade_scale = GradeScale::standard();

  bool operator==(const AggregationConfig&) const = default;
};

inline constexpr std::string_view kNotApplicableLabel = "N/A";

struct ScoreCard {
  SummaryMeta meta;
  CatalogRef catalog_ref;
  std::map<std::pair<Section, Dimension>, ScoreValue> per_cell;
  std::map<std::pair<Section, Group>, ScoreValue> per_section_group;
  std::map<Dimension, ScoreValue> per_dimension_overall;
  std::map<Group, ScoreValue> overall;
  std::map<Group, std::string> grades;
  AggregationConfig config_used;

  bool operator==(const ScoreCard&) const = default;
};

/// value(verdict) x weight. Throws InapplicableVerdict for NotApplicable.
Rational metric_score(const Verdict& verdict, const Rational& weight);

ScoreValue cell_score(const Catalog& catalog, const Assessment& assessment, Section section,
                      Dimension dimension);

ScoreValue section_group_score(const Catalog& catalog, const Assessment& assessment,
                               Section section, Group group, const AggregationConfig& config);

std::map<Group, ScoreValue> overall_scores(const Catalog& catalog, const Assessment& assessment,
                                           const AggregationConfig& config);

/// Letter of the first band whose min_pct <= score, or "N/A".
std::string assign_grade(const ScoreValue& score, const GradeScale& scale);

/// Validates the assessment (see check_assessment), then computes the
/// full card.
ScoreCard score_summary(const Catalog& catalog, const Assessment& assessment,
                        const AggregationConfig& config, Date today = today_utc());

}  // namespace gpaiqa
