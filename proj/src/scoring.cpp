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

#include "gpaiqa/scoring.hpp"

#include <set>

#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace {

/// Achieved and possible weight over the scored metrics of some slice.
struct Tally {
  Rational achieved = 0;
  Rational possible = 0;
  std::size_t count = 0;

  Tally& operator+=(const Tally& other) {
    achieved += other.achieved;
    possible += other.possible;
    count += other.count;
    return *this;
  }

  ScoreValue score() const {
    if (count == 0) return ScoreValue::not_applicable();
    return ScoreValue::percent(achieved * 100 / possible);
  }
};

using CellTallies = std::map<std::pair<Section, Dimension>, Tally>;

/// Tallies every metric that is applicable under the assessment's gates
/// and not marked NotApplicable by the evaluator.
CellTallies tally_cells(const Catalog& catalog, const Assessment& assessment) {
  const auto mask = applicability_mask(catalog, [&](std::string_view id) -> std::optional<GateAnswer> {
    auto it = assessment.verdicts.find(std::string(id));
    return it == assessment.verdicts.end() ? std::nullopt : it->second.gate;
  });

  CellTallies cells;
  for (auto s : kAllSections) {
    for (auto d : kAllDimensions) cells[{s, d}];
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < catalog.metrics.size(); ++i) {
    if (!mask[i]) continue;
    const auto& m = catalog.metrics[i];
    auto it = assessment.verdicts.find(m.id);
    if (it == assessment.verdicts.end()) {
      missing.push_back(m.id);
      continue;
    }
    if (it->second.value == VerdictValue::NotApplicable) continue;
    auto& cell = cells[{m.section, m.dimension}];
    cell.achieved += metric_score(it->second, m.weight);
    cell.possible += m.weight;
    ++cell.count;
  }
  if (!missing.empty()) throw MissingVerdict(std::move(missing));
  return cells;
}

ScoreValue mean_of(const std::vector<ScoreValue>& values) {
  Rational sum = 0;
  std::size_t n = 0;
  for (const auto& v : values) {
    if (v.is_na()) continue;
    sum += v.pct();
    ++n;
  }
  if (n == 0) return ScoreValue::not_applicable();
  return ScoreValue::percent(sum / n);
}

ScoreValue section_group_from(const CellTallies& cells, Section section, Group group,
                              SectionGroupStrategy strategy) {
  if (strategy == SectionGroupStrategy::PooledWeighted) {
    Tally pooled;
    for (auto d : kAllDimensions) {
      if (group_of(d) == group) pooled += cells.at({section, d});
    }
    return pooled.score();
  }
  std::vector<ScoreValue> values;
  for (auto d : kAllDimensions) {
    if (group_of(d) == group) values.push_back(cells.at({section, d}).score());
  }
  return mean_of(values);
}

ScoreValue overall_from(const CellTallies& cells, Group group, const AggregationConfig& config) {
  if (config.overall_strategy == OverallStrategy::PooledWeighted) {
    Tally pooled;
    for (const auto& [key, tally] : cells) {
      if (group_of(key.second) == group) pooled += tally;
    }
    return pooled.score();
  }
  std::vector<ScoreValue> values;
  for (auto s : kAllSections) {
    values.push_back(section_group_from(cells, s, group, config.section_group_strategy));
  }
  return mean_of(values);
}

ScoreValue dimension_overall_from(const CellTallies& cells, Dimension dimension,
                                  OverallStrategy strategy) {
  if (strategy == OverallStrategy::PooledWeighted) {
    Tally pooled;
    for (auto s : kAllSections) pooled += cells.at({s, dimension});
    return pooled.score();
  }
  std::vector<ScoreValue> values;
  for (auto s : kAllSections) values.push_back(cells.at({s, dimension}).score());
  return mean_of(values);
}

void require_valid_catalog(const Catalog& catalog) {
  auto findings = validate_catalog(catalog);
  if (!findings.empty()) {
    throw SchemaViolation(findings.front().code + ": " + findings.front().message,
                          findings.front().locus);
  }
}

}  // namespace

ScoreValue ScoreValue::percent(Rational pct) {
  if (pct < 0 || pct > 100) {
    throw Error("OutOfRange", "percentage " + to_exact_string(pct) + " outside [0, 100]");
  }
  ScoreValue v;
  v.pct_ = std::move(pct);
  return v;
}

std::string_view to_string(SectionGroupStrategy s) {
  return s == SectionGroupStrategy::PooledWeighted ? "PooledWeighted" : "MeanOfDimensions";
}

std::string_view to_string(OverallStrategy s) {
  return s == OverallStrategy::PooledWeighted ? "PooledWeighted" : "MeanOfSections";
}

std::optional<SectionGroupStrategy> parse_section_group_strategy(std::string_view text) {
  if (text == "PooledWeighted") return SectionGroupStrategy::PooledWeighted;
  if (text == "MeanOfDimensions") return SectionGroupStrategy::MeanOfDimensions;
  return std::nullopt;
}

std::optional<OverallStrategy> parse_overall_strategy(std::string_view text) {
  if (text == "PooledWeighted") return OverallStrategy::PooledWeighted;
  if (text == "MeanOfSections") return OverallStrategy::MeanOfSections;
  return std::nullopt;
}

GradeScale GradeScale::standard() {
  return GradeScale({{"A+", 95}, {"A", 90}, {"B+", 80}, {"B", 75},
                     {"C+", 70}, {"C", 60}, {"D", 30}, {"F", 0}});
}

GradeScale::GradeScale(std::vector<GradeBand> bands) : bands_(std::move(bands)) {
  if (bands_.empty()) throw InvalidGradeScale("grade scale has no bands");
  std::set<std::string> letters;
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    const auto& band = bands_[i];
    if (band.letter.empty()) throw InvalidGradeScale("empty grade letter");
    if (band.letter == kNotApplicableLabel) throw InvalidGradeScale("'N/A' is reserved");
    if (!letters.insert(band.letter).second) {
      throw InvalidGradeScale("duplicate grade letter '" + band.letter + "'");
    }
    if (i > 0 && !(band.min_pct < bands_[i - 1].min_pct)) {
      throw InvalidGradeScale("band minimums must strictly decrease", band.letter);
    }
  }
  if (bands_.front().min_pct > 100) throw InvalidGradeScale("highest band starts above 100");
  if (bands_.back().min_pct != 0) throw InvalidGradeScale("lowest band must start at 0");
}

GradeScale GradeScale::parse(std::string_view text) {
  std::vector<GradeBand> bands;
  for (const auto& item : text::split(text, ',')) {
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw InvalidGradeScale("expected LETTER:MIN, got '" + item + "'");
    auto letter = text::trim(std::string_view(item).substr(0, colon));
    auto min = parse_rational(text::trim(std::string_view(item).substr(colon + 1)));
    if (!min) throw InvalidGradeScale("bad minimum in '" + item + "'");
    bands.push_back({std::string(letter), *min});
  }
  return GradeScale(std::move(bands));
}

std::string GradeScale::str() const {
  std::string out;
  for (const auto& band : bands_) {
    if (!out.empty()) out += ',';
    out += band.letter + ":" + to_canonical_string(band.min_pct);
  }
  return out;
}

std::size_t GradeScale::band_index(const Rational& pct) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (bands_[i].min_pct <= pct) return i;
  }
  return bands_.size() - 1;
}

Rational metric_score(const Verdict& verdict, const Rational& weight) {
  auto value = numeric_value(verdict.value);
  if (!value) throw InapplicableVerdict("NotApplicable verdict has no score");
  return *value * weight;
}

ScoreValue cell_score(const Catalog& catalog, const Assessment& assessment, Section section,
                      Dimension dimension) {
  return tally_cells(catalog, assessment).at({section, dimension}).score();
}

ScoreValue section_group_score(const Catalog& catalog, const Assessment& assessment,
                               Section section, Group group, const AggregationConfig& config) {
  return section_group_from(tally_cells(catalog, assessment), section, group,
                            config.section_group_strategy);
}

std::map<Group, ScoreValue> overall_scores(const Catalog& catalog, const Assessment& assessment,
                                           const AggregationConfig& config) {
  const auto cells = tally_cells(catalog, assessment);
  std::map<Group, ScoreValue> out;
  for (auto g : kAllGroups) out.emplace(g, overall_from(cells, g, config));
  return out;
}

std::string assign_grade(const ScoreValue& score, const GradeScale& scale) {
  if (score.is_na()) return std::string(kNotApplicableLabel);
  return scale.bands()[scale.band_index(score.pct())].letter;
}

ScoreCard score_summary(const Catalog& catalog, const Assessment& assessment,
                        const AggregationConfig& config, Date today) {
  require_valid_catalog(catalog);
  check_assessment(assessment, catalog, today);
  const auto cells = tally_cells(catalog, assessment);

  ScoreCard card;
  card.meta = assessment.meta;
  card.catalog_ref = catalog.ref();
  card.config_used = config;
  for (const auto& [key, tally] : cells) card.per_cell.emplace(key, tally.score());
  for (auto s : kAllSections) {
    for (auto g : kAllGroups) {
      card.per_section_group.emplace(std::pair{s, g},
                                     section_group_from(cells, s, g, config.section_group_strategy));
    }
  }
  for (auto d : kAllDimensions) {
    card.per_dimension_overall.emplace(d, dimension_overall_from(cells, d, config.overall_strategy));
  }
  for (auto g : kAllGroups) {
    auto score = overall_from(cells, g, config);
    card.grades.emplace(g, assign_grade(score, config.grade_scale));
    card.overall.emplace(g, std::move(score));
  }
  return card;
}

}  // namespace gpaiqa
