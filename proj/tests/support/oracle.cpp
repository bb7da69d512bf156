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

#include "oracle.hpp"

namespace gpaiqa::testing {

namespace {

// Accessibility and Comprehension are the last two dimensions.
int group_index(int dimension) { return dimension >= 4 ? 1 : 0; }

Q verdict_points(int verdict) {
  if (verdict == kSufficient) return 1;
  if (verdict == kPartial) return Q(1, 2);
  return 0;
}

std::optional<Q> percent(const Q& achieved, const Q& possible, int count) {
  if (count == 0) return std::nullopt;
  return achieved * 100 / possible;
}

std::optional<Q> mean(const std::vector<std::optional<Q>>& values) {
  Q sum = 0;
  int n = 0;
  for (const auto& v : values) {
    if (!v) continue;
    sum += *v;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

}  // namespace

std::vector<bool> oracle_applicable(const ToyInstance& toy) {
  const std::size_t n = toy.metrics.size();
  std::vector<int> state(n, 0);  // 0 unknown, 1 yes, 2 no
  bool changed = true;
  // Fixed-point iteration; gates always point at lower indices in toys,
  // but this does not rely on it.
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] != 0) continue;
      const auto& m = toy.metrics[i];
      if (m.gate < 0) {
        state[i] = 1;
        changed = true;
        continue;
      }
      const int g = state[static_cast<std::size_t>(m.gate)];
      if (g == 0) continue;
      if (g == 2) {
        state[i] = 2;
      } else {
        const int answer = toy.gate_answer[static_cast<std::size_t>(m.gate)];
        state[i] = (answer == (m.requires_yes ? kAnswerYes : kAnswerNo)) ? 1 : 2;
      }
      changed = true;
    }
  }
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = state[i] == 1;
  return out;
}

std::string oracle_grade(const std::optional<Q>& pct) {
  if (!pct) return "N/A";
  const Q& p = *pct;
  if (p >= 95) return "A+";
  if (p >= 90) return "A";
  if (p >= 80) return "B+";
  if (p >= 75) return "B";
  if (p >= 70) return "C+";
  if (p >= 60) return "C";
  if (p >= 30) return "D";
  return "F";
}

OracleCard oracle_score(const ToyInstance& toy, bool mean_dimensions, bool mean_sections) {
  const auto applicable = oracle_applicable(toy);
  Q achieved[kSections][kDimensions];
  Q possible[kSections][kDimensions];
  int count[kSections][kDimensions] = {};
  for (int s = 0; s < kSections; ++s) {
    for (int d = 0; d < kDimensions; ++d) {
      achieved[s][d] = 0;
      possible[s][d] = 0;
    }
  }
  for (std::size_t i = 0; i < toy.metrics.size(); ++i) {
    if (!applicable[i] || toy.verdict[i] == kNotApplicable) continue;
    const auto& m = toy.metrics[i];
    achieved[m.section][m.dimension] += verdict_points(toy.verdict[i]) * m.weight;
    possible[m.section][m.dimension] += m.weight;
    ++count[m.section][m.dimension];
  }

  OracleCard card;
  for (int s = 0; s < kSections; ++s) {
    for (int d = 0; d < kDimensions; ++d) {
      card.cell[s][d] = percent(achieved[s][d], possible[s][d], count[s][d]);
    }
  }

  for (int s = 0; s < kSections; ++s) {
    for (int g = 0; g < 2; ++g) {
      if (mean_dimensions) {
        std::vector<std::optional<Q>> cells;
        for (int d = 0; d < kDimensions; ++d) {
          if (group_index(d) == g) cells.push_back(card.cell[s][d]);
        }
        card.section_group[s][g] = mean(cells);
      } else {
        Q a = 0, p = 0;
        int c = 0;
        for (int d = 0; d < kDimensions; ++d) {
          if (group_index(d) != g) continue;
          a += achieved[s][d];
          p += possible[s][d];
          c += count[s][d];
        }
        card.section_group[s][g] = percent(a, p, c);
      }
    }
  }

  for (int d = 0; d < kDimensions; ++d) {
    if (mean_sections) {
      std::vector<std::optional<Q>> cells;
      for (int s = 0; s < kSections; ++s) cells.push_back(card.cell[s][d]);
      card.dimension_overall[d] = mean(cells);
    } else {
      Q a = 0, p = 0;
      int c = 0;
      for (int s = 0; s < kSections; ++s) {
        a += achieved[s][d];
        p += possible[s][d];
        c += count[s][d];
      }
      card.dimension_overall[d] = percent(a, p, c);
    }
  }

  for (int g = 0; g < 2; ++g) {
    if (mean_sections) {
      std::vector<std::optional<Q>> sections;
      for (int s = 0; s < kSections; ++s) sections.push_back(card.section_group[s][g]);
      card.overall[g] = mean(sections);
    } else {
      Q a = 0, p = 0;
      int c = 0;
      for (int s = 0; s < kSections; ++s) {
        for (int d = 0; d < kDimensions; ++d) {
          if (group_index(d) != g) continue;
          a += achieved[s][d];
          p += possible[s][d];
          c += count[s][d];
        }
      }
      card.overall[g] = percent(a, p, c);
    }
    card.grade[g] = oracle_grade(card.overall[g]);
  }
  return card;
}

}  // namespace gpaiqa::testing
