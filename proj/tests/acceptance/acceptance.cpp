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

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "gpaiqa/catalog.hpp"
#include "gpaiqa/cli.hpp"
#include "gpaiqa/registry.hpp"
#include "gpaiqa/reporting.hpp"
#include "gpaiqa/scoring.hpp"
#include "gpaiqa/site.hpp"
#include "gpaiqa/text.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "toy.hpp"

namespace fs = std::filesystem;
using namespace gpaiqa;
using namespace gpaiqa::testing;

namespace {

// Collects failures; the first few are printed.
struct Check {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Catalog reference_catalog() { return load_catalog_file(data_dir() / "reference-catalog.txt"); }

Assessment uniform_assessment(const Catalog& catalog, VerdictValue value, GateAnswer gates) {
  Assessment a;
  a.meta.provider = "Boundary";
  a.meta.model = "uniform";
  a.meta.summary_title = "Uniform verdicts";
  a.meta.source_url = "https://example.org/uniform";
  a.meta.assessed_version_date = std::chrono::year{2026} / 1 / 1;
  a.catalog_ref = catalog.ref();
  a.evaluator = "acceptance";
  for (const auto& m : catalog.metrics) a.verdicts[m.id] = Verdict{value, gates, ""};
  return a;
}

void grade_fidelity(Check& c) {
  const std::pair<const char*, const char*> pairs[] = {
      {"97.14", "A+"}, {"94.74", "A"},  {"92.90", "A"},  {"88.02", "B+"}, {"86.97", "B+"},
      {"86.01", "B+"}, {"82.50", "B+"}, {"71.11", "C+"}, {"33.30", "D"},  {"24.54", "F"},
  };
  const auto scale = GradeScale::standard();
  for (const auto& [pct, want] : pairs) {
    const auto got = assign_grade(ScoreValue::percent(*parse_rational(pct)), scale);
    c.expect(got == want, fmt::format("{} graded {}, want {}", pct, got, want));
  }
  c.summary = "10 pairs";
}

void catalog_shape(Check& c) {
  const auto catalog = reference_catalog();
  for (const auto& f : validate_catalog(catalog)) c.expect(false, f.code + " " + f.locus + " " + f.message);
  const std::size_t want[] = {30, 54, 26, 27, 46, 14, 28, 17};
  const auto counts = section_counts(catalog);
  std::size_t total = 0;
  for (std::size_t i = 0; i < kAllSections.size(); ++i) {
    const auto it = counts.find(kAllSections[i]);
    const std::size_t got = it == counts.end() ? 0 : it->second;
    total += got;
    c.expect(got == want[i], fmt::format("{} has {} metrics, want {}", to_string(kAllSections[i]), got, want[i]));
  }
  c.expect(total == 242 && catalog.metrics.size() == 242, fmt::format("total {}", total));
  c.summary = fmt::format("{} metrics", total);
}

void oracle_equivalence(Check& c) {
  constexpr int kInstances = 1200;
  std::mt19937_64 rng(20260214);
  int comparisons = 0;
  for (int i = 0; i < kInstances; ++i) {
    ToyOptions options;
    options.section_span = 1 + i % kSections;
    if (i % 5 == 0) options.gate_probability = 0.7;
    const auto toy = random_toy(rng, options);
    const auto catalog = toy_catalog(toy);
    const auto assessment = toy_assessment(toy);
    for (bool md : {false, true}) {
      for (bool ms : {false, true}) {
        const auto card = score_summary(catalog, assessment, make_config(md, ms), test_today());
        for (const auto& d : compare_with_oracle(card, oracle_score(toy, md, ms))) {
          c.expect(false, fmt::format("instance {} md={} ms={}: {}", i, md, ms, d));
        }
        ++comparisons;
      }
    }
  }
  c.summary = fmt::format("{} instances, {} strategy comparisons", kInstances, comparisons);
}

void property_suite(Check& c) {
  constexpr int kInstances = 500;
  const std::pair<const char*, std::function<PropertyRun()>> suites[] = {
      {"upgrade monotonicity", [] { return check_upgrade_monotonicity(101, kInstances); }},
      {"weight scaling", [] { return check_weight_scaling(102, kInstances); }},
      {"N/A propagation", [] { return check_na_propagation(103, kInstances); }},
      {"gated no-penalty", [] { return check_gated_no_penalty(104, kInstances); }},
      {"grade monotonicity", [] { return check_grade_monotonicity(105, kInstances * 4); }},
  };
  std::vector<std::string> parts;
  for (const auto& [name, suite] : suites) {
    const auto run = suite();
    c.expect(run.instances >= kInstances, fmt::format("{}: only {} instances", name, run.instances));
    for (const auto& v : run.violations) c.expect(false, fmt::format("{}: {}", name, v));
    parts.push_back(fmt::format("{} x{}", name, run.instances));
  }
  c.summary = fmt::format("{}", fmt::join(parts, ", "));
}

void boundary_fixed_points(Check& c) {
  const auto catalog = reference_catalog();
  for (auto [value, pct, grade] : {std::tuple{VerdictValue::Sufficient, Rational(100), "A+"},
                                   std::tuple{VerdictValue::Insufficient, Rational(0), "F"}}) {
    const auto card =
        score_summary(catalog, uniform_assessment(catalog, value, GateAnswer::Yes), AggregationConfig{}, test_today());
    const std::string label = std::string(to_string(value));
    for (const auto& [key, score] : card.per_cell) {
      bool populated = false;
      for (const auto& m : catalog.metrics) populated |= m.section == key.first && m.dimension == key.second;
      // A cell with no metrics in the catalog has nothing to score.
      const bool ok = populated ? (!score.is_na() && score.pct() == pct) : score.is_na();
      c.expect(ok, fmt::format("{}: cell {}/{} is {}", label, to_string(key.first), to_string(key.second),
                               format_score(score)));
    }
    for (const auto& [key, score] : card.per_section_group) {
      c.expect(!score.is_na() && score.pct() == pct, label + ": section group " + format_score(score));
    }
    for (const auto& [key, score] : card.per_dimension_overall) {
      c.expect(!score.is_na() && score.pct() == pct, label + ": dimension " + format_score(score));
    }
    for (auto g : kAllGroups) {
      c.expect(format_score(card.overall.at(g)) == format_fixed2(pct), label + ": overall " + format_score(card.overall.at(g)));
      c.expect(card.grades.at(g) == grade, label + ": grade " + card.grades.at(g));
    }
  }
  const auto na = score_summary(catalog, uniform_assessment(catalog, VerdictValue::NotApplicable, GateAnswer::Yes),
                                AggregationConfig{}, test_today());
  for (const auto& v : all_scores(na)) c.expect(v.is_na(), "all-N/A card has " + format_score(v));
  for (auto g : kAllGroups) c.expect(na.grades.at(g) == "N/A", "all-N/A grade " + na.grades.at(g));
  c.summary = "all-Sufficient 100.00 A+/A+, all-Insufficient 0.00 F/F, all-N/A";
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

void render_round_trip(Check& c) {
  std::mt19937_64 rng(606);
  std::vector<ScoreCard> cards;
  for (int i = 0; i < 100; ++i) {
    auto card = random_card(rng);
    const auto json = render_scorecard(card, ReportFormat::StructuredData);
    c.expect(parse_scorecard(json) == card, fmt::format("card {} changed in round trip", i));
    for (auto f : {ReportFormat::StructuredData, ReportFormat::DelimitedTable, ReportFormat::MarkupDocument}) {
      const auto text = render_scorecard(card, f);
      for (const auto& v : rendered_values(card)) {
        c.expect(text.find(v) != std::string::npos, fmt::format("card {} {} lacks {}", i, file_extension(f), v));
      }
    }
    // Positional check on the delimited table.
    const auto rows = lines(render_scorecard(card, ReportFormat::DelimitedTable));
    for (std::size_t s = 0; s < kAllSections.size(); ++s) {
      const auto fields = text::split(rows[s + 1], '\t');
      for (std::size_t d = 0; d < kAllDimensions.size(); ++d) {
        c.expect(fields[d + 1] == format_score(card.per_cell.at({kAllSections[s], kAllDimensions[d]})),
                 fmt::format("card {} cell {}/{} misplaced", i, s, d));
      }
    }
    card.catalog_ref = {"toy", "1"};
    cards.push_back(std::move(card));
  }
  for (auto f : {ReportFormat::StructuredData, ReportFormat::DelimitedTable, ReportFormat::MarkupDocument}) {
    const auto text = render_comparison(cards, f);
    for (std::size_t i = 0; i < cards.size(); ++i) {
      for (const auto& [k, v] : cards[i].per_section_group) {
        c.expect(text.find(format_score(v)) != std::string::npos,
                 fmt::format("comparison {} lacks {}", file_extension(f), format_score(v)));
      }
      for (const auto& [g, v] : cards[i].overall) {
        c.expect(text.find(format_score(v)) != std::string::npos,
                 fmt::format("comparison {} lacks {}", file_extension(f), format_score(v)));
      }
    }
  }
  const auto rows = lines(render_comparison(cards, ReportFormat::DelimitedTable));
  for (std::size_t i = 0; i < cards.size(); ++i) {
    std::size_t r = 1;
    for (auto s : kAllSections) {
      for (auto g : kAllGroups) {
        c.expect(text::split(rows[r++], '\t')[i + 2] == format_score(cards[i].per_section_group.at({s, g})),
                 fmt::format("comparison column {} misplaced", i));
      }
    }
  }
  c.summary = "100 cards";
}

int cli(const std::vector<std::string>& args, std::string* captured = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

void pipeline_reproducibility(Check& c) {
  TempDir dir;
  const fs::path data = dir.path() / "data";
  fs::create_directories(data);
  fs::copy_file(data_dir() / "reference-catalog.txt", data / "reference-catalog.txt");
  fs::copy(data_dir() / "fixtures", data / "fixtures", fs::copy_options::recursive);
  const std::string config = (data / "fixtures" / "gpaiqa.conf").string();

  for (const char* run : {"run1", "run2"}) {
    const std::string out = (dir.path() / run).string();
    std::string log;
    c.expect(cli({"--config", config, "--out", out, "validate"}, &log) == 0, fmt::format("{} validate: {}", run, log));
    c.expect(cli({"--config", config, "--out", out, "score"}, &log) == 0, fmt::format("{} score: {}", run, log));
    c.expect(lines(log).size() == 5, fmt::format("{} scored {} summaries", run, lines(log).size()));
    c.expect(cli({"--config", config, "--out", out, "compare"}, &log) == 0, fmt::format("{} compare: {}", run, log));
    c.expect(cli({"--config", config, "--out", out, "site"}, &log) == 0, fmt::format("{} site: {}", run, log));
  }
  const auto first = snapshot_tree(dir.path() / "run1");
  const auto second = snapshot_tree(dir.path() / "run2");
  c.expect(!first.empty() && first == second, "output trees differ between runs");

  const auto links = check_links(dir.path() / "run1" / "site");
  for (const auto& f : links) c.expect(false, "link check: " + f.locus + " " + f.message);

  const auto registry = load_registry_file(data / "fixtures" / "registry.txt");
  const fs::path storage = data / "fixtures" / "archive";
  for (const auto& f : verify_archive(registry, storage)) c.expect(false, "verify: " + f.code + " " + f.locus);

  const auto& victim = registry.entries.at(2);
  const fs::path object = storage / victim.archived->storage_path;
  fs::permissions(object, fs::perms::owner_write, fs::perm_options::add);
  auto bytes = text::read_file(object);
  bytes[0] ^= 0x20;
  text::write_file_atomic(object, bytes);
  const auto corrupted = verify_archive(registry, storage);
  c.expect(corrupted.size() == 1 && corrupted[0].code == "DigestMismatch" && corrupted[0].locus == victim.id,
           fmt::format("corrupted object gave {} findings", corrupted.size()));
  c.summary = fmt::format("{} files per run, corruption of {} detected", first.size(), victim.id);
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "grade-fidelity", 1, grade_fidelity},
      {2, "catalog-shape", 1, catalog_shape},
      {3, "oracle-equivalence", 30, oracle_equivalence},
      {4, "property-suite", 60, property_suite},
      {5, "boundary-fixed-points", 1, boundary_fixed_points},
      {6, "render-round-trip", 5, render_round_trip},
      {7, "pipeline-reproducibility", 10, pipeline_reproducibility},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= criterion.budget_seconds) {
      check.failures.push_back(fmt::format("took {:.3f} s, budget {} s", seconds, criterion.budget_seconds));
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s %d %s (%.3f s / %.0f s) %s\n", ok ? "PASS" : "FAIL", criterion.number, criterion.name, seconds,
                criterion.budget_seconds, check.summary.c_str());
    for (std::size_t i = 0; i < check.failures.size() && i < 5; ++i) {
      std::printf("    %s\n", check.failures[i].c_str());
    }
    if (check.failures.size() > 5) std::printf("    ... %zu more\n", check.failures.size() - 5);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
