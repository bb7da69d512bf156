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

#include "gpaiqa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "gpaiqa/assessment.hpp"
#include "gpaiqa/catalog.hpp"
#include "gpaiqa/record_file.hpp"
#include "gpaiqa/registry.hpp"
#include "gpaiqa/site.hpp"
#include "gpaiqa/text.hpp"

namespace gpaiqa::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kAssessmentExtension = ".tsv";

void print_findings(std::ostream& out, const std::string& source, const std::vector<Finding>& findings) {
  for (const auto& f : findings) {
    out << source << '\t' << f.code << '\t' << f.locus << '\t' << text::escape_field(f.message) << '\n';
  }
}

void print_error(std::ostream& err, const Error& e) { err << "error: " << e.code() << ": " << e.what() << '\n'; }

std::vector<fs::path> files_with_extension(const fs::path& dir, std::string_view ext) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) return files;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ext) files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

fs::path scorecard_dir(const RunConfig& config) { return config.output_dir / "scorecards"; }

std::vector<ScoreCard> load_scorecards(const RunConfig& config) {
  std::vector<ScoreCard> cards;
  for (const auto& path : files_with_extension(scorecard_dir(config), ".json")) {
    try {
      cards.push_back(parse_scorecard(text::read_file(path)));
    } catch (const MalformedScoreCard& e) {
      throw MalformedScoreCard(e.what(), path.string());
    }
  }
  return cards;
}

struct Options {
  std::optional<std::string> config;
  std::optional<std::string> catalog;
  std::optional<std::string> assessments;
  std::optional<std::string> registry;
  std::optional<std::string> storage;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> aggregation;
  std::optional<std::string> grade_scale;
  std::optional<std::string> severity;
};

RunConfig resolve(const Options& o) {
  RunConfig config;
  if (o.config) config = load_run_config(*o.config, config);
  if (o.catalog) config.catalog_path = *o.catalog;
  if (o.assessments) config.assessments_dir = *o.assessments;
  if (o.registry) config.registry_path = *o.registry;
  if (o.storage) config.storage_root = *o.storage;
  if (o.out) config.output_dir = *o.out;
  if (o.format) config.format = parse_report_format(*o.format);
  if (o.aggregation) apply_aggregation(config.aggregation, *o.aggregation);
  if (o.grade_scale) config.aggregation.grade_scale = GradeScale::parse(*o.grade_scale);
  if (o.severity) config.severity = parse_severity_bands(*o.severity);
  return config;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  std::size_t total = 0;
  const auto report = [&](const std::string& source, const std::vector<Finding>& findings) {
    print_findings(out, source, findings);
    total += findings.size();
  };

  std::optional<Catalog> catalog;
  const std::string catalog_source = config.catalog_path.generic_string();
  try {
    catalog = load_catalog_file(config.catalog_path);
    report(catalog_source, validate_catalog(*catalog));
  } catch (const Error& e) {
    report(catalog_source, {finding_from(e)});
  }

  const bool catalog_ok = catalog && total == 0;
  for (const auto& path : files_with_extension(config.assessments_dir, kAssessmentExtension)) {
    const std::string source = path.generic_string();
    if (!catalog_ok) break;
    try {
      std::ifstream in(path, std::ios::binary);
      const Assessment a = parse_assessment(in);
      report(source, assessment_findings(a, *catalog, today_utc()));
    } catch (const Error& e) {
      report(source, {finding_from(e)});
    }
  }

  if (fs::exists(config.registry_path)) {
    const std::string source = config.registry_path.generic_string();
    try {
      const Registry registry = load_registry_file(config.registry_path);
      report(source, validate_registry(registry));
      report(config.storage_root.generic_string(), verify_archive(registry, config.storage_root));
    } catch (const Error& e) {
      report(source, {finding_from(e)});
    }
  }
  return total == 0 ? 0 : 1;
}

int cmd_score(const RunConfig& config, std::vector<std::string> inputs, std::ostream& out,
              std::ostream& err) {
  const Catalog catalog = load_catalog_file(config.catalog_path);
  std::vector<fs::path> paths;
  if (inputs.empty()) inputs.push_back(config.assessments_dir.string());
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      auto found = files_with_extension(input, kAssessmentExtension);
      paths.insert(paths.end(), found.begin(), found.end());
    } else {
      paths.emplace_back(input);
    }
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.stem() < b.stem(); });

  struct Outcome {
    std::optional<ScoreCard> card;
    std::string error;
  };
  const Date today = today_utc();
  std::vector<std::future<Outcome>> jobs;
  for (const auto& path : paths) {
    jobs.push_back(std::async(std::launch::async, [&catalog, &config, today, path]() -> Outcome {
      try {
        const Assessment a = load_assessment_file(path, catalog, today);
        return {score_summary(catalog, a, config.aggregation, today), {}};
      } catch (const Error& e) {
        return {std::nullopt, e.code() + ": " + path.generic_string() + ": " + e.what()};
      }
    }));
  }

  int status = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Outcome outcome = jobs[i].get();
    if (!outcome.card) {
      err << "error: " << outcome.error << '\n';
      status = 1;
      continue;
    }
    const ScoreCard& card = *outcome.card;
    const std::string stem = paths[i].stem().string();
    text::write_file_atomic(scorecard_dir(config) / (stem + ".json"),
                            render_scorecard(card, ReportFormat::StructuredData));
    if (config.format != ReportFormat::StructuredData) {
      text::write_file_atomic(config.output_dir / "reports" / (stem + "." + std::string(file_extension(config.format))),
                              render_scorecard(card, config.format, config.severity));
    }
    out << stem;
    for (auto g : kAllGroups) out << '\t' << to_string(g) << '=' << format_score(card.overall.at(g)) << '(' << card.grades.at(g) << ')';
    out << '\n';
  }
  if (paths.empty()) {
    err << "error: no assessments found\n";
    status = 1;
  }
  return status;
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
  const auto cards = load_scorecards(config);
  if (cards.empty()) throw NoScoreCards("no score cards found", scorecard_dir(config).string());
  const std::string rendered = render_comparison(cards, config.format, config.severity);
  text::write_file_atomic(config.output_dir / ("comparison." + std::string(file_extension(config.format))), rendered);
  out << rendered;
  return 0;
}

struct ArchiveArgs {
  std::string url;
  std::string slug;
  std::string provider;
  std::string model;
  std::string title;
  std::string source_url;
  std::string form = "PDF";
  std::string assessed_on;
  std::string channel = "SearchEngine";
  std::string query;
  std::string discovered_on;
  std::vector<std::string> assessment_refs;
};

int cmd_archive(const RunConfig& config, const ArchiveArgs& args, std::ostream& out) {
  Registry registry = fs::exists(config.registry_path) ? load_registry_file(config.registry_path) : Registry{};
  if (registry.find(args.slug)) throw DuplicateSlug("slug already registered", args.slug);
  if (!is_valid_slug(args.slug)) throw InvalidConfig("slug must be lower-case [a-z0-9.-]", args.slug);

  const auto required_date = [](const std::string& text, const char* what) {
    auto d = parse_date(text);
    if (!d) throw InvalidConfig(std::string(what) + " must be YYYY-MM-DD");
    return *d;
  };
  const Date today{std::chrono::floor<std::chrono::days>(now_or_source_date_epoch())};

  RegistryEntry entry;
  entry.id = args.slug;
  entry.meta.provider = args.provider;
  entry.meta.model = args.model;
  entry.meta.summary_title = args.title;
  entry.meta.source_url = !args.source_url.empty() ? args.source_url : args.url;
  auto form = parse_published_form(args.form);
  if (!form) throw InvalidConfig("unknown published form '" + args.form + "'");
  entry.meta.published_form = *form;
  entry.meta.assessed_version_date = args.assessed_on.empty() ? today : required_date(args.assessed_on, "--assessed-on");
  auto channel = parse_discovery_channel(args.channel);
  if (!channel) throw InvalidConfig("unknown discovery channel '" + args.channel + "'");
  entry.discovery = {*channel, args.query,
                     args.discovered_on.empty() ? today : required_date(args.discovered_on, "--discovered-on")};
  entry.assessment_refs = args.assessment_refs;

  auto copy = archive_fetch(args.url, config.storage_root);
  entry.meta.archived_copy_digest = copy.content_digest;
  entry.archived = copy;
  add_entry(registry, std::move(entry));
  save_registry(config.registry_path, registry);
  out << args.slug << '\t' << copy.content_digest << '\t' << copy.storage_path << '\n';
  return 0;
}

int cmd_site(const RunConfig& config, const std::optional<std::string>& site_dir, std::ostream& out) {
  const Catalog catalog = load_catalog_file(config.catalog_path);
  const Registry registry = load_registry_file(config.registry_path);
  const auto cards = load_scorecards(config);

  SiteConfig site;
  site.severity = config.severity;
  site.methodology_catalog = &catalog;
  if (fs::is_directory(config.storage_root)) site.storage_root = config.storage_root;
  const fs::path root = site_dir ? fs::path(*site_dir) : config.output_dir / "site";
  const SitePlan plan = build_site(registry, cards, root, site);
  for (const auto& p : plan.pages) out << p.route << '\t' << p.file.generic_string() << '\n';

  const auto broken = check_links(root);
  print_findings(out, root.generic_string(), broken);
  return broken.empty() ? 0 : 1;
}

int cmd_catalog_stats(const RunConfig& config, std::ostream& out) {
  const Catalog catalog = load_catalog_file(config.catalog_path);
  out << "catalog\t" << catalog.ref().str() << '\n';
  for (const auto& [section, count] : section_counts(catalog)) out << to_string(section) << '\t' << count << '\n';
  out << "Total\t" << catalog.metrics.size() << '\n';
  std::map<Dimension, std::size_t> per_dimension;
  std::size_t gated = 0;
  for (const auto& m : catalog.metrics) {
    ++per_dimension[m.dimension];
    gated += m.applicability.is_gated();
  }
  for (auto d : kAllDimensions) out << to_string(d) << '\t' << per_dimension[d] << '\n';
  out << "Gated\t" << gated << '\n';
  const auto findings = validate_catalog(catalog);
  print_findings(out, config.catalog_path.generic_string(), findings);
  return findings.empty() ? 0 : 1;
}

}  // namespace

void apply_aggregation(AggregationConfig& config, std::string_view text) {
  if (text == "pooled") {
    config.section_group_strategy = SectionGroupStrategy::PooledWeighted;
    config.overall_strategy = OverallStrategy::PooledWeighted;
    return;
  }
  if (text == "mean") {
    config.section_group_strategy = SectionGroupStrategy::MeanOfDimensions;
    config.overall_strategy = OverallStrategy::MeanOfSections;
    return;
  }
  const auto parts = text::split(text, ',');
  if (parts.size() == 2) {
    auto section = parse_section_group_strategy(text::trim(parts[0]));
    auto overall = parse_overall_strategy(text::trim(parts[1]));
    if (section && overall) {
      config.section_group_strategy = *section;
      config.overall_strategy = *overall;
      return;
    }
  }
  throw InvalidConfig("aggregation must be 'pooled', 'mean' or '<SectionGroupStrategy>,<OverallStrategy>'",
                      std::string(text));
}

RunConfig load_run_config(const fs::path& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidConfig("cannot open config file", path.string());
  records::Document doc;
  try {
    doc = records::parse(in);
  } catch (const records::SyntaxError& e) {
    throw InvalidConfig(e.message, path.string() + ":" + std::to_string(e.line));
  }
  if (!doc.records.empty()) {
    throw InvalidConfig("config files take top-level keys only", path.string() + ":" + std::to_string(doc.records.front().line));
  }
  const fs::path dir = path.parent_path();
  const auto relative = [&](const std::string& value) { return fs::path(value).is_absolute() ? fs::path(value) : dir / value; };
  for (const auto& f : doc.preamble.fields) {
    const std::string locus = path.string() + ":" + std::to_string(f.line);
    try {
      if (f.key == "catalog") base.catalog_path = relative(f.value);
      else if (f.key == "assessments") base.assessments_dir = relative(f.value);
      else if (f.key == "registry") base.registry_path = relative(f.value);
      else if (f.key == "storage") base.storage_root = relative(f.value);
      else if (f.key == "out") base.output_dir = relative(f.value);
      else if (f.key == "format") base.format = parse_report_format(f.value);
      else if (f.key == "aggregation") apply_aggregation(base.aggregation, f.value);
      else if (f.key == "grade_scale") base.aggregation.grade_scale = GradeScale::parse(f.value);
      else if (f.key == "severity") base.severity = parse_severity_bands(f.value);
      else throw InvalidConfig("unknown config key '" + f.key + "'");
    } catch (const Error& e) {
      throw InvalidConfig(e.what(), locus);
    }
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Score public summaries of training content against a metric catalog", "gpaiqa"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  const auto opt = [&](const char* name, std::optional<std::string>& slot, const char* help) {
    app.add_option_function<std::string>(name, [&slot](const std::string& v) { slot = v; }, help);
  };
  opt("--config", o.config, "Config file (key = value); flags override it");
  opt("--catalog", o.catalog, "Metric catalog file");
  opt("--assessments", o.assessments, "Directory of assessment .tsv files");
  opt("--registry", o.registry, "Registry file");
  opt("--storage", o.storage, "Archive object store root");
  opt("--out", o.out, "Output directory");
  opt("--format", o.format, "Report format: json, tsv or html");
  opt("--aggregation", o.aggregation, "pooled, mean, or <SectionGroupStrategy>,<OverallStrategy>");
  opt("--grade-scale", o.grade_scale, "Grade bands, e.g. A+:95,A:90,...,F:0");
  opt("--severity", o.severity, "Severity thresholds <high>,<moderate>");

  auto* validate = app.add_subcommand("validate", "Validate catalog, assessments, registry and archive");
  auto* score = app.add_subcommand("score", "Score assessments into score cards");
  std::vector<std::string> score_inputs;
  score->add_option("inputs", score_inputs, "Assessment files or directories");
  auto* compare = app.add_subcommand("compare", "Render a comparison over all score cards");

  auto* archive = app.add_subcommand("archive", "Archive a public summary and register it");
  ArchiveArgs aa;
  archive->add_option("url", aa.url, "http(s) URL, file:// URL or local path")->required();
  archive->add_option("--slug", aa.slug, "Registry slug")->required();
  archive->add_option("--provider", aa.provider, "Model provider")->required();
  archive->add_option("--model", aa.model, "Model name")->required();
  archive->add_option("--title", aa.title, "Summary title");
  archive->add_option("--source-url", aa.source_url, "Public URL when archiving a local copy");
  archive->add_option("--form", aa.form, "WebPage, PDF, MarkdownFile or Other");
  archive->add_option("--assessed-on", aa.assessed_on, "Date of the archived version (YYYY-MM-DD)");
  archive->add_option("--channel", aa.channel, "Discovery channel");
  archive->add_option("--query", aa.query, "Search query or path used for discovery");
  archive->add_option("--discovered-on", aa.discovered_on, "Discovery date (YYYY-MM-DD)");
  archive->add_option("--assessment", aa.assessment_refs, "Assessment file reference (repeatable)");

  auto* site = app.add_subcommand("site", "Build the static site and check its links");
  std::optional<std::string> site_dir;
  site->add_option_function<std::string>("--site-dir", [&](const std::string& v) { site_dir = v; }, "Site output directory (default <out>/site)");
  auto* stats = app.add_subcommand("catalog-stats", "Print per-section metric counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const RunConfig config = resolve(o);
    if (validate->parsed()) return cmd_validate(config, out);
    if (score->parsed()) return cmd_score(config, score_inputs, out, err);
    if (compare->parsed()) return cmd_compare(config, out);
    if (archive->parsed()) return cmd_archive(config, aa, out);
    if (site->parsed()) return cmd_site(config, site_dir, out);
    if (stats->parsed()) return cmd_catalog_stats(config, out);
  } catch (const InvalidConfig& e) {
    print_error(err, e);
    return 2;
  } catch (const UnsupportedFormat& e) {
    print_error(err, e);
    return 2;
  } catch (const Error& e) {
    print_error(err, e);
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gpaiqa::cli
