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

#include "gpaiqa/site.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>

#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace fs = std::filesystem;

namespace {

using text::html_escape;

std::string page(const std::string& title, const std::string& description, const std::string& root,
                 const std::string& body) {
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<meta name=\"viewport\" content=\"width=device-width, initial-scale=1\">\n";
  out += "<title>" + html_escape(title) + "</title>\n";
  out += "<meta name=\"description\" content=\"" + html_escape(description) + "\">\n";
  out += "<link rel=\"stylesheet\" href=\"" + root + "style.css\">\n";
  out += "</head>\n<body>\n";
  out += body;
  out += "</body>\n</html>\n";
  return out;
}

std::string nav(const std::string& root, bool methodology) {
  std::string out = "<nav><a href=\"" + root + "index.html\">Overview</a>";
  if (methodology) out += " | <a href=\"" + root + "methodology/index.html\">Methodology</a>";
  out += "</nav>\n";
  return out;
}

std::string detail_file(const std::string& slug) { return "summaries/" + slug + "/index.html"; }

const RegistryEntry& match_entry(const Registry& registry, const ScoreCard& card) {
  for (const auto& e : registry.entries) {
    if (e.meta.provider == card.meta.provider && e.meta.model == card.meta.model) return e;
  }
  throw UnmatchedScoreCard("no registry entry for provider '" + card.meta.provider + "' and model '" +
                               card.meta.model + "'",
                           card.meta.model);
}

std::string index_body(const SiteConfig& config, const std::vector<ScoreCard>& cards,
                       const std::vector<const RegistryEntry*>& entries) {
  std::string body = nav("", config.methodology_catalog != nullptr);
  body += "<main>\n<h1>" + html_escape(config.title) + "</h1>\n";
  body += "<p>" + html_escape(config.description) + "</p>\n";

  body += "<section class=\"grades\">\n<h2>Overall grades</h2>\n<table>\n<thead><tr>"
          "<th scope=\"col\">Summary</th><th scope=\"col\">Transparency</th>"
          "<th scope=\"col\">Usefulness</th><th scope=\"col\">Full report</th></tr></thead>\n<tbody>\n";
  for (std::size_t i = 0; i < cards.size(); ++i) {
    const auto& c = cards[i];
    body += "<tr><th scope=\"row\">" + html_escape(c.meta.provider + " " + c.meta.model) + "</th>";
    for (auto g : kAllGroups) {
      const auto& v = c.overall.at(g);
      body += "<td><span class=\"grade\">" + html_escape(c.grades.at(g)) + "</span> " +
              (v.is_na() ? std::string(kNotApplicableLabel) : format_fixed2(v.pct()) + "%") + "</td>";
    }
    body += "<td><a href=\"" + detail_file(entries[i]->id) + "\">" + html_escape(entries[i]->id) +
            "</a></td></tr>\n";
  }
  body += "</tbody>\n</table>\n</section>\n";

  std::vector<std::string> links;
  for (const auto* e : entries) links.push_back(detail_file(e->id));
  body += "<section class=\"sections\">\n<h2>Section scores</h2>\n";
  body += html::comparison_table(cards, links, config.severity);
  body += "</section>\n";

  if (!config.resources.empty()) {
    body += "<section>\n<h2>Resources</h2>\n<ul>\n";
    for (const auto& [label, url] : config.resources) {
      body += "<li><a href=\"" + html_escape(url) + "\">" + html_escape(label) + "</a></li>\n";
    }
    body += "</ul>\n</section>\n";
  }
  body += "</main>\n";
  return body;
}

std::string detail_body(const SiteConfig& config, const ScoreCard& card, const RegistryEntry& entry,
                        const std::optional<std::string>& archive_href) {
  const std::string root = "../../";
  std::string body = nav(root, config.methodology_catalog != nullptr);
  body += "<main>\n<h1>" + html_escape(card.meta.provider + " " + card.meta.model) + "</h1>\n";
  if (!card.meta.summary_title.empty()) body += "<p>" + html_escape(card.meta.summary_title) + "</p>\n";

  body += html::overall_summary(card, config.severity);
  body += html::section_summary(card, config.severity);
  body += "<p><a href=\"#full-report\">Full report</a> | <a href=\"scorecard.json\">Score card data (JSON)</a></p>\n";

  body += "<section class=\"traceability\">\n<h2>Traceability</h2>\n<dl>\n";
  body += "<dt>Public summary</dt><dd><a href=\"" + html_escape(card.meta.source_url) + "\">" +
          html_escape(card.meta.source_url) + "</a></dd>\n";
  body += "<dt>Published as</dt><dd>" + std::string(to_string(card.meta.published_form)) + "</dd>\n";
  body += "<dt>Assessed version</dt><dd>" + format_date(card.meta.assessed_version_date) + "</dd>\n";
  if (entry.archived) {
    body += "<dt>Archived copy</dt><dd>";
    if (archive_href) {
      body += "<a href=\"" + html_escape(*archive_href) + "\">" + html_escape(entry.archived->content_digest) + "</a>";
    } else {
      body += html_escape(entry.archived->content_digest);
    }
    body += " (" + html_escape(entry.archived->media_type) + ", " + std::to_string(entry.archived->byte_length) +
            " bytes, fetched " + format_timestamp(entry.archived->fetched_at) + ")</dd>\n";
  } else if (card.meta.archived_copy_digest) {
    body += "<dt>Archived copy</dt><dd>" + html_escape(*card.meta.archived_copy_digest) + "</dd>\n";
  }
  body += "<dt>Discovered via</dt><dd>" + std::string(to_string(entry.discovery.channel)) + ": " +
          html_escape(entry.discovery.query_or_path) + " (" + format_date(entry.discovery.discovered_on) +
          ")</dd>\n";
  body += "<dt>Catalog</dt><dd>" + html_escape(card.catalog_ref.str()) + "</dd>\n";
  body += "</dl>\n</section>\n";

  body += "<section id=\"full-report\">\n<h2>Full report</h2>\n";
  body += html::scorecard_table(card, config.severity);
  body += "</section>\n</main>\n";
  return body;
}

std::string methodology_body(const SiteConfig& config) {
  const Catalog& catalog = *config.methodology_catalog;
  std::string body = nav("../", true);
  body += "<main>\n<h1>Methodology</h1>\n";
  body += "<p>Catalog: " + html_escape(catalog.ref().str()) + ", " + std::to_string(catalog.metrics.size()) +
          " metrics.</p>\n";

  body += "<h2>Quality dimensions</h2>\n<table>\n<thead><tr><th scope=\"col\">Dimension</th>"
          "<th scope=\"col\">Group</th></tr></thead>\n<tbody>\n";
  for (auto d : kAllDimensions) {
    body += "<tr><th scope=\"row\">" + std::string(to_string(d)) + "</th><td class=\"label\">" +
            std::string(to_string(group_of(d))) + "</td></tr>\n";
  }
  body += "</tbody>\n</table>\n";

  const auto counts = section_counts(catalog);
  body += "<h2>Sections</h2>\n<table>\n<thead><tr><th scope=\"col\">Section</th>"
          "<th scope=\"col\">Template</th><th scope=\"col\">Metrics</th></tr></thead>\n<tbody>\n";
  for (auto s : kAllSections) {
    const auto span = template_span(s);
    body += "<tr><th scope=\"row\">" + html_escape(display_name(s)) + "</th><td class=\"label\">" +
            (span.empty() ? std::string("-") : html_escape(span)) + "</td><td>" + std::to_string(counts.at(s)) +
            "</td></tr>\n";
  }
  body += "</tbody>\n</table>\n";

  body += "<h2>Scoring</h2>\n<ul>\n"
          "<li>Verdicts: Sufficient = 1, PartiallySufficient = 0.5, Insufficient = 0; NotApplicable is not scored.</li>\n"
          "<li>Each metric contributes verdict &times; weight; a score is achieved weight divided by the "
          "total weight of applicable metrics, as a percentage.</li>\n"
          "<li>Metrics behind a gate question count only when the gate answer enables them.</li>\n"
          "<li>N/A marks a cell, section or group with no applicable metric.</li>\n</ul>\n";

  body += "<h2>Grades</h2>\n<table>\n<thead><tr><th scope=\"col\">Grade</th><th scope=\"col\">Minimum</th>"
          "</tr></thead>\n<tbody>\n";
  const GradeScale scale = GradeScale::standard();
  for (const auto& band : scale.bands()) {
    body += "<tr><th scope=\"row\">" + html_escape(band.letter) + "</th><td>" + format_fixed2(band.min_pct) +
            "%</td></tr>\n";
  }
  body += "</tbody>\n</table>\n</main>\n";
  return body;
}

}  // namespace

SitePlan build_site(const Registry& registry, const std::vector<ScoreCard>& cards,
                    const fs::path& output_root, const SiteConfig& config) {
  std::vector<const RegistryEntry*> entries;
  std::set<std::string> slugs;
  for (const auto& card : cards) {
    const auto& entry = match_entry(registry, card);
    if (!slugs.insert(entry.id).second) {
      throw UnmatchedScoreCard("two score cards map to registry entry '" + entry.id + "'", entry.id);
    }
    entries.push_back(&entry);
  }
  if (!cards.empty()) render_comparison(cards, ReportFormat::StructuredData);  // catalog check

  SitePlan plan;
  plan.output_root = output_root;
  const auto emit = [&](const fs::path& rel, std::string_view contents) {
    text::write_file_atomic(output_root / rel, contents);
  };

  emit("style.css", html::stylesheet());
  emit("index.html", page(config.title, config.description, "", index_body(config, cards, entries)));
  plan.pages.push_back({"/", PageKind::Index, "", "index.html"});

  for (std::size_t i = 0; i < cards.size(); ++i) {
    const auto& card = cards[i];
    const auto& entry = *entries[i];
    std::optional<std::string> archive_href;
    if (entry.archived && config.storage_root) {
      const fs::path source = *config.storage_root / entry.archived->storage_path;
      const fs::path rel = fs::path("archive") / entry.archived->storage_path;
      std::string bytes;
      try {
        bytes = text::read_file(source);
      } catch (const Error& e) {
        throw WriteFailed("cannot read archived object to publish", source.string());
      }
      emit(rel, bytes);
      plan.archive_copies.push_back(rel);
      archive_href = "../../" + rel.generic_string();
    }
    const std::string title = card.meta.provider + " " + card.meta.model + " public summary assessment";
    const std::string description = "Transparency " + format_score(card.overall.at(Group::Transparency)) +
                                    "% (" + card.grades.at(Group::Transparency) + "), usefulness " +
                                    format_score(card.overall.at(Group::Usefulness)) + "% (" +
                                    card.grades.at(Group::Usefulness) + ").";
    const fs::path file = detail_file(entry.id);
    emit(file, page(title, description, "../../", detail_body(config, card, entry, archive_href)));
    plan.pages.push_back({"/summaries/" + entry.id + "/", PageKind::SummaryDetail, entry.id, file});

    const fs::path data = fs::path("summaries") / entry.id / "scorecard.json";
    emit(data, render_scorecard(card, ReportFormat::StructuredData));
    plan.data_exports.push_back(data);
  }

  if (config.methodology_catalog) {
    emit("methodology/index.html",
         page("Methodology", "How public summaries are scored.", "../", methodology_body(config)));
    plan.pages.push_back({"/methodology/", PageKind::Methodology, "", "methodology/index.html"});
  }
  return plan;
}

std::vector<Finding> check_links(const fs::path& site_root) {
  const fs::path output_root = fs::absolute(site_root).lexically_normal();
  std::vector<fs::path> pages;
  for (const auto& item : fs::recursive_directory_iterator(output_root)) {
    if (item.is_regular_file() && item.path().extension() == ".html") pages.push_back(item.path());
  }
  std::sort(pages.begin(), pages.end());

  static const std::regex kLink(R"re((?:href|src)="([^"]*)")re");
  std::vector<Finding> findings;
  for (const auto& page_path : pages) {
    const std::string html = text::read_file(page_path);
    const std::string page_rel = fs::relative(page_path, output_root).generic_string();
    std::set<std::string> reported;
    for (auto it = std::sregex_iterator(html.begin(), html.end(), kLink); it != std::sregex_iterator(); ++it) {
      std::string target = (*it)[1].str();
      if (target.empty() || target.front() == '#' || target.find("://") != std::string::npos ||
          text::starts_with(target, "mailto:")) {
        continue;
      }
      target = target.substr(0, target.find_first_of("?#"));
      if (target.empty()) continue;
      fs::path resolved = (page_path.parent_path() / target).lexically_normal();
      if (target.back() == '/' || fs::is_directory(resolved)) resolved /= "index.html";
      const auto rel = resolved.lexically_relative(output_root);
      const bool escapes = rel.empty() || *rel.begin() == "..";
      if ((escapes || !fs::is_regular_file(resolved)) && reported.insert((*it)[1].str()).second) {
        findings.push_back({"BrokenLink", page_rel, "unresolved link '" + (*it)[1].str() + "'"});
      }
    }
  }
  return findings;
}

}  // namespace gpaiqa
