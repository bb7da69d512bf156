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

#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "gpaiqa/site.hpp"
#include "gpaiqa/text.hpp"
#include "toy.hpp"

namespace gpaiqa::testing {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = data_dir() / "fixtures";
const std::vector<std::string> kSlugs = {"smollm3-3b", "apertus", "bielik-v3-11b-instruct", "phi-4", "bria-3.2"};

struct Inputs {
  Catalog catalog = load_catalog_file(data_dir() / "reference-catalog.txt");
  Registry registry = load_registry_file(kFixtures / "registry.txt");
  std::vector<ScoreCard> cards;

  Inputs() {
    for (const auto& slug : kSlugs) {
      const auto a = load_assessment_file(kFixtures / "assessments" / (slug + ".tsv"), catalog, test_today());
      cards.push_back(score_summary(catalog, a, AggregationConfig{}, test_today()));
    }
  }
};

const Inputs& inputs() {
  static const Inputs in;
  return in;
}

std::string read(const fs::path& p) { return text::read_file(p); }

TEST(Site, FivePagesAndExports) {
  TempDir dir;
  const auto plan = build_site(inputs().registry, inputs().cards, dir.path());
  ASSERT_EQ(plan.pages.size(), 6u);
  EXPECT_EQ(plan.pages[0].route, "/");
  EXPECT_EQ(plan.pages[0].kind, PageKind::Index);
  for (std::size_t i = 0; i < kSlugs.size(); ++i) {
    const auto& p = plan.pages[i + 1];
    EXPECT_EQ(p.kind, PageKind::SummaryDetail);
    EXPECT_EQ(p.slug, kSlugs[i]);
    EXPECT_EQ(p.route, "/summaries/" + kSlugs[i] + "/");
    EXPECT_TRUE(fs::is_regular_file(dir.path() / p.file));
  }
  ASSERT_EQ(plan.data_exports.size(), 5u);
  for (std::size_t i = 0; i < kSlugs.size(); ++i) {
    EXPECT_EQ(parse_scorecard(read(dir.path() / plan.data_exports[i])), inputs().cards[i]);
  }
  EXPECT_TRUE(plan.archive_copies.empty());
  EXPECT_FALSE(fs::exists(dir.path() / "methodology"));
  EXPECT_TRUE(check_links(dir.path()).empty());
}

TEST(Site, IndexLinksEveryDetailPage) {
  TempDir dir;
  build_site(inputs().registry, inputs().cards, dir.path());
  const auto index = read(dir.path() / "index.html");
  for (const auto& slug : kSlugs) {
    EXPECT_NE(index.find("href=\"summaries/" + slug + "/index.html\""), std::string::npos) << slug;
  }
  for (const auto& card : inputs().cards) {
    EXPECT_NE(index.find(format_score(card.overall.at(Group::Transparency))), std::string::npos);
    EXPECT_NE(index.find(format_score(card.overall.at(Group::Usefulness))), std::string::npos);
  }
  EXPECT_NE(index.find("<title>"), std::string::npos);
  EXPECT_NE(index.find("name=\"description\""), std::string::npos);
}

TEST(Site, DetailPageCarriesTheFullCard) {
  TempDir dir;
  SiteConfig config;
  config.storage_root = kFixtures / "archive";
  const auto plan = build_site(inputs().registry, inputs().cards, dir.path(), config);
  const auto& card = inputs().cards[3];
  const auto html = read(dir.path() / "summaries" / "phi-4" / "index.html");
  for (const auto& [k, v] : card.per_cell) EXPECT_NE(html.find(format_score(v)), std::string::npos);
  for (const auto& [k, v] : card.per_section_group) EXPECT_NE(html.find(format_score(v)), std::string::npos);
  EXPECT_NE(html.find(text::html_escape(card.meta.source_url)), std::string::npos);
  const auto& entry = *inputs().registry.find("phi-4");
  EXPECT_NE(html.find(entry.archived->content_digest), std::string::npos);
  ASSERT_EQ(plan.archive_copies.size(), 5u);
  EXPECT_EQ(read(dir.path() / "archive" / entry.archived->storage_path),
            read(kFixtures / "archive" / entry.archived->storage_path));
  EXPECT_TRUE(check_links(dir.path()).empty());
}

TEST(Site, MethodologyPage) {
  TempDir dir;
  SiteConfig config;
  config.methodology_catalog = &inputs().catalog;
  const auto plan = build_site(inputs().registry, inputs().cards, dir.path(), config);
  ASSERT_EQ(plan.pages.size(), 7u);
  EXPECT_EQ(plan.pages.back().kind, PageKind::Methodology);
  const auto html = read(dir.path() / "methodology" / "index.html");
  EXPECT_NE(html.find("A+"), std::string::npos);
  EXPECT_NE(html.find("242"), std::string::npos);
  EXPECT_NE(read(dir.path() / "index.html").find("methodology/index.html"), std::string::npos);
  EXPECT_TRUE(check_links(dir.path()).empty());
}

TEST(Site, NoCardsGivesIndexOnly) {
  TempDir dir;
  const auto plan = build_site(inputs().registry, {}, dir.path());
  ASSERT_EQ(plan.pages.size(), 1u);
  EXPECT_TRUE(plan.data_exports.empty());
  EXPECT_TRUE(fs::is_regular_file(dir.path() / "index.html"));
  EXPECT_FALSE(fs::exists(dir.path() / "summaries"));
  EXPECT_TRUE(check_links(dir.path()).empty());
}

TEST(Site, UnmatchedCardsRejected) {
  TempDir dir;
  auto cards = inputs().cards;
  cards[1].meta.model = "Unlisted";
  try {
    build_site(inputs().registry, cards, dir.path());
    FAIL();
  } catch (const UnmatchedScoreCard& e) {
    EXPECT_EQ(e.locus(), "Unlisted");
  }
  cards = inputs().cards;
  cards.push_back(cards[0]);
  EXPECT_THROW(build_site(inputs().registry, cards, dir.path()), UnmatchedScoreCard);
  cards = inputs().cards;
  cards[2].catalog_ref.version = "9";
  EXPECT_THROW(build_site(inputs().registry, cards, dir.path()), CatalogVersionMismatch);
}

TEST(Site, CheckLinksFindsRemovedPage) {
  TempDir dir;
  build_site(inputs().registry, inputs().cards, dir.path());
  fs::remove(dir.path() / "summaries" / "apertus" / "index.html");
  const auto findings = check_links(dir.path());
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "BrokenLink");
  EXPECT_EQ(findings[0].locus, "index.html");
  EXPECT_NE(findings[0].message.find("summaries/apertus/index.html"), std::string::npos);
}

TEST(Site, CheckLinksRules) {
  TempDir dir;
  const auto write = [&](const fs::path& rel, const std::string& body) {
    text::write_file_atomic(dir.path() / rel, body);
  };
  write("index.html",
        "<a href=\"https://example.org/x\"></a><a href=\"#top\"></a><a href=\"mailto:a@b\"></a>"
        "<a href=\"a/\"></a><a href=\"a/page.html?x=1#y\"></a><a href=\"?q\"></a><img src=\"pic.png\">"
        "<a href=\"../outside.html\"></a><a href=\"a/missing.html\"></a>");
  write("a/index.html", "<a href=\"../index.html\"></a><a href=\"..\"></a>");
  write("a/page.html", "");
  write("pic.png", "");
  const auto findings = check_links(dir.path());
  ASSERT_EQ(findings.size(), 2u);
  EXPECT_NE(findings[0].message.find("../outside.html"), std::string::npos);
  EXPECT_NE(findings[1].message.find("a/missing.html"), std::string::npos);
}

TEST(Site, BuildsAreReproducible) {
  TempDir a, b;
  SiteConfig config;
  config.methodology_catalog = &inputs().catalog;
  config.storage_root = kFixtures / "archive";
  config.resources = {{"Source repository", "https://example.org/repo"}};
  build_site(inputs().registry, inputs().cards, a.path(), config);
  build_site(inputs().registry, inputs().cards, b.path(), config);
  const auto snap = snapshot_tree(a.path());
  EXPECT_EQ(snap, snapshot_tree(b.path()));
  EXPECT_GE(snap.size(), 1u + 1u + 5u + 5u + 5u + 1u);
  // Rebuilding in place changes nothing.
  build_site(inputs().registry, inputs().cards, a.path(), config);
  EXPECT_EQ(snapshot_tree(a.path()), snap);
}

TEST(Site, ResourcesListedOnIndex) {
  TempDir dir;
  SiteConfig config;
  config.resources = {{"Template & guidance", "https://example.org/t?a=1&b=2"}};
  build_site(inputs().registry, inputs().cards, dir.path(), config);
  const auto index = read(dir.path() / "index.html");
  EXPECT_NE(index.find("Template &amp; guidance"), std::string::npos);
  EXPECT_NE(index.find("https://example.org/t?a=1&amp;b=2"), std::string::npos);
}

}  // namespace
}  // namespace gpaiqa::testing
