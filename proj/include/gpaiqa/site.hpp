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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpaiqa/catalog.hpp"
#include "gpaiqa/errors.hpp"
#include "gpaiqa/registry.hpp"
#include "gpaiqa/reporting.hpp"
#include "gpaiqa/scoring.hpp"

namespace gpaiqa {

enum class PageKind { Index, SummaryDetail, Methodology };

struct PagePlan {
  std::string route;            // "/", "/summaries/<slug>/", "/methodology/"
  PageKind kind = PageKind::Index;
  std::string slug;             // SummaryDetail only
  std::filesystem::path file;   // relative to the output root
};

struct SitePlan {
  std::filesystem::path output_root;
  std::vector<PagePlan> pages;
  std::vector<std::filesystem::path> data_exports;    // per-summary scorecard.json
  std::vector<std::filesystem::path> archive_copies;  // mirrored archived objects
};

struct SiteConfig {
  std::string title = "Public summaries of training content: quality assessments";
  std::string description =
      "Transparency and usefulness scores for published summaries of GPAI training content.";
  std::vector<SeverityBand> severity = default_severity_bands();
  /// When set, a methodology page describing this catalog is emitted.
  const Catalog* methodology_catalog = nullptr;
  /// When set, archived objects are copied into the site for traceability.
  std::optional<std::filesystem::path> storage_root;
  /// Extra (label, url) pairs listed under "Resources" on the index.
  std::vector<std::pair<std::string, std::string>> resources;
};

/// Writes the static site under `output_root` and returns what was
/// emitted. Each card must match a registry entry on (provider, model);
/// otherwise UnmatchedScoreCard. File writes are atomic; WriteFailed on
/// I/O errors. Output is byte-identical for identical inputs.
SitePlan build_site(const Registry& registry, const std::vector<ScoreCard>& cards,
                    const std::filesystem::path& output_root, const SiteConfig& config = {});

/// One BrokenLink finding per internal href/src that does not resolve to
/// a file under `output_root`. External (scheme-qualified) and
/// fragment-only links are ignored.
std::vector<Finding> check_links(const std::filesystem::path& output_root);

}  // namespace gpaiqa
