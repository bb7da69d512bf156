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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpaiqa/reporting.hpp"
#include "gpaiqa/scoring.hpp"

namespace gpaiqa::cli {

struct RunConfig {
  std::filesystem::path catalog_path = "catalog.txt";
  std::filesystem::path assessments_dir = "assessments";
  std::filesystem::path registry_path = "registry.txt";
  std::filesystem::path storage_root = "archive";
  std::filesystem::path output_dir = "out";
  AggregationConfig aggregation;
  std::vector<SeverityBand> severity = default_severity_bands();
  ReportFormat format = ReportFormat::StructuredData;
};

/// "pooled", "mean", or "<SectionGroupStrategy>,<OverallStrategy>".
void apply_aggregation(AggregationConfig& config, std::string_view text);

/// Reads a config file (record syntax, preamble keys only) on top of
/// `base`. Relative paths resolve against the config file's directory.
/// Throws InvalidConfig.
RunConfig load_run_config(const std::filesystem::path& path, RunConfig base = {});

/// Entry point behind the `gpaiqa` binary. Data goes to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 success,
/// 1 findings or errors, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpaiqa::cli
