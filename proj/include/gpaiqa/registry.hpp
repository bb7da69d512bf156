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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpaiqa/assessment.hpp"
#include "gpaiqa/calendar.hpp"
#include "gpaiqa/errors.hpp"

namespace gpaiqa {

enum class DiscoveryChannel {
  SearchEngine,
  ModelRepoPage,
  LegalCompliancePage,
  TechnicalReport,
  Index,
  Referral,
};

std::string_view to_string(DiscoveryChannel c);
std::optional<DiscoveryChannel> parse_discovery_channel(std::string_view text);

struct DiscoveryProvenance {
  DiscoveryChannel channel = DiscoveryChannel::SearchEngine;
  std::string query_or_path;
  Date discovered_on{};

  bool operator==(const DiscoveryProvenance&) const = default;
};

struct ArchivedCopy {
  Timestamp fetched_at{};
  std::string content_digest;  // "sha256:<hex>"
  std::string media_type;
  std::uint64_t byte_length = 0;
  std::string storage_path;  // relative to the storage root

  bool operator==(const ArchivedCopy&) const = default;
};

struct RegistryEntry {
  std::string id;  // slug
  SummaryMeta meta;
  DiscoveryProvenance discovery;
  std::optional<ArchivedCopy> archived;
  std::vector<std::string> assessment_refs;

  bool operator==(const RegistryEntry&) const = default;
};

struct Registry {
  std::vector<RegistryEntry> entries;  // insertion order

  const RegistryEntry* find(std::string_view slug) const;
  bool operator==(const Registry&) const = default;
};

/// Appends the entry. Throws DuplicateSlug.
void add_entry(Registry& registry, RegistryEntry entry);
/// Loads the file (empty registry if absent), appends, and rewrites it.
void add_entry(const std::filesystem::path& registry_file, RegistryEntry entry);

/// Throws MalformedRegistry with a line locus.
Registry load_registry(std::istream& in);
Registry load_registry_file(const std::filesystem::path& path);
std::string serialize_registry(const Registry& registry);
void save_registry(const std::filesystem::path& path, const Registry& registry);

/// Slug syntax, slug uniqueness, URL shape and digest binding.
std::vector<Finding> validate_registry(const Registry& registry);

/// http(s)://host[...] or file:///path.
bool is_well_formed_url(std::string_view url);
bool is_valid_slug(std::string_view slug);

/// "objects/<first-2-hex>/<hex>" for a "sha256:<hex>" digest.
std::string object_path_for(std::string_view digest);

struct FetchOptions {
  std::chrono::seconds timeout{30};
  /// Recorded as fetched_at; defaults to now (or SOURCE_DATE_EPOCH).
  std::optional<Timestamp> fetched_at;
};

/// Stores the bytes behind `url` (http, https, file:// or a plain local
/// path) in the content-addressed store under `storage_root`. Existing
/// objects are never overwritten. Throws FetchFailed or StorageFailed.
ArchivedCopy archive_fetch(const std::string& url, const std::filesystem::path& storage_root,
                           const FetchOptions& options = {});

/// MissingObject / DigestMismatch / LengthMismatch findings for every
/// archived entry whose stored object disagrees with the registry.
std::vector<Finding> verify_archive(const Registry& registry,
                                    const std::filesystem::path& storage_root);

}  // namespace gpaiqa
