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

#include "gpaiqa/registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "gpaiqa/digest.hpp"
#include "gpaiqa/record_file.hpp"
#include "gpaiqa/text.hpp"

namespace gpaiqa {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kRegistryFormat = "gpaiqa-registry/1";

constexpr std::array<std::string_view, 6> kChannelNames = {
    "SearchEngine", "ModelRepoPage", "LegalCompliancePage", "TechnicalReport", "Index", "Referral",
};

constexpr std::array<std::string_view, 5> kArchivedKeys = {
    "archived_fetched_at", "archived_content_digest", "archived_media_type",
    "archived_byte_length", "archived_storage_path",
};

constexpr std::array<std::string_view, 17> kEntryKeys = {
    "id", "provider", "model", "summary_title", "source_url", "published_form",
    "assessed_version_date", "archived_copy_digest", "discovery_channel",
    "discovery_query_or_path", "discovery_discovered_on", "archived_fetched_at",
    "archived_content_digest", "archived_media_type", "archived_byte_length",
    "archived_storage_path", "assessment_ref",
};

std::string line_locus(std::size_t line, std::string_view field = {}) {
  std::string locus = "line " + std::to_string(line);
  if (!field.empty()) locus += ", field " + std::string(field);
  return locus;
}

RegistryEntry decode_entry(const records::Record& record) {
  std::set<std::string> seen;
  for (const auto& f : record.fields) {
    if (std::find(kEntryKeys.begin(), kEntryKeys.end(), f.key) == kEntryKeys.end()) {
      throw MalformedRegistry("unknown field '" + f.key + "'", line_locus(f.line, f.key));
    }
    if (f.key != "assessment_ref" && !seen.insert(f.key).second) {
      throw MalformedRegistry("duplicate field '" + f.key + "'", line_locus(f.line, f.key));
    }
  }
  const auto required = [&](std::string_view key) -> const records::Field& {
    const auto* f = record.find(key);
    if (!f) throw MalformedRegistry("missing field '" + std::string(key) + "'", line_locus(record.line, key));
    return *f;
  };
  const auto date_of = [&](std::string_view key) {
    const auto& f = required(key);
    auto d = parse_date(f.value);
    if (!d) throw MalformedRegistry("date must be YYYY-MM-DD", line_locus(f.line, key));
    return *d;
  };

  RegistryEntry e;
  e.id = required("id").value;
  e.meta.provider = required("provider").value;
  e.meta.model = required("model").value;
  e.meta.summary_title = required("summary_title").value;
  e.meta.source_url = required("source_url").value;
  const auto& form = required("published_form");
  auto parsed_form = parse_published_form(form.value);
  if (!parsed_form) throw MalformedRegistry("unknown published_form", line_locus(form.line, form.key));
  e.meta.published_form = *parsed_form;
  e.meta.assessed_version_date = date_of("assessed_version_date");
  if (const auto* d = record.find("archived_copy_digest")) e.meta.archived_copy_digest = d->value;

  const auto& channel = required("discovery_channel");
  auto parsed_channel = parse_discovery_channel(channel.value);
  if (!parsed_channel) throw MalformedRegistry("unknown discovery_channel", line_locus(channel.line, channel.key));
  e.discovery.channel = *parsed_channel;
  e.discovery.query_or_path = required("discovery_query_or_path").value;
  e.discovery.discovered_on = date_of("discovery_discovered_on");

  std::size_t archived_fields = 0;
  for (auto key : kArchivedKeys) archived_fields += record.find(key) != nullptr;
  if (archived_fields == kArchivedKeys.size()) {
    ArchivedCopy copy;
    const auto& ts = required("archived_fetched_at");
    auto parsed_ts = parse_timestamp(ts.value);
    if (!parsed_ts) throw MalformedRegistry("timestamp must be YYYY-MM-DDTHH:MM:SSZ", line_locus(ts.line, ts.key));
    copy.fetched_at = *parsed_ts;
    copy.content_digest = required("archived_content_digest").value;
    copy.media_type = required("archived_media_type").value;
    const auto& length = required("archived_byte_length");
    try {
      std::size_t used = 0;
      copy.byte_length = std::stoull(length.value, &used);
      if (used != length.value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw MalformedRegistry("byte length must be a non-negative integer", line_locus(length.line, length.key));
    }
    copy.storage_path = required("archived_storage_path").value;
    e.archived = std::move(copy);
  } else if (archived_fields != 0) {
    throw MalformedRegistry("archived_* fields must be given together", line_locus(record.line));
  }
  for (const auto& f : record.fields) {
    if (f.key == "assessment_ref") e.assessment_refs.push_back(f.value);
  }
  return e;
}

std::string guess_media_type(const fs::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".pdf") return "application/pdf";
  if (ext == ".html" || ext == ".htm") return "text/html";
  if (ext == ".md") return "text/markdown";
  if (ext == ".txt") return "text/plain";
  if (ext == ".json") return "application/json";
  return "application/octet-stream";
}

struct Fetched {
  std::string bytes;
  std::string media_type;
};

Fetched fetch_local(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FetchFailed("cannot open local file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FetchFailed("read error", path.string());
  return {std::move(buffer).str(), guess_media_type(path)};
}

Fetched fetch_http(const std::string& url, const FetchOptions& options) {
  const auto scheme_end = url.find("://");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string target = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  if (!client.is_valid()) throw FetchFailed("unsupported URL", url);
  const auto timeout = static_cast<time_t>(options.timeout.count());
  client.set_connection_timeout(timeout, 0);
  client.set_read_timeout(timeout, 0);
  client.set_follow_location(true);
  auto result = client.Get(target);
  if (!result) throw FetchFailed(httplib::to_string(result.error()), url);
  if (result->status != 200) {
    throw FetchFailed("HTTP status " + std::to_string(result->status), url);
  }
  std::string media = result->get_header_value("Content-Type");
  if (media.empty()) media = "application/octet-stream";
  return {std::move(result->body), std::move(media)};
}

}  // namespace

std::string_view to_string(DiscoveryChannel c) { return kChannelNames[static_cast<std::size_t>(c)]; }

std::optional<DiscoveryChannel> parse_discovery_channel(std::string_view text) {
  for (std::size_t i = 0; i < kChannelNames.size(); ++i) {
    if (kChannelNames[i] == text) return static_cast<DiscoveryChannel>(i);
  }
  return std::nullopt;
}

const RegistryEntry* Registry::find(std::string_view slug) const {
  for (const auto& e : entries) {
    if (e.id == slug) return &e;
  }
  return nullptr;
}

void add_entry(Registry& registry, RegistryEntry entry) {
  if (registry.find(entry.id)) throw DuplicateSlug("slug already registered", entry.id);
  registry.entries.push_back(std::move(entry));
}

void add_entry(const fs::path& registry_file, RegistryEntry entry) {
  Registry registry = fs::exists(registry_file) ? load_registry_file(registry_file) : Registry{};
  add_entry(registry, std::move(entry));
  save_registry(registry_file, registry);
}

Registry load_registry(std::istream& in) {
  records::Document doc;
  try {
    doc = records::parse(in);
  } catch (const records::SyntaxError& e) {
    throw MalformedRegistry(e.message, line_locus(e.line));
  }
  const auto* format = doc.preamble.find("format");
  if (!format || format->value != kRegistryFormat || doc.preamble.fields.size() != 1) {
    throw MalformedRegistry("preamble must be exactly 'format = " + std::string(kRegistryFormat) + "'",
                            line_locus(1));
  }
  Registry registry;
  for (const auto& record : doc.records) {
    if (record.kind != "entry") {
      throw MalformedRegistry("unknown record kind '" + record.kind + "'", line_locus(record.line));
    }
    registry.entries.push_back(decode_entry(record));
  }
  return registry;
}

Registry load_registry_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedRegistry("cannot open registry file", path.string());
  try {
    return load_registry(in);
  } catch (const MalformedRegistry& e) {
    throw MalformedRegistry(e.what(), path.string());
  }
}

std::string serialize_registry(const Registry& registry) {
  records::Writer w;
  w.field("format", kRegistryFormat);
  for (const auto& e : registry.entries) {
    w.begin("entry");
    w.field("id", e.id);
    w.field("provider", e.meta.provider);
    w.field("model", e.meta.model);
    w.field("summary_title", e.meta.summary_title);
    w.field("source_url", e.meta.source_url);
    w.field("published_form", to_string(e.meta.published_form));
    w.field("assessed_version_date", format_date(e.meta.assessed_version_date));
    if (e.meta.archived_copy_digest) w.field("archived_copy_digest", *e.meta.archived_copy_digest);
    w.field("discovery_channel", to_string(e.discovery.channel));
    w.field("discovery_query_or_path", e.discovery.query_or_path);
    w.field("discovery_discovered_on", format_date(e.discovery.discovered_on));
    if (e.archived) {
      w.field("archived_fetched_at", format_timestamp(e.archived->fetched_at));
      w.field("archived_content_digest", e.archived->content_digest);
      w.field("archived_media_type", e.archived->media_type);
      w.field("archived_byte_length", std::to_string(e.archived->byte_length));
      w.field("archived_storage_path", e.archived->storage_path);
    }
    for (const auto& ref : e.assessment_refs) w.field("assessment_ref", ref);
  }
  return w.str();
}

void save_registry(const fs::path& path, const Registry& registry) {
  text::write_file_atomic(path, serialize_registry(registry));
}

bool is_valid_slug(std::string_view slug) {
  if (slug.empty() || slug.front() == '-' || slug.back() == '-') return false;
  for (char c : slug) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

bool is_well_formed_url(std::string_view url) {
  for (std::string_view scheme : {"https://", "http://"}) {
    if (!text::starts_with(url, scheme)) continue;
    auto rest = url.substr(scheme.size());
    auto host = rest.substr(0, rest.find_first_of("/?#"));
    if (host.empty()) return false;
    for (char c : url) {
      if (static_cast<unsigned char>(c) <= ' ') return false;
    }
    return true;
  }
  return text::starts_with(url, "file:///") && url.size() > 8;
}

std::string object_path_for(std::string_view digest) {
  std::string_view hex = digest;
  if (text::starts_with(hex, "sha256:")) hex.remove_prefix(7);
  return "objects/" + std::string(hex.substr(0, 2)) + "/" + std::string(hex);
}

std::vector<Finding> validate_registry(const Registry& registry) {
  std::vector<Finding> findings;
  std::set<std::string_view> slugs;
  for (const auto& e : registry.entries) {
    if (!is_valid_slug(e.id)) findings.push_back({"InvalidSlug", e.id, "slug must be lower-case [a-z0-9.-]"});
    if (!slugs.insert(e.id).second) findings.push_back({"DuplicateSlug", e.id, "slug registered twice"});
    if (!is_well_formed_url(e.meta.source_url)) {
      findings.push_back({"MalformedUrl", e.id, "source_url '" + e.meta.source_url + "' is not well-formed"});
    }
    if (text::trim(e.meta.provider).empty() || text::trim(e.meta.model).empty()) {
      findings.push_back({"EmptyField", e.id, "provider and model must be non-empty"});
    }
    if (e.archived) {
      if (e.meta.archived_copy_digest && *e.meta.archived_copy_digest != e.archived->content_digest) {
        findings.push_back({"DigestBindingMismatch", e.id,
                            "archived_copy_digest differs from the archived object's digest"});
      }
      if (e.archived->storage_path != object_path_for(e.archived->content_digest)) {
        findings.push_back({"StoragePathMismatch", e.id, "storage_path is not derived from the digest"});
      }
    }
  }
  return findings;
}

ArchivedCopy archive_fetch(const std::string& url, const fs::path& storage_root,
                           const FetchOptions& options) {
  Fetched fetched;
  if (text::starts_with(url, "http://") || text::starts_with(url, "https://")) {
    fetched = fetch_http(url, options);
  } else if (text::starts_with(url, "file://")) {
    fetched = fetch_local(url.substr(7));
  } else if (url.find("://") != std::string::npos) {
    throw FetchFailed("unsupported URL scheme", url);
  } else {
    fetched = fetch_local(url);
  }

  ArchivedCopy copy;
  copy.fetched_at = options.fetched_at.value_or(now_or_source_date_epoch());
  copy.content_digest = content_digest(fetched.bytes);
  copy.media_type = fetched.media_type;
  copy.byte_length = fetched.bytes.size();
  copy.storage_path = object_path_for(copy.content_digest);

  const fs::path target = storage_root / copy.storage_path;
  std::error_code ec;
  if (fs::exists(target, ec)) return copy;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw StorageFailed(ec.message(), target.parent_path().string());

  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id();
  const fs::path tmp = target.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageFailed("cannot create object", tmp.string());
    out.write(fetched.bytes.data(), static_cast<std::streamsize>(fetched.bytes.size()));
    if (!out) throw StorageFailed("short write", tmp.string());
  }
  if (fs::exists(target, ec)) {
    fs::remove(tmp, ec);
    return copy;
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw StorageFailed("cannot move object into place", target.string());
  }
  return copy;
}

std::vector<Finding> verify_archive(const Registry& registry, const fs::path& storage_root) {
  std::vector<Finding> findings;
  for (const auto& e : registry.entries) {
    if (!e.archived) continue;
    const fs::path object = storage_root / e.archived->storage_path;
    std::ifstream in(object, std::ios::binary);
    if (!in) {
      findings.push_back({"MissingObject", e.id, "archived object " + e.archived->storage_path + " is missing"});
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = std::move(buffer).str();
    if (content_digest(bytes) != e.archived->content_digest) {
      findings.push_back({"DigestMismatch", e.id,
                          "stored bytes of " + e.archived->storage_path + " do not match " +
                              e.archived->content_digest});
    } else if (bytes.size() != e.archived->byte_length) {
      findings.push_back({"LengthMismatch", e.id,
                          "recorded byte_length " + std::to_string(e.archived->byte_length) +
                              " but object has " + std::to_string(bytes.size())});
    }
  }
  return findings;
}

}  // namespace gpaiqa
