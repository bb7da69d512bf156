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
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "gpaiqa/digest.hpp"
#include "gpaiqa/registry.hpp"
#include "toy.hpp"

namespace gpaiqa::testing {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = data_dir() / "fixtures";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << bytes;
}

RegistryEntry sample_entry(const std::string& slug) {
  RegistryEntry e;
  e.id = slug;
  e.meta.provider = "Example Labs";
  e.meta.model = "Example " + slug;
  e.meta.summary_title = "Training content summary";
  e.meta.source_url = "https://example.org/" + slug;
  e.meta.published_form = PublishedForm::PDF;
  e.meta.assessed_version_date = *parse_date("2025-11-03");
  e.discovery = {DiscoveryChannel::SearchEngine, "example summary", *parse_date("2025-11-04")};
  return e;
}

FetchOptions fixed_time() {
  FetchOptions options;
  options.fetched_at = parse_timestamp("2026-01-01T00:00:00Z");
  options.timeout = std::chrono::seconds(2);
  return options;
}

TEST(Registry, FixtureRegistryListsFiveSummaries) {
  const auto registry = load_registry_file(kFixtures / "registry.txt");
  ASSERT_EQ(registry.entries.size(), 5u);
  std::vector<std::string> slugs;
  for (const auto& e : registry.entries) slugs.push_back(e.id);
  EXPECT_EQ(slugs, (std::vector<std::string>{"smollm3-3b", "apertus", "bielik-v3-11b-instruct", "phi-4", "bria-3.2"}));
  EXPECT_TRUE(validate_registry(registry).empty());
  EXPECT_TRUE(verify_archive(registry, kFixtures / "archive").empty());
  for (const auto& e : registry.entries) {
    ASSERT_TRUE(e.archived);
    EXPECT_EQ(e.discovery.channel, DiscoveryChannel::ModelRepoPage);
    EXPECT_EQ(e.assessment_refs, std::vector<std::string>{"assessments/" + e.id + ".tsv"});
    const auto source = read_file(kFixtures / "sources" / (e.id + ".md"));
    EXPECT_EQ(e.archived->content_digest, content_digest(source));
    EXPECT_EQ(e.meta.archived_copy_digest, e.archived->content_digest);
    EXPECT_EQ(e.archived->byte_length, source.size());
  }
}

TEST(Registry, SerializationIsCanonical) {
  const auto text = read_file(kFixtures / "registry.txt");
  const auto registry = load_registry_file(kFixtures / "registry.txt");
  EXPECT_EQ(serialize_registry(registry), text);
  std::istringstream in(serialize_registry(registry));
  EXPECT_EQ(load_registry(in), registry);
}

TEST(Registry, AddEntryRejectsDuplicateSlug) {
  Registry registry;
  add_entry(registry, sample_entry("alpha"));
  add_entry(registry, sample_entry("beta"));
  try {
    add_entry(registry, sample_entry("alpha"));
    FAIL();
  } catch (const DuplicateSlug& e) {
    EXPECT_EQ(e.locus(), "alpha");
  }
  ASSERT_EQ(registry.entries.size(), 2u);
  EXPECT_EQ(registry.entries[1].id, "beta");
  EXPECT_EQ(registry.find("beta")->meta.model, "Example beta");
  EXPECT_EQ(registry.find("gamma"), nullptr);
}

TEST(Registry, AddEntryToFile) {
  TempDir dir;
  const auto file = dir.path() / "registry.txt";
  add_entry(file, sample_entry("alpha"));
  auto second = sample_entry("beta");
  second.assessment_refs = {"a.tsv", "b.tsv"};
  add_entry(file, second);
  EXPECT_THROW(add_entry(file, sample_entry("beta")), DuplicateSlug);
  const auto registry = load_registry_file(file);
  ASSERT_EQ(registry.entries.size(), 2u);
  EXPECT_EQ(registry.entries[1], second);
}

TEST(Registry, RoundTripPreservesOddText) {
  Registry registry;
  auto e = sample_entry("odd");
  e.meta.summary_title = " leading space, tab\tand # hash \\ ";
  e.discovery.query_or_path = "line\nbreak";
  e.meta.archived_copy_digest = content_digest("x");
  add_entry(registry, e);
  std::istringstream in(serialize_registry(registry));
  EXPECT_EQ(load_registry(in), registry);
}

TEST(Registry, MalformedInput) {
  const auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_registry(in);
  };
  EXPECT_THROW(load(""), MalformedRegistry);
  EXPECT_THROW(load("format = other/1\n"), MalformedRegistry);
  EXPECT_EQ(load("format = gpaiqa-registry/1\n").entries.size(), 0u);
  auto text = serialize_registry(Registry{{sample_entry("a")}});
  EXPECT_NO_THROW(load(text));
  EXPECT_THROW(load(text + "[other]\n"), MalformedRegistry);
  EXPECT_THROW(load(text + "colour = red\n"), MalformedRegistry);
  auto bad_date = text;
  bad_date.replace(bad_date.find("2025-11-03"), 10, "2025-13-03");
  EXPECT_THROW(load(bad_date), MalformedRegistry);
  auto bad_channel = text;
  bad_channel.replace(bad_channel.find("SearchEngine"), 12, "Newspaper");
  EXPECT_THROW(load(bad_channel), MalformedRegistry);
  // Loading keeps duplicates so that validation can report them.
  const auto twice = load(text + text.substr(text.find("[entry]")));
  ASSERT_EQ(twice.entries.size(), 2u);
  ASSERT_EQ(validate_registry(twice).size(), 1u);
  EXPECT_EQ(validate_registry(twice)[0].code, "DuplicateSlug");
}

TEST(Registry, ValidateReportsEveryProblem) {
  Registry registry;
  auto bad_slug = sample_entry("Bad Slug");
  bad_slug.meta.source_url = "https://example.org/bad";
  registry.entries.push_back(bad_slug);
  auto no_url = sample_entry("no-url");
  no_url.meta.source_url = "example.org/x";
  registry.entries.push_back(no_url);
  auto blank = sample_entry("blank");
  blank.meta.provider = "  ";
  registry.entries.push_back(blank);
  auto bound = sample_entry("bound");
  bound.archived = ArchivedCopy{*parse_timestamp("2026-01-01T00:00:00Z"), content_digest("a"), "text/plain", 1,
                                object_path_for(content_digest("a"))};
  bound.meta.archived_copy_digest = content_digest("b");
  registry.entries.push_back(bound);
  auto misplaced = sample_entry("misplaced");
  misplaced.archived = bound.archived;
  misplaced.archived->storage_path = "objects/elsewhere";
  registry.entries.push_back(misplaced);
  registry.entries.push_back(sample_entry("blank"));

  std::vector<std::pair<std::string, std::string>> got;
  for (const auto& f : validate_registry(registry)) got.emplace_back(f.code, f.locus);
  EXPECT_EQ(got, (std::vector<std::pair<std::string, std::string>>{{"InvalidSlug", "Bad Slug"},
                                                                    {"MalformedUrl", "no-url"},
                                                                    {"EmptyField", "blank"},
                                                                    {"DigestBindingMismatch", "bound"},
                                                                    {"StoragePathMismatch", "misplaced"},
                                                                    {"DuplicateSlug", "blank"}}));
}

TEST(Registry, UrlAndSlugRules) {
  EXPECT_TRUE(is_well_formed_url("https://example.org"));
  EXPECT_TRUE(is_well_formed_url("http://example.org/a?b#c"));
  EXPECT_TRUE(is_well_formed_url("file:///tmp/x.pdf"));
  EXPECT_FALSE(is_well_formed_url("https://"));
  EXPECT_FALSE(is_well_formed_url("https://exa mple.org"));
  EXPECT_FALSE(is_well_formed_url("ftp://example.org"));
  EXPECT_FALSE(is_well_formed_url("file://"));
  EXPECT_TRUE(is_valid_slug("bria-3.2"));
  EXPECT_FALSE(is_valid_slug(""));
  EXPECT_FALSE(is_valid_slug("Phi-4"));
  EXPECT_FALSE(is_valid_slug("a/b"));
  EXPECT_EQ(object_path_for("sha256:abcdef"), "objects/ab/abcdef");
}

TEST(Registry, ArchiveLocalFile) {
  TempDir dir;
  const std::string bytes = "summary of training content\n";
  write_file(dir.path() / "in" / "summary.md", bytes);
  const auto storage = dir.path() / "store";
  const auto copy = archive_fetch((dir.path() / "in" / "summary.md").string(), storage, fixed_time());
  EXPECT_EQ(copy.content_digest, "sha256:" + sha256_hex(bytes));
  EXPECT_EQ(copy.byte_length, bytes.size());
  EXPECT_EQ(copy.media_type, "text/markdown");
  EXPECT_EQ(format_timestamp(copy.fetched_at), "2026-01-01T00:00:00Z");
  EXPECT_EQ(read_file(storage / copy.storage_path), bytes);

  // Same bytes through a file URL and a second name: still one object.
  write_file(dir.path() / "in" / "copy.md", bytes);
  const auto again = archive_fetch("file://" + (dir.path() / "in" / "copy.md").string(), storage, fixed_time());
  EXPECT_EQ(again, copy);
  std::size_t objects = 0;
  for (const auto& f : fs::recursive_directory_iterator(storage)) objects += f.is_regular_file();
  EXPECT_EQ(objects, 1u);
}

TEST(Registry, ArchiveFailures) {
  TempDir dir;
  EXPECT_THROW(archive_fetch((dir.path() / "absent.pdf").string(), dir.path(), fixed_time()), FetchFailed);
  EXPECT_THROW(archive_fetch("ftp://example.org/x", dir.path(), fixed_time()), FetchFailed);
  EXPECT_THROW(archive_fetch("http://127.0.0.1:1/summary.pdf", dir.path(), fixed_time()), FetchFailed);
  EXPECT_FALSE(fs::exists(dir.path() / "objects"));
}

TEST(Registry, ArchiveOverHttp) {
  httplib::Server server;
  server.Get("/summary.pdf", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("%PDF-1.4 fake", "application/pdf");
  });
  server.Get("/moved", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/summary.pdf"); });
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  TempDir dir;
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const auto copy = archive_fetch(base + "/summary.pdf", dir.path(), fixed_time());
  EXPECT_EQ(copy.content_digest, content_digest("%PDF-1.4 fake"));
  EXPECT_EQ(copy.media_type, "application/pdf");
  EXPECT_EQ(archive_fetch(base + "/moved", dir.path(), fixed_time()), copy);
  try {
    archive_fetch(base + "/missing", dir.path(), fixed_time());
    ADD_FAILURE();
  } catch (const FetchFailed& e) {
    EXPECT_NE(std::string(e.what()).find("404"), std::string::npos);
  }
  server.stop();
  worker.join();
}

TEST(Registry, VerifyDetectsCorruptionAndLoss) {
  TempDir dir;
  fs::copy(kFixtures / "archive", dir.path() / "archive", fs::copy_options::recursive);
  const auto registry = load_registry_file(kFixtures / "registry.txt");
  EXPECT_TRUE(verify_archive(registry, dir.path() / "archive").empty());

  const auto& phi = *registry.find("phi-4");
  const auto object = dir.path() / "archive" / phi.archived->storage_path;
  fs::permissions(object, fs::perms::owner_write, fs::perm_options::add);
  auto bytes = read_file(object);
  bytes[bytes.size() / 2] ^= 0x01;
  write_file(object, bytes);
  auto findings = verify_archive(registry, dir.path() / "archive");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "DigestMismatch");
  EXPECT_EQ(findings[0].locus, "phi-4");

  fs::remove(dir.path() / "archive" / registry.find("apertus")->archived->storage_path);
  findings = verify_archive(registry, dir.path() / "archive");
  ASSERT_EQ(findings.size(), 2u);
  EXPECT_EQ(findings[0].code, "MissingObject");
  EXPECT_EQ(findings[0].locus, "apertus");
  EXPECT_EQ(findings[1].code, "DigestMismatch");

  auto altered = registry;
  altered.entries[0].archived->byte_length += 1;
  findings = verify_archive(altered, kFixtures / "archive");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "LengthMismatch");
}

TEST(Registry, ConcurrentArchivingStoresOneObject) {
  TempDir dir;
  write_file(dir.path() / "in.txt", std::string(100000, 'q'));
  std::vector<std::thread> threads;
  std::vector<ArchivedCopy> copies(8);
  for (std::size_t i = 0; i < copies.size(); ++i) {
    threads.emplace_back([&, i] { copies[i] = archive_fetch((dir.path() / "in.txt").string(), dir.path() / "s", fixed_time()); });
  }
  for (auto& t : threads) t.join();
  for (const auto& c : copies) EXPECT_EQ(c, copies[0]);
  std::size_t files = 0;
  for (const auto& f : fs::recursive_directory_iterator(dir.path() / "s")) files += f.is_regular_file();
  EXPECT_EQ(files, 1u);
}

}  // namespace
}  // namespace gpaiqa::testing
