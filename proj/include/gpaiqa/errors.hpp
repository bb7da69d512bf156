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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpaiqa {

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable name; `locus()` points at the offending input
/// (file line, field, metric id or slug) and may be empty.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string locus = {})
      : std::runtime_error(locus.empty() ? message : locus + ": " + message),
        code_(std::move(code)),
        locus_(std::move(locus)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string code_;
  std::string locus_;
};

#define GPAIQA_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message, std::string locus = {})  \
        : Error(#Name, message, std::move(locus)) {}                   \
  }

// catalog
GPAIQA_DEFINE_ERROR(MalformedCatalog);
GPAIQA_DEFINE_ERROR(SchemaViolation);
// assessment
GPAIQA_DEFINE_ERROR(MalformedAssessment);
GPAIQA_DEFINE_ERROR(UnknownMetricId);
GPAIQA_DEFINE_ERROR(CatalogMismatch);
GPAIQA_DEFINE_ERROR(GateUnanswered);
// scoring
GPAIQA_DEFINE_ERROR(InapplicableVerdict);
GPAIQA_DEFINE_ERROR(InvalidGradeScale);
// reporting
GPAIQA_DEFINE_ERROR(UnsupportedFormat);
GPAIQA_DEFINE_ERROR(CatalogVersionMismatch);
GPAIQA_DEFINE_ERROR(MalformedScoreCard);
// registry / archive
GPAIQA_DEFINE_ERROR(MalformedRegistry);
GPAIQA_DEFINE_ERROR(DuplicateSlug);
GPAIQA_DEFINE_ERROR(FetchFailed);
GPAIQA_DEFINE_ERROR(StorageFailed);
// site
GPAIQA_DEFINE_ERROR(UnmatchedScoreCard);
GPAIQA_DEFINE_ERROR(WriteFailed);
// cli
GPAIQA_DEFINE_ERROR(NoScoreCards);
GPAIQA_DEFINE_ERROR(InvalidConfig);

#undef GPAIQA_DEFINE_ERROR

/// Raised when an applicable metric has no verdict. Carries every
/// uncovered id, in catalog order.
class MissingVerdict : public Error {
 public:
  explicit MissingVerdict(std::vector<std::string> metric_ids)
      : Error("MissingVerdict", describe(metric_ids)),
        metric_ids_(std::move(metric_ids)) {}

  const std::vector<std::string>& metric_ids() const noexcept { return metric_ids_; }

 private:
  static std::string describe(const std::vector<std::string>& ids) {
    std::string text = "no verdict for applicable metric(s):";
    for (const auto& id : ids) text += " " + id;
    return text;
  }

  std::vector<std::string> metric_ids_;
};

/// A validation finding. Findings are data: validators return them
/// instead of throwing so that one run can report every problem.
struct Finding {
  std::string code;
  std::string locus;
  std::string message;

  bool operator==(const Finding&) const = default;
};

inline Finding finding_from(const Error& e) {
  std::string message = e.what();
  if (!e.locus().empty() && message.rfind(e.locus() + ": ", 0) == 0) {
    message.erase(0, e.locus().size() + 2);
  }
  return Finding{e.code(), e.locus(), std::move(message)};
}

}  // namespace gpaiqa
