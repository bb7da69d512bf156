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
#include <optional>
#include <string>
#include <string_view>

namespace gpaiqa {

using Date = std::chrono::year_month_day;
using Timestamp = std::chrono::sys_seconds;

/// Strict ISO-8601 calendar date, "YYYY-MM-DD".
std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date& date);

/// "YYYY-MM-DDTHH:MM:SSZ" (UTC only).
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp ts);

/// Current UTC time, or SOURCE_DATE_EPOCH when that variable is set and valid.
Timestamp now_or_source_date_epoch();
Date today_utc();

}  // namespace gpaiqa
