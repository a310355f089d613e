// Copyright 2026 The MontiWeb Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MW_CORE_DATE_H_
#define MW_CORE_DATE_H_

#include <optional>
#include <string>
#include <string_view>

namespace mw {

struct CalendarDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const CalendarDate&) const = default;
  std::string ToIso() const;
};

// Accepts exactly `YYYY-MM-DD` naming a real proleptic Gregorian date.
std::optional<CalendarDate> ParseIsoDate(std::string_view text);

}  // namespace mw

#endif  // MW_CORE_DATE_H_
