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

#ifndef MW_CORE_TEXT_H_
#define MW_CORE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace mw {

// Number of Unicode scalar values in a UTF-8 string. Invalid bytes count as
// one each.
std::size_t Utf8Length(std::string_view text);

std::string_view TrimWhitespace(std::string_view text);

std::string HtmlEscape(std::string_view text);

}  // namespace mw

#endif  // MW_CORE_TEXT_H_
