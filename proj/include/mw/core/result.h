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

#ifndef MW_CORE_RESULT_H_
#define MW_CORE_RESULT_H_

#include <optional>
#include <utility>
#include <variant>

#include "mw/core/diagnostic.h"

namespace mw {

// Output of a frontend or checking stage: a value when no error was found,
// plus every diagnostic (warnings may accompany a value).
template <typename T>
struct ParseResult {
  std::optional<T> value;
  Diagnostics diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }
};

// Value or a single diagnostic. Runtime operations fail fast with one code.
template <typename T>
class Expected {
 public:
  Expected(T value) : data_(std::move(value)) {}              // NOLINT
  Expected(Diagnostic error) : data_(std::move(error)) {}     // NOLINT

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<T>(data_); }
  const T& value() const { return std::get<T>(data_); }
  T& operator*() { return value(); }
  const T& operator*() const { return value(); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }

  const Diagnostic& error() const { return std::get<Diagnostic>(data_); }

 private:
  std::variant<T, Diagnostic> data_;
};

struct Unit {
  bool operator==(const Unit&) const = default;
};

}  // namespace mw

#endif  // MW_CORE_RESULT_H_
