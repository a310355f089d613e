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

#ifndef MW_RUNTIME_STORE_H_
#define MW_RUNTIME_STORE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mw/core/result.h"
#include "mw/linker/symbols.h"
#include "mw/runtime/value.h"

namespace mw::rt {

using FieldValues = std::map<std::string, Value>;

// Values for an object and the parts it owns, keyed by composition role.
struct ObjectSpec {
  FieldValues fields;
  std::map<std::string, std::vector<ObjectSpec>> children;
};

struct Object {
  std::string class_name;
  FieldValues fields;  // every attribute and navigable role of the class
};

struct Ownership {
  ObjectId parent;
  std::string role;
};

// Typed in-memory objects. Composition parts live and die with their owner;
// no operation leaves a reference to a missing object behind.
//
// The store keeps a pointer to `table`, which must outlive it.
class ObjectStore {
 public:
  explicit ObjectStore(const link::SymbolTable& table) : table_(&table) {}

  // Creates the object and, in the same step, every part listed in
  // spec.children. Nothing is inserted on failure.
  // MW502: unknown class, attribute or role, or a value of the wrong type.
  // MW501: a composition role's part count is outside its cardinality.
  Expected<ObjectId> Create(std::string_view class_name, const ObjectSpec& spec);

  // Removes `id` and everything it transitively owns, then clears references
  // to the removed objects. MW502 for an unknown id.
  Expected<std::set<ObjectId>> Delete(ObjectId id);

  // Sets an association role. Roles with max 1 are replaced; list roles have
  // set semantics and may not grow past max (MW501). MW502 for a class
  // mismatch, an unknown role, or a composition role.
  Expected<Unit> Link(ObjectId source, std::string_view role, ObjectId target);

  // Overwrites base and enum attributes in place.
  Expected<Unit> Update(ObjectId id, const FieldValues& fields);

  const Object* Find(ObjectId id) const;
  std::optional<Ownership> OwnerOf(ObjectId id) const;
  std::vector<ObjectId> PartsOf(ObjectId id) const;
  std::vector<ObjectId> Ids() const;
  std::size_t size() const { return objects_.size(); }
  const link::SymbolTable& table() const { return *table_; }

  // First MWString attribute value, else the object id.
  std::string Label(ObjectId id) const;

  // Empty when every invariant holds; otherwise one line per violation.
  std::vector<std::string> CheckInvariants() const;

  // {"id", "class", "fields"} with fields keyed by name.
  nlohmann::json Snapshot(ObjectId id) const;

 private:
  std::optional<Diagnostic> Plan(const std::string& class_name, const ObjectSpec& spec,
                                 int depth) const;
  ObjectId Insert(const std::string& class_name, const ObjectSpec& spec,
                  std::optional<Ownership> owner);
  std::optional<Diagnostic> CheckFieldValue(const link::ClassSymbol& cls,
                                            const std::string& name,
                                            const Value& value) const;

  const link::SymbolTable* table_;
  std::map<ObjectId, Object> objects_;
  std::map<ObjectId, Ownership> owners_;
  std::uint64_t next_id_ = 1;
};

}  // namespace mw::rt

#endif  // MW_RUNTIME_STORE_H_
