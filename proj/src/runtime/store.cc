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

#include "mw/runtime/store.h"

#include <algorithm>
#include <deque>

namespace mw::rt {
namespace {

Diagnostic StoreError(std::string code, std::string message) {
  return Diagnostic::Error(std::move(code), std::move(message));
}

bool Contains(const Value::RefList& ids, ObjectId id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

std::optional<Diagnostic> ObjectStore::CheckFieldValue(const link::ClassSymbol& cls,
                                                       const std::string& name,
                                                       const Value& value) const {
  const link::AttributeSymbol* attr = cls.FindAttribute(name);
  if (attr == nullptr || attr->type.kind == link::TypeRef::Kind::kClass) {
    return StoreError("MW502", "class " + cls.name + " has no value attribute '" + name + "'");
  }
  if (value.is_absent()) return std::nullopt;
  const link::TypeRef& t = attr->type;
  bool ok = false;
  if (t.kind == link::TypeRef::Kind::kEnum) {
    const link::EnumSymbol* e = table_->FindEnum(t.name);
    const EnumValue* ev = value.enum_value();
    ok = e != nullptr && ev != nullptr && ev->enum_name == t.name && e->HasLiteral(ev->literal);
  } else {
    switch (t.base) {
      case link::BaseType::kString:
      case link::BaseType::kEmail: ok = value.str() != nullptr; break;
      case link::BaseType::kNumber: ok = value.num() != nullptr; break;
      case link::BaseType::kDate: ok = value.date() != nullptr; break;
    }
  }
  if (!ok) {
    return StoreError("MW502", "value for " + cls.name + "." + name + " does not have type " +
                                   t.name);
  }
  return std::nullopt;
}

std::optional<Diagnostic> ObjectStore::Plan(const std::string& class_name,
                                            const ObjectSpec& spec, int depth) const {
  const link::ClassSymbol* cls = table_->FindClass(class_name);
  if (cls == nullptr) return StoreError("MW502", "unknown class '" + class_name + "'");
  if (depth > 256) return StoreError("MW501", "composition nesting too deep");
  for (const auto& [name, value] : spec.fields) {
    if (auto err = CheckFieldValue(*cls, name, value)) return err;
  }
  for (const auto& [role_name, parts] : spec.children) {
    const link::RoleSymbol* role = cls->FindRole(role_name);
    if (role == nullptr || !role->owns_target) {
      return StoreError("MW502",
                        "class " + class_name + " has no composition role '" + role_name + "'");
    }
  }
  for (const auto& [role_name, role] : cls->roles) {
    if (!role.owns_target) continue;
    auto it = spec.children.find(role_name);
    std::size_t count = it == spec.children.end() ? 0 : it->second.size();
    if (!role.cardinality.Admits(static_cast<std::int64_t>(count))) {
      return StoreError("MW501", class_name + "." + role_name + " needs " +
                                     role.cardinality.ToString() + " parts, got " +
                                     std::to_string(count));
    }
    if (it == spec.children.end()) continue;
    for (const ObjectSpec& part : it->second) {
      if (auto err = Plan(role.target_class, part, depth + 1)) return err;
    }
  }
  return std::nullopt;
}

ObjectId ObjectStore::Insert(const std::string& class_name, const ObjectSpec& spec,
                             std::optional<Ownership> owner) {
  const link::ClassSymbol& cls = *table_->FindClass(class_name);
  ObjectId id{next_id_++};
  Object obj;
  obj.class_name = class_name;
  for (const auto& attr : cls.attributes) {
    if (attr.type.kind == link::TypeRef::Kind::kClass) continue;
    auto it = spec.fields.find(attr.name);
    obj.fields[attr.name] = it == spec.fields.end() ? Value::Absent() : it->second;
  }
  for (const auto& [role_name, role] : cls.roles) {
    bool single = role.cardinality.max == 1;
    obj.fields[role_name] = single ? Value::Absent() : Value::Refs({});
    if (!role.owns_target && role.kind == cd::RelationKind::kComposition && owner) {
      const link::ClassSymbol& parent_cls = *table_->FindClass(objects_.at(owner->parent).class_name);
      const link::RoleSymbol* via = parent_cls.FindRole(owner->role);
      if (via != nullptr && via->relation == role.relation) {
        obj.fields[role_name] = Value::Ref(owner->parent);
      }
    }
  }
  objects_.emplace(id, std::move(obj));
  if (owner) owners_[id] = *owner;
  for (const auto& [role_name, role] : cls.roles) {
    if (!role.owns_target) continue;
    auto it = spec.children.find(role_name);
    if (it == spec.children.end()) continue;
    Value::RefList parts;
    for (const ObjectSpec& part : it->second) {
      parts.push_back(Insert(role.target_class, part, Ownership{id, role_name}));
    }
    Value& field = objects_.at(id).fields[role_name];
    field = role.cardinality.max == 1
                ? (parts.empty() ? Value::Absent() : Value::Ref(parts.front()))
                : Value::Refs(std::move(parts));
  }
  return id;
}

Expected<ObjectId> ObjectStore::Create(std::string_view class_name, const ObjectSpec& spec) {
  std::string name(class_name);
  if (auto err = Plan(name, spec, 0)) return *err;
  return Insert(name, spec, std::nullopt);
}

std::vector<ObjectId> ObjectStore::PartsOf(ObjectId id) const {
  std::vector<ObjectId> out;
  for (const auto& [child, own] : owners_) {
    if (own.parent == id) out.push_back(child);
  }
  return out;
}

Expected<std::set<ObjectId>> ObjectStore::Delete(ObjectId id) {
  if (objects_.count(id) == 0) {
    return StoreError("MW502", "no object " + id.ToString());
  }
  std::map<ObjectId, std::vector<ObjectId>> parts;
  for (const auto& [child, own] : owners_) parts[own.parent].push_back(child);
  std::set<ObjectId> doomed{id};
  std::deque<ObjectId> work{id};
  while (!work.empty()) {
    ObjectId cur = work.front();
    work.pop_front();
    for (ObjectId child : parts[cur]) {
      if (doomed.insert(child).second) work.push_back(child);
    }
  }
  for (ObjectId gone : doomed) {
    objects_.erase(gone);
    owners_.erase(gone);
  }
  for (auto& [oid, obj] : objects_) {
    for (auto& [name, value] : obj.fields) {
      if (const ObjectId* ref = value.ref(); ref != nullptr && doomed.count(*ref) > 0) {
        value = Value::Absent();
      } else if (Value::RefList* refs = value.mutable_refs()) {
        std::erase_if(*refs, [&](ObjectId r) { return doomed.count(r) > 0; });
      }
    }
  }
  return doomed;
}

Expected<Unit> ObjectStore::Link(ObjectId source, std::string_view role_name, ObjectId target) {
  auto src = objects_.find(source);
  if (src == objects_.end()) return StoreError("MW502", "no object " + source.ToString());
  auto tgt = objects_.find(target);
  if (tgt == objects_.end()) return StoreError("MW502", "no object " + target.ToString());
  const link::ClassSymbol& cls = *table_->FindClass(src->second.class_name);
  const link::RoleSymbol* role = cls.FindRole(role_name);
  if (role == nullptr) {
    return StoreError("MW502", "class " + cls.name + " has no role '" + std::string(role_name) + "'");
  }
  if (role->kind != cd::RelationKind::kAssociation) {
    return StoreError("MW502", "role " + cls.name + "." + role->name +
                                   " is a composition; parts are created with their owner");
  }
  if (tgt->second.class_name != role->target_class) {
    return StoreError("MW502", "role " + cls.name + "." + role->name + " expects " +
                                   role->target_class + ", got " + tgt->second.class_name);
  }
  Value& field = src->second.fields[role->name];
  if (role->cardinality.max == 1) {
    field = Value::Ref(target);
    return Unit{};
  }
  Value::RefList* refs = field.mutable_refs();
  if (Contains(*refs, target)) return Unit{};
  if (role->cardinality.max && static_cast<std::int64_t>(refs->size()) >= *role->cardinality.max) {
    return StoreError("MW501", "role " + cls.name + "." + role->name + " allows at most " +
                                   std::to_string(*role->cardinality.max) + " objects");
  }
  refs->push_back(target);
  return Unit{};
}

Expected<Unit> ObjectStore::Update(ObjectId id, const FieldValues& fields) {
  auto it = objects_.find(id);
  if (it == objects_.end()) return StoreError("MW502", "no object " + id.ToString());
  const link::ClassSymbol& cls = *table_->FindClass(it->second.class_name);
  for (const auto& [name, value] : fields) {
    if (auto err = CheckFieldValue(cls, name, value)) return *err;
  }
  for (const auto& [name, value] : fields) it->second.fields[name] = value;
  return Unit{};
}

const Object* ObjectStore::Find(ObjectId id) const {
  auto it = objects_.find(id);
  return it == objects_.end() ? nullptr : &it->second;
}

std::optional<Ownership> ObjectStore::OwnerOf(ObjectId id) const {
  auto it = owners_.find(id);
  if (it == owners_.end()) return std::nullopt;
  return it->second;
}

std::vector<ObjectId> ObjectStore::Ids() const {
  std::vector<ObjectId> out;
  for (const auto& [id, obj] : objects_) out.push_back(id);
  return out;
}

std::string ObjectStore::Label(ObjectId id) const {
  const Object* obj = Find(id);
  if (obj == nullptr) return id.ToString();
  const link::ClassSymbol* cls = table_->FindClass(obj->class_name);
  for (const auto& attr : cls->attributes) {
    if (!attr.type.is_base(link::BaseType::kString)) continue;
    const Value& v = obj->fields.at(attr.name);
    if (const std::string* s = v.str()) return *s;
  }
  return id.ToString();
}

std::vector<std::string> ObjectStore::CheckInvariants() const {
  std::vector<std::string> problems;
  for (const auto& [id, obj] : objects_) {
    for (const auto& [name, value] : obj.fields) {
      if (const ObjectId* ref = value.ref(); ref != nullptr && !objects_.count(*ref)) {
        problems.push_back(id.ToString() + "." + name + " -> missing " + ref->ToString());
      }
      if (const Value::RefList* refs = value.refs()) {
        std::set<ObjectId> seen;
        for (ObjectId r : *refs) {
          if (!objects_.count(r)) {
            problems.push_back(id.ToString() + "." + name + " -> missing " + r.ToString());
          }
          if (!seen.insert(r).second) {
            problems.push_back(id.ToString() + "." + name + " repeats " + r.ToString());
          }
        }
      }
      if (const EnumValue* ev = value.enum_value()) {
        const link::EnumSymbol* e = table_->FindEnum(ev->enum_name);
        if (e == nullptr || !e->HasLiteral(ev->literal)) {
          problems.push_back(id.ToString() + "." + name + " has invalid literal " + ev->literal);
        }
      }
    }
  }
  for (const auto& [child, own] : owners_) {
    auto parent = objects_.find(own.parent);
    auto obj = objects_.find(child);
    if (parent == objects_.end() || obj == objects_.end()) {
      problems.push_back("ownership of " + child.ToString() + " names a missing object");
      continue;
    }
    const link::ClassSymbol* cls = table_->FindClass(parent->second.class_name);
    const link::RoleSymbol* role = cls->FindRole(own.role);
    if (role == nullptr || !role->owns_target || role->target_class != obj->second.class_name) {
      problems.push_back(child.ToString() + " is owned through a role that cannot hold it");
      continue;
    }
    const Value& field = parent->second.fields.at(own.role);
    bool listed = (field.ref() && *field.ref() == child) ||
                  (field.refs() && Contains(*field.refs(), child));
    if (!listed) {
      problems.push_back(child.ToString() + " is owned by " + own.parent.ToString() +
                         " but missing from its role " + own.role);
    }
  }
  return problems;
}

nlohmann::json ObjectStore::Snapshot(ObjectId id) const {
  const Object* obj = Find(id);
  if (obj == nullptr) return nullptr;
  nlohmann::json fields = nlohmann::json::object();
  for (const auto& [name, value] : obj->fields) fields[name] = value.ToJson();
  return {{"id", id.value}, {"class", obj->class_name}, {"fields", std::move(fields)}};
}

}  // namespace mw::rt
