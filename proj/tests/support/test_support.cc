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

#include "test_support.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mw/linker/linker.h"

namespace mw::testing {
namespace {

int Uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool Chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(Uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

// Letters then a unique number, so generated names never collide with each
// other or with keywords.
std::string Name(Rng& rng, const char* prefix, int index) {
  static const char kLetters[] = "abcdefghijklmnopqrstuvwxyz";
  std::string out = prefix;
  int n = Uniform(rng, 0, 4);
  for (int i = 0; i < n; ++i) out += kLetters[Uniform(rng, 0, 25)];
  return out + std::to_string(index);
}

std::string RawText(Rng& rng) {
  static const std::vector<std::string> kWords = {
      "Welcome", "to",  "the", "service", "You", "are", "not", "old", "enough!",
      "a,b",     "x:y", "(c)", "it's",    "100", "%",   "#tag", "e.g.", "-"};
  std::string out;
  int words = Uniform(rng, 1, 6);
  for (int i = 0; i < words; ++i) {
    if (i > 0) out += Chance(rng, 0.1) ? "  " : " ";
    if (Chance(rng, 0.1)) {
      out += "{" + Pick(rng, kWords) + "}";
    } else {
      out += Pick(rng, kWords);
    }
  }
  return out;
}

std::string StringValue(Rng& rng) {
  static const std::vector<std::string> kPieces = {"a", "Z", " ", "\"", "\\", "'", "é", "9", "@", "."};
  std::string out;
  int n = Uniform(rng, 0, 6);
  for (int i = 0; i < n; ++i) out += Pick(rng, kPieces);
  return out;
}

Annotation RandomAnnotation(Rng& rng) {
  static const std::vector<std::string> kNames = {"Required", "Length", "AsImage",
                                                  "Captcha",  "Warning", "Hint"};
  Annotation a;
  a.name = Pick(rng, kNames);
  int args = Uniform(rng, 0, 3);
  for (int i = 0; i < args; ++i) {
    AnnotationArg arg;
    arg.key = Name(rng, "k", i);
    switch (Uniform(rng, 0, 2)) {
      case 0: arg.value = static_cast<std::int64_t>(Uniform(rng, -1000000, 1000000)); break;
      case 1: arg.value = Chance(rng, 0.5); break;
      default: arg.value = StringValue(rng); break;
    }
    a.args.push_back(std::move(arg));
  }
  return a;
}

std::vector<Annotation> RandomAnnotations(Rng& rng, int max) {
  std::vector<Annotation> out;
  int n = Uniform(rng, 0, max);
  for (int i = 0; i < n; ++i) out.push_back(RandomAnnotation(rng));
  return out;
}

cd::Cardinality RandomCardinality(Rng& rng) {
  int lo = Uniform(rng, 0, 5);
  switch (Uniform(rng, 0, 4)) {
    case 0: return cd::Cardinality{};
    case 1: return cd::Cardinality::Many();
    case 2: return cd::Cardinality::Exactly(lo);
    case 3: return cd::Cardinality{lo, lo + Uniform(rng, 0, 5)};
    default: return cd::Cardinality{lo, std::nullopt};
  }
}

ad::Endpoint ActionEndpoint(Rng& rng, const std::vector<std::string>& actions) {
  ad::ActionNode node{Pick(rng, actions), std::nullopt};
  if (Chance(rng, 0.4)) node.param = Name(rng, "p", Uniform(rng, 0, 3));
  return ad::Endpoint{std::move(node), {}};
}

}  // namespace

std::filesystem::path FixtureDir() { return MW_FIXTURE_DIR; }

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<link::SourceFile> LoadSources(const std::filesystem::path& dir) {
  std::vector<link::SourceFile> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (link::LanguageOf(name) == link::SourceLanguage::kUnknown) continue;
    out.push_back({name, ReadFile(entry.path())});
  }
  std::sort(out.begin(), out.end(),
            [](const link::SourceFile& a, const link::SourceFile& b) { return a.path < b.path; });
  return out;
}

link::LinkedModel LinkFixture(const std::string& name) {
  return link::CheckSources(LoadSources(FixtureDir() / name));
}

cd::ClassDiagram RandomClassDiagram(Rng& rng) {
  static const std::vector<std::string> kBase = {"MWString", "Email", "Number", "MWDate"};
  cd::ClassDiagram d;
  d.name = Name(rng, "D", 0);
  int classes = Uniform(rng, 0, 5);
  int enums = Uniform(rng, 0, 3);
  std::vector<std::string> type_names = kBase;
  std::vector<std::string> class_names;
  for (int i = 0; i < classes; ++i) class_names.push_back(Name(rng, "C", i));
  for (int i = 0; i < enums; ++i) {
    cd::EnumDef e;
    e.name = Name(rng, "E", i);
    int literals = Uniform(rng, 1, 4);
    for (int j = 0; j < literals; ++j) e.literals.push_back(Name(rng, "L", j));
    type_names.push_back(e.name);
    d.enums.push_back(std::move(e));
  }
  type_names.insert(type_names.end(), class_names.begin(), class_names.end());
  for (const std::string& cname : class_names) {
    cd::ClassDef c;
    c.name = cname;
    int attrs = Uniform(rng, 0, 4);
    for (int j = 0; j < attrs; ++j) {
      c.attributes.push_back({Pick(rng, type_names), Name(rng, "a", j), {}});
    }
    d.classes.push_back(std::move(c));
  }
  if (!class_names.empty()) {
    int relations = Uniform(rng, 0, 4);
    for (int i = 0; i < relations; ++i) {
      cd::RelationDef r;
      r.kind = Chance(rng, 0.5) ? cd::RelationKind::kComposition : cd::RelationKind::kAssociation;
      r.source_class = Pick(rng, class_names);
      r.target_class = Pick(rng, class_names);
      if (Chance(rng, 0.5)) r.source_role = Name(rng, "s", i);
      if (Chance(rng, 0.6)) r.target_role = Name(rng, "t", i);
      r.target_cardinality = RandomCardinality(rng);
      r.directed = Chance(rng, 0.7);
      d.relations.push_back(std::move(r));
    }
  }
  for (std::size_t i = 0; i < d.classes.size(); ++i) d.order.push_back({cd::DeclKind::kClass, i});
  for (std::size_t i = 0; i < d.enums.size(); ++i) d.order.push_back({cd::DeclKind::kEnum, i});
  for (std::size_t i = 0; i < d.relations.size(); ++i) {
    d.order.push_back({cd::DeclKind::kRelation, i});
  }
  // Any interleaving is legal as long as each kind keeps its own order.
  std::vector<cd::DeclKind> kinds;
  for (const auto& ref : d.order) kinds.push_back(ref.kind);
  std::shuffle(kinds.begin(), kinds.end(), rng);
  std::map<cd::DeclKind, std::size_t> next;
  for (std::size_t i = 0; i < kinds.size(); ++i) d.order[i] = {kinds[i], next[kinds[i]]++};
  return d;
}

cv::ClassviewsFile RandomClassviews(Rng& rng) {
  static const std::vector<cv::ViewModifier> kModifiers = {
      cv::ViewModifier::kEditor, cv::ViewModifier::kDisplay, cv::ViewModifier::kField};
  cv::ClassviewsFile f;
  f.annotations = RandomAnnotations(rng, 1);
  f.class_name = Name(rng, "C", 0);
  if (Chance(rng, 0.6)) {
    cv::AttributesBlock block;
    int entries = Uniform(rng, 0, 3);
    for (int i = 0; i < entries; ++i) {
      block.entries.push_back({RandomAnnotations(rng, 2), Name(rng, "a", i), {}});
    }
    f.attributes_block = std::move(block);
  }
  int views = Uniform(rng, 0, 4);
  for (int i = 0; i < views; ++i) {
    cv::ViewDef v;
    v.annotations = RandomAnnotations(rng, 2);
    v.modifier = Pick(rng, kModifiers);
    if (Chance(rng, 0.85)) v.name = Name(rng, "v", i);
    int elements = Uniform(rng, 1, 5);
    for (int j = 0; j < elements; ++j) {
      switch (Uniform(rng, 0, 2)) {
        case 0: {
          cv::AttributeRef ref;
          ref.annotations = RandomAnnotations(rng, 2);
          if (Chance(rng, 0.3)) ref.modifier_override = Pick(rng, kModifiers);
          ref.name = Name(rng, "a", Uniform(rng, 0, 5));
          v.elements.push_back(std::move(ref));
          break;
        }
        case 1:
          v.elements.push_back(cv::StaticText{RandomAnnotations(rng, 1), RawText(rng), {}});
          break;
        default:
          v.elements.push_back(cv::Include{Name(rng, "v", Uniform(rng, 0, 5)), {}});
          break;
      }
    }
    f.views.push_back(std::move(v));
  }
  return f;
}

ad::GuardExpr RandomGuard(Rng& rng, int depth) {
  static const std::vector<ad::CompareOp> kOps = {ad::CompareOp::kGe, ad::CompareOp::kLe,
                                                  ad::CompareOp::kGt, ad::CompareOp::kLt,
                                                  ad::CompareOp::kEq, ad::CompareOp::kNe};
  if (depth <= 0 || Chance(rng, 0.45)) {
    auto operand = [&]() {
      ad::Operand op;
      switch (Uniform(rng, 0, 3)) {
        case 0:
        case 1:
          op.value = ad::ParamAttribute{Name(rng, "p", Uniform(rng, 0, 3)),
                                        Name(rng, "a", Uniform(rng, 0, 3))};
          break;
        case 2: op.value = ad::IntLiteral{Uniform(rng, -100000, 100000)}; break;
        default: op.value = ad::StringLiteral{StringValue(rng)}; break;
      }
      return op;
    };
    ad::Compare c;
    c.op = Pick(rng, kOps);
    c.lhs = operand();
    c.rhs = operand();
    return ad::GuardExpr{std::move(c), {}};
  }
  ad::LogicOp op = Chance(rng, 0.5) ? ad::LogicOp::kAnd : ad::LogicOp::kOr;
  ad::GuardExpr lhs = RandomGuard(rng, depth - 1);
  ad::GuardExpr rhs = RandomGuard(rng, depth - 1);
  return ad::GuardExpr{ad::Logical{op, std::move(lhs), std::move(rhs)}, {}};
}

ad::ActivityDef RandomActivity(Rng& rng) {
  ad::ActivityDef a;
  a.name = Name(rng, "A", 0);
  int actions = Uniform(rng, 0, 4);
  std::vector<std::string> names;
  for (int i = 0; i < actions; ++i) {
    ad::ActionDef action;
    action.name = Name(rng, "N", i);
    names.push_back(action.name);
    int params = Uniform(rng, 0, 3);
    for (int j = 0; j < params; ++j) {
      ad::ParamDecl p{Name(rng, "C", Uniform(rng, 0, 2)), Name(rng, "p", j), {}};
      (Chance(rng, 0.5) ? action.inputs : action.outputs).push_back(std::move(p));
    }
    if (Chance(rng, 0.8)) {
      ad::ViewCall call;
      if (Chance(rng, 0.5)) call.assign_to = Name(rng, "p", Uniform(rng, 0, 2));
      call.class_name = Name(rng, "C", Uniform(rng, 0, 2));
      call.view_name = Name(rng, "v", Uniform(rng, 0, 3));
      if (Chance(rng, 0.5)) call.argument = Name(rng, "p", Uniform(rng, 0, 2));
      action.content = std::move(call);
    } else {
      action.content = ad::OpaqueCode{RawText(rng), {}};
    }
    a.actions.push_back(std::move(action));
  }
  int transitions = Uniform(rng, 0, 4);
  for (int i = 0; i < transitions; ++i) {
    ad::TransitionStmt t;
    int sources = names.empty() ? 1 : Uniform(rng, 1, 3);
    for (int j = 0; j < sources; ++j) {
      t.sources.push_back(names.empty() || Chance(rng, 0.15) ? ad::Endpoint{ad::InitialNode{}, {}}
                                                             : ActionEndpoint(rng, names));
    }
    int alternatives = Uniform(rng, 1, 3);
    for (int j = 0; j < alternatives; ++j) {
      ad::Alternative alt;
      if (Chance(rng, 0.6)) alt.guard = RandomGuard(rng, 3);
      alt.target = names.empty() || Chance(rng, 0.2) ? ad::Endpoint{ad::FinalNode{}, {}}
                                                     : ActionEndpoint(rng, names);
      t.alternatives.push_back(std::move(alt));
    }
    a.transitions.push_back(std::move(t));
  }
  std::vector<ad::MemberKind> kinds;
  for (std::size_t i = 0; i < a.actions.size(); ++i) kinds.push_back(ad::MemberKind::kAction);
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    kinds.push_back(ad::MemberKind::kTransition);
  }
  std::shuffle(kinds.begin(), kinds.end(), rng);
  std::map<ad::MemberKind, std::size_t> next;
  for (ad::MemberKind k : kinds) a.order.push_back({k, next[k]++});
  return a;
}

const char* StoreTestModel() {
  return R"(classdiagram Fleetworks {
  class Fleet { MWString name; }
  class Car { MWString plate; Brand brand; }
  class Wheel { MWString tag; Number size; }
  class Depot { MWString city; }
  class Driver { MWString name; }
  enum Brand {AUDI, BMW, VW;}
  composition Fleet (fleet) -> (cars) Car [*];
  composition Car (car) -> (wheels) Wheel [0..4];
  composition Fleet -> (depot) Depot [0..1];
  association Driver -> (drives) Car [*];
  association Wheel -> (spare) Wheel [0..1];
  association Driver -- (home) Depot;
  association Car -> (garages) Depot [0..2];
}
)";
}

std::set<rt::ObjectId> CompositionClosure(const rt::ObjectStore& store, rt::ObjectId root) {
  std::set<rt::ObjectId> out{root};
  std::deque<rt::ObjectId> work{root};
  while (!work.empty()) {
    rt::ObjectId id = work.front();
    work.pop_front();
    const rt::Object* obj = store.Find(id);
    if (obj == nullptr) continue;
    const link::ClassSymbol* cls = store.table().FindClass(obj->class_name);
    for (const auto& [role_name, role] : cls->roles) {
      if (!role.owns_target) continue;
      const rt::Value& v = obj->fields.at(role_name);
      std::vector<rt::ObjectId> parts;
      if (v.ref() != nullptr) parts.push_back(*v.ref());
      if (v.refs() != nullptr) parts = *v.refs();
      for (rt::ObjectId part : parts) {
        if (out.insert(part).second) work.push_back(part);
      }
    }
  }
  return out;
}

namespace {

std::string DanglingReference(const rt::ObjectStore& store) {
  for (rt::ObjectId id : store.Ids()) {
    for (const auto& [name, value] : store.Find(id)->fields) {
      std::vector<rt::ObjectId> targets;
      if (value.ref() != nullptr) targets.push_back(*value.ref());
      if (value.refs() != nullptr) targets = *value.refs();
      for (rt::ObjectId t : targets) {
        if (store.Find(t) == nullptr) {
          return id.ToString() + "." + name + " dangles to " + t.ToString();
        }
      }
    }
  }
  return "";
}

std::size_t CountSpec(const rt::ObjectSpec& spec) {
  std::size_t n = 1;
  for (const auto& [role, parts] : spec.children) {
    for (const auto& p : parts) n += CountSpec(p);
  }
  return n;
}

rt::ObjectSpec RandomSpec(const link::SymbolTable& table, const std::string& cls_name, Rng& rng,
                          std::size_t* budget, bool allow_invalid) {
  const link::ClassSymbol& cls = *table.FindClass(cls_name);
  rt::ObjectSpec spec;
  int serial = Uniform(rng, 0, 999);
  for (const auto& attr : cls.attributes) {
    if (attr.type.is_base(link::BaseType::kString)) {
      spec.fields[attr.name] = rt::Value::Str(attr.name + std::to_string(serial));
    } else if (attr.type.is_base(link::BaseType::kNumber)) {
      spec.fields[attr.name] = rt::Value::Num(serial);
    } else if (attr.type.kind == link::TypeRef::Kind::kEnum) {
      spec.fields[attr.name] = rt::Value::Enum(attr.type.name, "VW");
    }
  }
  for (const auto& [role_name, role] : cls.roles) {
    if (!role.owns_target) continue;
    std::int64_t hi = role.cardinality.max.value_or(3);
    if (allow_invalid) ++hi;
    int count = Uniform(rng, static_cast<int>(role.cardinality.min), static_cast<int>(hi));
    for (int i = 0; i < count && *budget > 0; ++i) {
      --*budget;
      spec.children[role_name].push_back(
          RandomSpec(table, role.target_class, rng, budget, allow_invalid));
    }
  }
  return spec;
}

}  // namespace

StoreRunStats RunRandomStoreSequence(const link::SymbolTable& table, Rng& rng, int max_ops,
                                     std::size_t max_objects) {
  static const std::vector<std::string> kClasses = {"Fleet", "Fleet", "Driver", "Car",
                                                    "Depot", "Wheel"};
  StoreRunStats stats;
  rt::ObjectStore store(table);
  auto fail = [&](std::string why) {
    stats.failure = why;
    return stats;
  };
  int ops = Uniform(rng, 1, max_ops);
  for (int step = 0; step < ops; ++step) {
    std::vector<rt::ObjectId> ids = store.Ids();
    int choice = Uniform(rng, 0, 9);
    if (ids.empty() || (choice < 4 && store.size() < max_objects)) {
      if (store.size() >= max_objects) continue;
      std::size_t budget = max_objects - store.size() - 1;
      bool invalid = Chance(rng, 0.1);
      std::string cls = Pick(rng, kClasses);
      rt::ObjectSpec spec = RandomSpec(table, cls, rng, &budget, invalid);
      std::size_t before = store.size();
      auto created = store.Create(cls, spec);
      if (created) {
        ++stats.creates;
        if (store.size() != before + CountSpec(spec)) return fail("create inserted wrong count");
      } else if (store.size() != before) {
        return fail("failed create changed the store: " + created.error().message);
      }
    } else if (choice < 7) {
      rt::ObjectId victim = Pick(rng, ids);
      std::set<rt::ObjectId> expected = CompositionClosure(store, victim);
      auto deleted = store.Delete(victim);
      if (!deleted) return fail("delete failed: " + deleted.error().message);
      ++stats.deletes;
      if (*deleted != expected) return fail("delete of " + victim.ToString() + " removed a different set");
      for (rt::ObjectId id : ids) {
        bool gone = store.Find(id) == nullptr;
        if (gone != (expected.count(id) > 0)) return fail("survivor set wrong after delete");
      }
    } else {
      rt::ObjectId source = Pick(rng, ids);
      const rt::Object* obj = store.Find(source);
      const link::ClassSymbol* cls = table.FindClass(obj->class_name);
      std::vector<std::string> roles;
      for (const auto& [name, role] : cls->roles) {
        if (role.kind == cd::RelationKind::kAssociation) roles.push_back(name);
      }
      if (roles.empty()) continue;
      std::string role = Pick(rng, roles);
      rt::ObjectId target = Pick(rng, ids);
      bool class_ok = store.Find(target)->class_name == cls->roles.at(role).target_class;
      auto linked = store.Link(source, role, target);
      if (linked) ++stats.links;
      if (!class_ok && linked) return fail("link accepted a class mismatch");
      if (!linked && linked.error().code != (class_ok ? "MW501" : "MW502")) {
        return fail("link failed with " + linked.error().code);
      }
    }
    if (std::string d = DanglingReference(store); !d.empty()) return fail(d);
    if (auto problems = store.CheckInvariants(); !problems.empty()) return fail(problems.front());
  }
  return stats;
}

}  // namespace mw::testing
