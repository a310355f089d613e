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

#include "mw/activity/activity.h"

#include <set>

#include "mw/core/annotation.h"
#include "mw/core/parser_base.h"
#include "mw/core/text.h"

namespace mw::ad {

const char* CompareOpSpelling(CompareOp op) {
  switch (op) {
    case CompareOp::kGe: return ">=";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kLt: return "<";
    case CompareOp::kEq: return "==";
    case CompareOp::kNe: return "!=";
  }
  return "==";
}

namespace {

const ParamDecl* FindIn(const std::vector<ParamDecl>& params, std::string_view name) {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

const ParamDecl* ActionDef::FindInput(std::string_view param) const {
  return FindIn(inputs, param);
}
const ParamDecl* ActionDef::FindOutput(std::string_view param) const {
  return FindIn(outputs, param);
}
const ParamDecl* ActionDef::FindParam(std::string_view param) const {
  const ParamDecl* p = FindInput(param);
  return p != nullptr ? p : FindOutput(param);
}

const ActionDef* ActivityDef::FindAction(std::string_view action) const {
  for (const auto& a : actions) {
    if (a.name == action) return &a;
  }
  return nullptr;
}

std::string Endpoint::ToString() const {
  if (is_initial()) return "initial";
  if (is_final()) return "final";
  const ActionNode& a = std::get<ActionNode>(node);
  return a.param ? a.action + "." + *a.param : a.action;
}

namespace {

std::optional<CompareOp> AsCompareOp(const Token& t) {
  if (t.kind != TokenKind::kPunct) return std::nullopt;
  if (t.text == ">=") return CompareOp::kGe;
  if (t.text == "<=") return CompareOp::kLe;
  if (t.text == ">") return CompareOp::kGt;
  if (t.text == "<") return CompareOp::kLt;
  if (t.text == "==") return CompareOp::kEq;
  if (t.text == "!=") return CompareOp::kNe;
  return std::nullopt;
}

class Parser : public ParserBase {
 public:
  Parser(Lexer& lexer, Diagnostics& diags) : ParserBase(lexer), diags_(diags) {}

  ActivityDef ParseFile() {
    ActivityDef a;
    Token kw = ExpectKeyword("activity");
    a.name = ExpectIdent("activity name").text;
    ExpectPunct("{");
    std::set<std::string> action_names;
    while (!Peek().IsPunct("}")) {
      if (Peek().IsIdent("action") && Peek(1).kind == TokenKind::kIdent &&
          Peek(2).IsPunct("{")) {
        ActionDef action = ParseAction();
        if (!action_names.insert(action.name).second) {
          diags_.push_back(Diagnostic::Error(
              "MW301", "duplicate action '" + action.name + "' in activity " + a.name,
              action.span.value));
        }
        a.actions.push_back(std::move(action));
        a.order.push_back({MemberKind::kAction, a.actions.size() - 1});
      } else {
        a.transitions.push_back(ParseTransition());
        a.order.push_back({MemberKind::kTransition, a.transitions.size() - 1});
      }
    }
    Token close = Next();
    if (Peek().kind != TokenKind::kEof) FailExpected("end of input");
    a.span = SourceSpan::Cover(kw.span, close.span);
    return a;
  }

  GuardExpr ParseOr() {
    GuardExpr lhs = ParseAnd();
    while (Peek().IsPunct("||")) {
      Next();
      GuardExpr rhs = ParseAnd();
      SourceSpan span = SourceSpan::Cover(lhs.span.value, rhs.span.value);
      lhs = GuardExpr{Logical{LogicOp::kOr, std::move(lhs), std::move(rhs)}, span};
    }
    return lhs;
  }

 private:
  ParamDecl ParseParam() {
    Token kw = Next();
    ExpectPunct(":");
    Token type = ExpectIdent("parameter type");
    Token name = ExpectIdent("parameter name");
    Token semi = ExpectPunct(";");
    return ParamDecl{type.text, name.text, SourceSpan::Cover(kw.span, semi.span)};
  }

  ViewCall ParseViewCall() {
    Token kw = Next();
    ExpectPunct(":");
    ViewCall call;
    if (Peek().kind == TokenKind::kIdent && Peek(1).IsPunct("=")) {
      call.assign_to = Next().text;
      Next();
    }
    call.class_name = ExpectIdent("class name").text;
    ExpectPunct(".");
    call.view_name = ExpectIdent("view name").text;
    ExpectPunct("(");
    if (Peek().kind == TokenKind::kIdent) {
      call.argument = Next().text;
      if (Peek().IsPunct(",")) {
        Fail("a view call takes at most one argument", Peek().span);
      }
    }
    ExpectPunct(")");
    Token semi = ExpectPunct(";");
    call.span = SourceSpan::Cover(kw.span, semi.span);
    return call;
  }

  ActionDef ParseAction() {
    Token kw = Next();
    ActionDef action;
    action.name = Next().text;
    ExpectPunct("{");
    std::optional<ActionContent> content;
    std::set<std::string> param_names;
    auto set_content = [&](ActionContent c, const SourceSpan& span) {
      if (content) Fail("action '" + action.name + "' has more than one content", span);
      content = std::move(c);
    };
    while (!Peek().IsPunct("}")) {
      const Token& t = Peek();
      if ((t.IsIdent("in") || t.IsIdent("out")) && Peek(1).IsPunct(":")) {
        bool input = t.text == "in";
        ParamDecl param = ParseParam();
        if (!param_names.insert(param.name).second) {
          diags_.push_back(Diagnostic::Error(
              "MW308",
              "duplicate parameter '" + param.name + "' in action " + action.name,
              param.span.value));
        }
        (input ? action.inputs : action.outputs).push_back(std::move(param));
      } else if (t.IsIdent("view") && Peek(1).IsPunct(":")) {
        ViewCall call = ParseViewCall();
        SourceSpan span = call.span.value;
        set_content(std::move(call), span);
      } else if (t.IsIdent("code") && Peek(1).IsPunct("{")) {
        Token code_kw = Next();
        Next();
        SourceSpan interior;
        auto body = lexer().ScanBalancedBlock(&interior);
        if (!body) Fail("unterminated code block", code_kw.span, "MW003");
        SourceSpan span = SourceSpan::Cover(code_kw.span, interior);
        set_content(OpaqueCode{std::string(TrimWhitespace(*body)), span}, span);
      } else {
        FailExpected("'in:', 'out:', 'view:', 'code {' or '}'");
      }
    }
    Token close = Next();
    action.span = SourceSpan::Cover(kw.span, close.span);
    if (!content) {
      Fail("action '" + action.name + "' needs a 'view' or 'code' content",
           action.span.value);
    }
    action.content = std::move(*content);
    return action;
  }

  Endpoint ParseEndpoint() {
    const Token& t = Peek();
    if (t.IsIdent("initial")) return Endpoint{InitialNode{}, Next().span};
    if (t.IsIdent("final")) return Endpoint{FinalNode{}, Next().span};
    Token name = ExpectIdent("'initial', 'final' or an action name");
    ActionNode node{name.text, std::nullopt};
    SourceSpan span = name.span;
    if (AcceptPunct(".")) {
      Token param = ExpectIdent("parameter name");
      node.param = param.text;
      span = SourceSpan::Cover(span, param.span);
    }
    return Endpoint{std::move(node), span};
  }

  TransitionStmt ParseTransition() {
    TransitionStmt stmt;
    do {
      stmt.sources.push_back(ParseEndpoint());
    } while (AcceptPunct("|"));
    ExpectPunct("->");
    do {
      Alternative alt;
      if (AcceptPunct("[")) {
        alt.guard = ParseOr();
        ExpectPunct("]");
      }
      alt.target = ParseEndpoint();
      stmt.alternatives.push_back(std::move(alt));
    } while (AcceptPunct("|"));
    Token semi = ExpectPunct(";");
    stmt.span = SourceSpan::Cover(stmt.sources.front().span.value, semi.span);
    for (const Endpoint& e : stmt.sources) {
      if (e.is_final()) {
        diags_.push_back(Diagnostic::Error(
            "MW302", "'final' cannot be the source of a transition", e.span.value));
      }
    }
    for (const Alternative& alt : stmt.alternatives) {
      if (alt.target.is_initial()) {
        diags_.push_back(Diagnostic::Error(
            "MW302", "'initial' cannot be the target of a transition",
            alt.target.span.value));
      }
    }
    return stmt;
  }

  GuardExpr ParseAnd() {
    GuardExpr lhs = ParseComparison();
    while (Peek().IsPunct("&&")) {
      Next();
      GuardExpr rhs = ParseComparison();
      SourceSpan span = SourceSpan::Cover(lhs.span.value, rhs.span.value);
      lhs = GuardExpr{Logical{LogicOp::kAnd, std::move(lhs), std::move(rhs)}, span};
    }
    return lhs;
  }

  GuardExpr ParseComparison() {
    if (Peek().IsPunct("(")) {
      Token open = Next();
      GuardExpr inner = ParseOr();
      Token close = ExpectPunct(")");
      inner.span = SourceSpan::Cover(open.span, close.span);
      return inner;
    }
    Operand lhs = ParseOperand();
    auto op = AsCompareOp(Peek());
    if (!op) FailExpected("a comparison operator");
    Next();
    Operand rhs = ParseOperand();
    SourceSpan span = SourceSpan::Cover(lhs.span.value, rhs.span.value);
    return GuardExpr{Compare{*op, std::move(lhs), std::move(rhs)}, span};
  }

  Operand ParseOperand() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kInt) {
      Token lit = Next();
      return Operand{IntLiteral{lit.int_value}, lit.span};
    }
    if (t.IsPunct("-") && Peek(1).kind == TokenKind::kInt) {
      Token minus = Next();
      Token lit = Next();
      return Operand{IntLiteral{-lit.int_value}, SourceSpan::Cover(minus.span, lit.span)};
    }
    if (t.kind == TokenKind::kString) {
      Token lit = Next();
      return Operand{StringLiteral{lit.text}, lit.span};
    }
    Token head = ExpectIdent("a guard operand");
    ExpectPunct(".");
    Token tail = ExpectIdent("an attribute or literal name");
    return Operand{ParamAttribute{head.text, tail.text},
                   SourceSpan::Cover(head.span, tail.span)};
  }

  Diagnostics& diags_;
};

int Precedence(const GuardExpr& e) {
  if (const auto* l = std::get_if<Logical>(&e.node)) {
    return l->op == LogicOp::kOr ? 1 : 2;
  }
  return 3;
}

std::string PrintGuardAt(const GuardExpr& e, int parent_prec, bool right_child) {
  std::string body;
  if (const auto* c = std::get_if<Compare>(&e.node)) {
    body = PrintOperand(c->lhs) + " " + CompareOpSpelling(c->op) + " " +
           PrintOperand(c->rhs);
  } else {
    const Logical& l = std::get<Logical>(e.node);
    int prec = Precedence(e);
    body = PrintGuardAt(*l.lhs, prec, false) +
           (l.op == LogicOp::kOr ? " || " : " && ") +
           PrintGuardAt(*l.rhs, prec, true);
  }
  int prec = Precedence(e);
  bool parens = prec < parent_prec || (prec == parent_prec && right_child && prec < 3);
  return parens ? "(" + body + ")" : body;
}

}  // namespace

ParseResult<ActivityDef> ParseActivity(std::string_view source, std::string file) {
  Lexer lexer(source, file);
  ParseResult<ActivityDef> result;
  Parser parser(lexer, result.diagnostics);
  try {
    ActivityDef a = parser.ParseFile();
    a.file = file;
    result.value = std::move(a);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  for (const auto& d : lexer.diagnostics()) result.diagnostics.push_back(d);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

ParseResult<GuardExpr> ParseGuard(std::string_view text, std::string file) {
  Lexer lexer(text, std::move(file));
  ParseResult<GuardExpr> result;
  Parser parser(lexer, result.diagnostics);
  try {
    GuardExpr g = parser.ParseOr();
    if (parser.Peek().kind != TokenKind::kEof) parser.FailExpected("end of guard");
    result.value = std::move(g);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  for (const auto& d : lexer.diagnostics()) result.diagnostics.push_back(d);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

std::string PrintOperand(const Operand& operand) {
  if (const auto* pa = std::get_if<ParamAttribute>(&operand.value)) {
    return pa->param + "." + pa->attribute;
  }
  if (const auto* i = std::get_if<IntLiteral>(&operand.value)) {
    return std::to_string(i->value);
  }
  return QuoteString(std::get<StringLiteral>(operand.value).value);
}

std::string PrintGuard(const GuardExpr& guard) { return PrintGuardAt(guard, 0, false); }

namespace {

std::string PrintAlternative(const Alternative& alt) {
  std::string out;
  if (alt.guard) out += "[" + PrintGuard(*alt.guard) + "] ";
  out += alt.target.ToString();
  return out;
}

void PrintAction(const ActionDef& a, std::string& out) {
  out += "  action " + a.name + " {\n";
  for (const auto& p : a.inputs) out += "    in: " + p.type_name + " " + p.name + ";\n";
  for (const auto& p : a.outputs) out += "    out: " + p.type_name + " " + p.name + ";\n";
  if (const auto* call = std::get_if<ViewCall>(&a.content)) {
    out += "    view : ";
    if (call->assign_to) out += *call->assign_to + " = ";
    out += call->class_name + "." + call->view_name + "(" +
           call->argument.value_or("") + ");\n";
  } else {
    out += "    code {" + std::get<OpaqueCode>(a.content).text + "}\n";
  }
  out += "  }\n";
}

void PrintTransition(const TransitionStmt& t, std::string& out) {
  std::string head = "  ";
  for (std::size_t i = 0; i < t.sources.size(); ++i) {
    if (i > 0) head += " | ";
    head += t.sources[i].ToString();
  }
  head += " ";
  std::size_t arrow_col = head.size();
  out += head + "-> " + PrintAlternative(t.alternatives.front());
  for (std::size_t i = 1; i < t.alternatives.size(); ++i) {
    out += "\n" + std::string(arrow_col + 1, ' ') + "| " + PrintAlternative(t.alternatives[i]);
  }
  out += ";\n";
}

}  // namespace

std::string PrintActivity(const ActivityDef& activity) {
  std::string out = "activity " + activity.name + " {\n";
  bool first = true;
  bool previous_was_action = false;
  for (const MemberRef& m : activity.order) {
    bool is_action = m.kind == MemberKind::kAction;
    if (!first && (is_action || previous_was_action)) out += "\n";
    if (is_action) {
      PrintAction(activity.actions[m.index], out);
    } else {
      PrintTransition(activity.transitions[m.index], out);
    }
    first = false;
    previous_was_action = is_action;
  }
  out += "}\n";
  return out;
}

}  // namespace mw::ad
