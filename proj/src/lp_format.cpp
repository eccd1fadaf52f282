// Copyright 2026 The pathip Authors
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

#include "pathip/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pathip/error.hpp"

namespace pathip {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kTermsPerLine = 8;

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_keyword(std::string_view word) {
  static const std::set<std::string> words = {
      "max", "maximize", "maximum", "maximise", "min", "minimize", "minimum", "minimise",
      "subject", "such", "st", "s.t.", "to", "that", "bound", "bounds", "gen", "general",
      "generals", "integer", "integers", "bin", "binary", "binaries", "end", "free", "inf",
      "infinity", "obj"};
  return words.count(lower(word)) > 0;
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) ||
         std::string_view("!\"#$%&(),.;?@_`'{}|~").find(c) != std::string_view::npos;
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '[') {
      out += '(';
    } else if (c == ']') {
      out += ')';
    } else {
      out += name_char(c) ? c : '_';
    }
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])) || out[0] == '.' ||
      is_keyword(out)) {
    out.insert(out.begin(), '_');
  }
  return out;
}

// --- writer ---

class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}
  void term(double coef, const std::string& name, bool first) {
    if (count_ > 0 && count_ % kTermsPerLine == 0) out_ += "\n   ";
    out_ += sign(coef, first) + magnitude(coef) + name;
    ++count_;
  }
  void raw(const std::string& text) { out_ += text; }

 private:
  static std::string sign(double coef, bool first) {
    if (first) return coef < 0 ? " -" : " ";
    return coef < 0 ? " - " : " + ";
  }
  static std::string magnitude(double coef) {
    double m = std::abs(coef);
    return m == 1.0 ? "" : format_number(m) + " ";
  }

  std::string& out_;
  int count_ = 0;
};

std::string sense_text(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kGreaterEqual:
      return ">=";
    case Sense::kEqual:
      return "=";
  }
  return "=";
}

// --- reader ---

enum class Tok { kName, kNumber, kOp, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double number = 0.0;
  int line = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '\\') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      ++i;
      if (i < text.size() && (text[i] == '=' || text[i] == '<' || text[i] == '>')) op += text[i++];
      if (op == "=<" || op == "<") op = "<=";
      if (op == "=>" || op == ">") op = ">=";
      if (op != "<=" && op != ">=" && op != "=") {
        throw ParseError("unknown operator '" + op + "'", line, "");
      }
      tokens.push_back({Tok::kOp, op, 0.0, line});
    } else if (std::string_view("+-*/[]:^").find(c) != std::string_view::npos) {
      tokens.push_back({Tok::kOp, std::string(1, c), 0.0, line});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string buf;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '.' ||
              ((text[i] == '+' || text[i] == '-') && !buf.empty() &&
               (buf.back() == 'e' || buf.back() == 'E')))) {
        buf += text[i++];
      }
      char* end = nullptr;
      double value = std::strtod(buf.c_str(), &end);
      if (end != buf.c_str() + buf.size()) throw ParseError("malformed number '" + buf + "'", line, "");
      tokens.push_back({Tok::kNumber, buf, value, line});
    } else if (name_char(c)) {
      std::string buf;
      while (i < text.size() && name_char(text[i])) buf += text[i++];
      tokens.push_back({Tok::kName, buf, 0.0, line});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, "");
    }
  }
  tokens.push_back({Tok::kEnd, "", 0.0, line});
  return tokens;
}

enum class Section { kNone, kObjective, kConstraints, kBounds, kGeneral, kBinary, kEnd };

const char* section_name(Section s) {
  switch (s) {
    case Section::kObjective:
      return "objective";
    case Section::kConstraints:
      return "constraints";
    case Section::kBounds:
      return "bounds";
    case Section::kGeneral:
      return "general";
    case Section::kBinary:
      return "binary";
    default:
      return "";
  }
}

struct RawRow {
  std::vector<std::pair<double, std::string>> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

class LpReader {
 public:
  explicit LpReader(std::string_view text) : tokens_(tokenize(text)) {}

  IpModel read() {
    while (peek().kind != Tok::kEnd) {
      auto next = section_at();
      if (!next) fail("expected a section keyword");
      section_ = *next;
      if (section_ == Section::kEnd) break;
      switch (section_) {
        case Section::kObjective:
          read_objective();
          break;
        case Section::kConstraints:
          read_constraints();
          break;
        case Section::kBounds:
          read_bounds();
          break;
        case Section::kGeneral:
        case Section::kBinary:
          read_kinds();
          break;
        default:
          break;
      }
    }
    return build();
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_op(const char* op, size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kOp && peek(ahead).text == op;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, section_name(section_));
  }

  // Consumes a section header at the cursor, if any.
  std::optional<Section> section_at() {
    if (peek().kind != Tok::kName) return std::nullopt;
    std::string w = lower(peek().text);
    auto consume = [&](Section s, int n) {
      for (int i = 0; i < n; ++i) take();
      return s;
    };
    if (w == "max" || w == "maximize" || w == "maximum" || w == "maximise") {
      maximize_ = true;
      return consume(Section::kObjective, 1);
    }
    if (w == "min" || w == "minimize" || w == "minimum" || w == "minimise") {
      maximize_ = false;
      return consume(Section::kObjective, 1);
    }
    if (w == "subject" && peek(1).kind == Tok::kName && lower(peek(1).text) == "to") {
      return consume(Section::kConstraints, 2);
    }
    if (w == "such" && peek(1).kind == Tok::kName && lower(peek(1).text) == "that") {
      return consume(Section::kConstraints, 2);
    }
    if (w == "st" || w == "s.t.") return consume(Section::kConstraints, 1);
    if (w == "bound" || w == "bounds") return consume(Section::kBounds, 1);
    if (w == "gen" || w == "general" || w == "generals" || w == "integer" || w == "integers") {
      return consume(Section::kGeneral, 1);
    }
    if (w == "bin" || w == "binary" || w == "binaries") return consume(Section::kBinary, 1);
    if (w == "end") return consume(Section::kEnd, 1);
    return std::nullopt;
  }

  bool at_section() const {
    if (peek().kind == Tok::kEnd) return true;
    if (peek().kind != Tok::kName) return false;
    std::string w = lower(peek().text);
    return w != "free" && w != "inf" && w != "infinity" && w != "obj" && w != "to" &&
           w != "that" && is_keyword(w);
  }

  void note(const std::string& name) {
    if (seen_.insert(name).second) order_.push_back(name);
  }

  std::string take_name() {
    if (peek().kind != Tok::kName || at_section()) fail("expected a variable name");
    std::string name = take().text;
    note(name);
    return name;
  }

  double take_signed_number() {
    double sign = 1.0;
    while (at_op("+") || at_op("-")) sign *= take().text == "-" ? -1.0 : 1.0;
    if (peek().kind == Tok::kNumber) return sign * take().number;
    if (peek().kind == Tok::kName) {
      std::string w = lower(peek().text);
      if (w == "inf" || w == "infinity") {
        take();
        return sign * kInf;
      }
    }
    fail("expected a number");
  }

  std::optional<std::string> take_label() {
    if (peek().kind == Tok::kName && at_op(":", 1) && !at_section()) {
      std::string label = take().text;
      take();
      return label;
    }
    return std::nullopt;
  }

  // Linear part plus optional "[ ... ] / 2" blocks. Stops at an operator
  // that is not part of the expression, or at a section header.
  void read_expression(RawRow& row, double& constant, bool allow_quadratic) {
    bool any = false;
    while (true) {
      if (at_section()) break;
      if (peek().kind == Tok::kOp && peek().text != "+" && peek().text != "-" &&
          peek().text != "[") {
        break;
      }
      if (any && peek().kind == Tok::kName && at_op(":", 1)) break;
      double sign = 1.0;
      bool had_sign = false;
      while (at_op("+") || at_op("-")) {
        sign *= take().text == "-" ? -1.0 : 1.0;
        had_sign = true;
      }
      if (any && !had_sign) fail("expected '+' or '-' between terms");
      if (at_op("[")) {
        if (!allow_quadratic) fail("quadratic terms are only allowed in the objective");
        read_quadratic(sign);
      } else if (peek().kind == Tok::kNumber) {
        double value = take().number;
        if (peek().kind == Tok::kName && !at_section() && !at_op(":", 1)) {
          row.terms.emplace_back(sign * value, take_name());
        } else {
          constant += sign * value;
        }
      } else if (peek().kind == Tok::kName) {
        row.terms.emplace_back(sign, take_name());
      } else {
        fail("expected a term");
      }
      any = true;
    }
  }

  void read_quadratic(double outer_sign) {
    take();  // '['
    std::vector<std::tuple<double, std::string, std::string>> block;
    bool first = true;
    while (!at_op("]")) {
      double sign = 1.0;
      bool had_sign = false;
      while (at_op("+") || at_op("-")) {
        sign *= take().text == "-" ? -1.0 : 1.0;
        had_sign = true;
      }
      if (!first && !had_sign) fail("expected '+' or '-' inside quadratic block");
      double coef = 1.0;
      if (peek().kind == Tok::kNumber) coef = take().number;
      std::string a = take_name();
      std::string b;
      if (at_op("*")) {
        take();
        b = take_name();
      } else if (at_op("^")) {
        take();
        if (peek().kind != Tok::kNumber || peek().number != 2) fail("only squares are supported");
        take();
        b = a;
      } else {
        fail("expected '*' or '^' in quadratic term");
      }
      block.emplace_back(sign * coef, a, b);
      first = false;
    }
    take();  // ']'
    double scale = 1.0;
    if (at_op("/")) {
      take();
      if (peek().kind != Tok::kNumber) fail("expected a divisor after '/'");
      scale = 1.0 / take().number;
    }
    for (auto& [coef, a, b] : block) quadratic_.emplace_back(outer_sign * coef * scale, a, b);
  }

  void read_objective() {
    take_label();
    double constant = 0.0;
    read_expression(objective_, constant, true);
    objective_constant_ += constant;
  }

  void read_constraints() {
    while (!at_section()) {
      RawRow row;
      if (auto label = take_label()) row.name = *label;
      double constant = 0.0;
      read_expression(row, constant, false);
      if (peek().kind != Tok::kOp || (peek().text != "<=" && peek().text != ">=" &&
                                      peek().text != "=")) {
        fail("expected a comparison operator");
      }
      std::string op = take().text;
      row.sense = op == "<=" ? Sense::kLessEqual : op == ">=" ? Sense::kGreaterEqual : Sense::kEqual;
      row.rhs = take_signed_number() - constant;
      if (!std::isfinite(row.rhs)) fail("right-hand side must be finite");
      rows_.push_back(std::move(row));
    }
  }

  void apply_bound(const std::string& name, const std::string& op, double value, bool var_on_left) {
    auto& [lo, hi] = bounds_.try_emplace(name, 0.0, kInf).first->second;
    if (op == "=") {
      lo = hi = value;
    } else if ((op == "<=") == var_on_left) {
      hi = value;
    } else {
      lo = value;
    }
  }

  void read_bounds() {
    while (!at_section()) {
      if (peek().kind == Tok::kName && lower(peek().text) != "inf" &&
          lower(peek().text) != "infinity") {
        std::string name = take_name();
        bound_listing_.push_back(name);
        if (peek().kind == Tok::kName && lower(peek().text) == "free") {
          take();
          bounds_[name] = {-kInf, kInf};
          continue;
        }
        if (peek().kind != Tok::kOp) fail("expected a bound operator");
        std::string op = take().text;
        apply_bound(name, op, take_signed_number(), true);
        continue;
      }
      double value = take_signed_number();
      if (peek().kind != Tok::kOp) fail("expected a bound operator");
      std::string op = take().text;
      std::string name = take_name();
      bound_listing_.push_back(name);
      apply_bound(name, op, value, false);
      if (peek().kind == Tok::kOp && (peek().text == "<=" || peek().text == ">=" ||
                                      peek().text == "=")) {
        std::string op2 = take().text;
        apply_bound(name, op2, take_signed_number(), true);
      }
    }
  }

  void read_kinds() {
    while (!at_section()) {
      std::string name = take_name();
      (section_ == Section::kBinary ? binaries_ : generals_).insert(name);
    }
  }

  IpModel build() {
    // Variables listed in Bounds come first, in that order, then the rest
    // by first appearance.
    std::vector<std::string> order;
    std::unordered_set<std::string> placed;
    for (const auto& name : bound_listing_) {
      if (placed.insert(name).second) order.push_back(name);
    }
    for (const auto& name : order_) {
      if (placed.insert(name).second) order.push_back(name);
    }
    IpModel model;
    for (const auto& name : order) {
      VarKind kind = binaries_.count(name)   ? VarKind::kBinary
                     : generals_.count(name) ? VarKind::kInteger
                                             : VarKind::kContinuous;
      auto it = bounds_.find(name);
      double lo = 0.0, hi = kind == VarKind::kBinary ? 1.0 : kInf;
      if (it != bounds_.end()) {
        lo = it->second.first;
        hi = kind == VarKind::kBinary ? std::min(1.0, it->second.second) : it->second.second;
      }
      if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw ParseError("variable '" + name + "' needs finite bounds", 0, "bounds");
      }
      model.add_variable(kind, lo, hi, name);
    }
    auto id = [&](const std::string& name) { return *model.find(name); };
    model.set_objective_sense(maximize_ ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize);
    model.add_objective_constant(objective_constant_);
    for (const auto& [coef, name] : objective_.terms) model.add_objective_term(coef, id(name));
    for (const auto& [coef, a, b] : quadratic_) model.add_objective_product(coef, id(a), id(b));
    for (const auto& row : rows_) {
      std::vector<Term> terms;
      for (const auto& [coef, name] : row.terms) terms.push_back({coef, id(name)});
      model.add_constraint(terms, row.sense, row.rhs, row.name);
    }
    return model;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  Section section_ = Section::kNone;
  bool maximize_ = false;
  RawRow objective_;
  double objective_constant_ = 0.0;
  std::vector<std::tuple<double, std::string, std::string>> quadratic_;
  std::vector<RawRow> rows_;
  std::map<std::string, std::pair<double, double>> bounds_;
  std::set<std::string> binaries_, generals_;
  std::vector<std::string> order_;
  std::vector<std::string> bound_listing_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::vector<std::string> lp_names(const IpModel& model) {
  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  for (const Variable& v : model.variables()) {
    std::string name = sanitize(v.name);
    if (used.count(name)) {
      std::string base = name + "~" + std::to_string(v.id);
      name = base;
      for (int k = 1; used.count(name); ++k) name = base + "~" + std::to_string(k);
    }
    used.insert(name);
    names.push_back(std::move(name));
  }
  return names;
}

std::string export_lp(const IpModel& model) {
  const auto names = lp_names(model);
  std::string out = "\\ " + std::to_string(model.variable_count()) + " variables, " +
                    std::to_string(model.constraint_count()) + " constraints\n";
  const Objective& obj = model.objective();
  out += obj.sense == ObjectiveSense::kMaximize ? "Maximize\n" : "Minimize\n";
  out += " obj:";
  {
    LineWriter w(out);
    bool first = true;
    for (const Term& t : obj.linear) {
      if (t.coef == 0.0) continue;
      w.term(t.coef, names[t.var], first);
      first = false;
    }
    if (obj.constant != 0.0) {
      w.raw((obj.constant < 0 ? " - " : first ? " " : " + ") + format_number(std::abs(obj.constant)));
      first = false;
    }
    if (!obj.quadratic.empty()) {
      w.raw(first ? " [" : " + [");
      bool inner_first = true;
      for (const auto& q : obj.quadratic) {
        double c = 2.0 * q.coef;
        w.raw((c < 0 ? " - " : inner_first ? " " : " + ") +
              (std::abs(c) == 1.0 ? std::string() : format_number(std::abs(c)) + " ") +
              names[q.a] + " * " + names[q.b]);
        inner_first = false;
      }
      w.raw(" ] / 2");
    }
  }
  out += "\nSubject To\n";
  for (const auto& c : model.constraints()) {
    out += " " + sanitize(c.name) + ":";
    LineWriter w(out);
    bool first = true;
    for (const Term& t : c.terms) {
      w.term(t.coef, names[t.var], first);
      first = false;
    }
    if (c.terms.empty()) out += " 0";
    out += " " + sense_text(c.sense) + " " + format_number(c.rhs) + "\n";
  }
  out += "Bounds\n";
  for (const Variable& v : model.variables()) {
    out += " " + format_number(v.lower) + " <= " + names[v.id] + " <= " + format_number(v.upper) +
           "\n";
  }
  std::string generals, binaries;
  for (const Variable& v : model.variables()) {
    if (v.kind == VarKind::kInteger) generals += " " + names[v.id] + "\n";
    if (v.kind == VarKind::kBinary) binaries += " " + names[v.id] + "\n";
  }
  if (!generals.empty()) out += "Generals\n" + generals;
  if (!binaries.empty()) out += "Binaries\n" + binaries;
  out += "End\n";
  return out;
}

IpModel parse_lp(std::string_view text) { return LpReader(text).read(); }

}  // namespace pathip
