#pragma once

// S-expression text format for terms and formulas.
//
//   terms     (zero) (a) (b) (pair s t) (star s t) (succ s) | symbol
//   atoms     (= s t) (subt s t) (substar s t) (subp s t) (dom s) (tstar s)
//             (alpha s t) (beta s t)
//   formulas  (not f) (and f...) (or f...) (imp f g) (iff f g)
//             (forall (x ...) f) (exists (x ...) f) (exists1 (x ...) f)
//
// Printing uses single spaces and no line breaks; parse(print(f)) == f.
// ';' starts a comment running to the end of the line.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strtree/error.hpp"
#include "strtree/logic/syntax.hpp"

namespace strtree::logic {

inline void print_term(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var: out += t->name; return;
    case TermKind::Zero: out += "(zero)"; return;
    case TermKind::A: out += "(a)"; return;
    case TermKind::B: out += "(b)"; return;
    case TermKind::Succ:
      out += "(succ ";
      print_term(t->left, out);
      out += ')';
      return;
    case TermKind::Pair:
    case TermKind::Star:
      out += t->kind == TermKind::Pair ? "(pair " : "(star ";
      print_term(t->left, out);
      out += ' ';
      print_term(t->right, out);
      out += ')';
      return;
  }
}

inline std::string to_sexpr(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

inline const char* head_of(FKind k) {
  switch (k) {
    case FKind::Eq: return "=";
    case FKind::SubT: return "subt";
    case FKind::SubStar: return "substar";
    case FKind::SubP: return "subp";
    case FKind::Dom: return "dom";
    case FKind::TStar: return "tstar";
    case FKind::Alpha: return "alpha";
    case FKind::Beta: return "beta";
    case FKind::Not: return "not";
    case FKind::And: return "and";
    case FKind::Or: return "or";
    case FKind::Imp: return "imp";
    case FKind::Iff: return "iff";
    case FKind::ForAll: return "forall";
    case FKind::Exists: return "exists";
    case FKind::ExistsUnique: return "exists1";
  }
  return "?";
}

inline void print_formula(const Formula& f, std::string& out) {
  out += '(';
  out += head_of(f->kind);
  if (is_binder(f->kind)) {
    out += " (";
    for (std::size_t i = 0; i < f->vars.size(); ++i) {
      if (i) out += ' ';
      out += f->vars[i];
    }
    out += ')';
  }
  for (const auto& t : f->args) {
    out += ' ';
    print_term(t, out);
  }
  for (const auto& g : f->subs) {
    out += ' ';
    print_formula(g, out);
  }
  out += ')';
}

inline std::string to_sexpr(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

namespace detail {

class SexprReader {
 public:
  explicit SexprReader(std::string_view text) : s_(text) {}

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  Formula formula() {
    expect('(');
    const std::string head = symbol();
    static const std::vector<std::pair<std::string, FKind>> heads = {
        {"=", FKind::Eq},         {"subt", FKind::SubT},   {"substar", FKind::SubStar},
        {"subp", FKind::SubP},    {"dom", FKind::Dom},     {"tstar", FKind::TStar},
        {"alpha", FKind::Alpha},  {"beta", FKind::Beta},   {"not", FKind::Not},
        {"and", FKind::And},      {"or", FKind::Or},       {"imp", FKind::Imp},
        {"iff", FKind::Iff},      {"forall", FKind::ForAll}, {"exists", FKind::Exists},
        {"exists1", FKind::ExistsUnique}};
    auto it = std::find_if(heads.begin(), heads.end(), [&](const auto& h) { return h.first == head; });
    if (it == heads.end()) fail("unknown formula head '" + head + "'");
    const FKind k = it->second;
    Formula out;
    if (k == FKind::Dom || k == FKind::TStar) {
      out = mk(k, {term()});
    } else if (is_atom(k)) {
      Term l = term();
      Term r = term();
      out = mk(k, {std::move(l), std::move(r)});
    } else if (k == FKind::Not) {
      out = lnot(formula());
    } else if (k == FKind::Imp || k == FKind::Iff) {
      Formula l = formula();
      Formula r = formula();
      out = mk(k, {}, {std::move(l), std::move(r)});
    } else if (k == FKind::And || k == FKind::Or) {
      std::vector<Formula> subs;
      while (peek() != ')') subs.push_back(formula());
      out = mk(k, {}, std::move(subs));
    } else {
      expect('(');
      std::vector<std::string> vs;
      while (peek() != ')') vs.push_back(variable());
      expect(')');
      if (vs.empty()) fail("binder with no variables");
      out = mk(k, {}, {formula()}, std::move(vs));
    }
    expect(')');
    return out;
  }

  Term term() {
    if (peek() != '(') return var(variable());
    expect('(');
    const std::string head = symbol();
    Term out;
    if (head == "zero") out = zero();
    else if (head == "a") out = ca();
    else if (head == "b") out = cb();
    else if (head == "succ") out = succ(term());
    else if (head == "pair" || head == "star") {
      Term l = term();
      Term r = term();
      out = head == "pair" ? pair(std::move(l), std::move(r)) : star(std::move(l), std::move(r));
    } else {
      fail("unknown term head '" + head + "'");
    }
    expect(')');
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == ';') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '=' || c == '-';
  }

  std::string symbol() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && symbol_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a symbol");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string variable() {
    std::string v = symbol();
    if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_') fail("invalid variable name '" + v + "'");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  detail::SexprReader r(text);
  Formula f = r.formula();
  if (!r.at_end()) throw ParseError("trailing input after formula");
  return f;
}

/// Every formula in a file-like text, in order.
inline std::vector<Formula> parse_formulas(std::string_view text) {
  detail::SexprReader r(text);
  std::vector<Formula> out;
  while (!r.at_end()) out.push_back(r.formula());
  return out;
}

inline Term parse_term(std::string_view text) {
  detail::SexprReader r(text);
  Term t = r.term();
  if (!r.at_end()) throw ParseError("trailing input after term");
  return t;
}

}  // namespace strtree::logic
