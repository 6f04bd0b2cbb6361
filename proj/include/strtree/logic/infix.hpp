#pragma once

// Infix notation for variable-free 𝓛_C terms: digits a and b, '*' and
// parentheses, e.g. "b*(a*a)". An unparenthesized chain a*b*c groups to the
// right. Printing parenthesizes every nested product and leaves the outermost
// one bare.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "strtree/error.hpp"
#include "strtree/logic/syntax.hpp"

namespace strtree::logic {

namespace detail {

class InfixReader {
 public:
  explicit InfixReader(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = product();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError(m + " in term at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Term product() {
    Term l = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      return star(l, product());
    }
    return l;
  }

  Term primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == 'a' || c == 'b') {
      ++pos_;
      return c == 'a' ? ca() : cb();
    }
    if (c == '(') {
      ++pos_;
      Term t = product();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline void print_infix(const Term& t, std::string& out, bool nested) {
  switch (t->kind) {
    case TermKind::A: out += 'a'; return;
    case TermKind::B: out += 'b'; return;
    case TermKind::Star:
      if (nested) out += '(';
      print_infix(t->left, out, true);
      out += '*';
      print_infix(t->right, out, true);
      if (nested) out += ')';
      return;
    default: throw SortError("infix notation covers variable-free L_C terms only");
  }
}

}  // namespace detail

inline Term parse_infix_term(std::string_view text) { return detail::InfixReader(text).parse(); }

inline std::string to_infix(const Term& t) {
  std::string out;
  detail::print_infix(t, out, false);
  return out;
}

/// The digit string a variable-free 𝓛_C term denotes. Throws SortError on
/// any other term.
inline std::string ground_value(const Term& t) {
  switch (t->kind) {
    case TermKind::A: return "a";
    case TermKind::B: return "b";
    case TermKind::Star: return ground_value(t->left) + ground_value(t->right);
    default: throw SortError("not a variable-free L_C term");
  }
}

}  // namespace strtree::logic
