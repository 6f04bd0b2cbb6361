#pragma once

// Full binary trees (variable-free terms built from 0 and pairing) and the
// τ code: 0 ↦ a, (u,v) ↦ b·τ(u)·τ(v).

#include <cctype>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/counting.hpp"
#include "strtree/error.hpp"

namespace strtree {

class TreeTerm {
 public:
  static TreeTerm leaf() { return TreeTerm(); }
  static TreeTerm node(TreeTerm left, TreeTerm right) {
    return TreeTerm(std::make_shared<const Children>(Children{std::move(left), std::move(right)}));
  }

  bool is_leaf() const noexcept { return !kids_; }
  const TreeTerm& left() const { return kids_->first; }
  const TreeTerm& right() const { return kids_->second; }

  /// Leaf has depth 0.
  std::size_t depth() const {
    return is_leaf() ? 0 : 1 + std::max(left().depth(), right().depth());
  }

  std::size_t internal_nodes() const {
    return is_leaf() ? 0 : 1 + left().internal_nodes() + right().internal_nodes();
  }

  friend bool operator==(const TreeTerm& s, const TreeTerm& t) {
    if (s.kids_ == t.kids_) return true;
    if (s.is_leaf() || t.is_leaf()) return false;
    return s.left() == t.left() && s.right() == t.right();
  }

  /// Concrete syntax "0" / "(s,t)", no whitespace.
  std::string to_string() const {
    std::string out;
    print(out);
    return out;
  }

  /// Accepts "0" and "(s,t)" with arbitrary whitespace.
  static TreeTerm parse(std::string_view text) {
    std::size_t pos = 0;
    TreeTerm t = parse_at(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing input in tree term at offset " + std::to_string(pos));
    return t;
  }

 private:
  using Children = std::pair<TreeTerm, TreeTerm>;
  TreeTerm() = default;
  explicit TreeTerm(std::shared_ptr<const Children> k) : kids_(std::move(k)) {}

  void print(std::string& out) const {
    if (is_leaf()) {
      out.push_back('0');
      return;
    }
    out.push_back('(');
    left().print(out);
    out.push_back(',');
    right().print(out);
    out.push_back(')');
  }

  static void skip_ws(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  static void expect(std::string_view s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in tree term at offset " + std::to_string(pos));
    }
    ++pos;
  }

  static TreeTerm parse_at(std::string_view s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw ParseError("unexpected end of tree term");
    if (s[pos] == '0') {
      ++pos;
      return leaf();
    }
    expect(s, pos, '(');
    TreeTerm l = parse_at(s, pos);
    expect(s, pos, ',');
    TreeTerm r = parse_at(s, pos);
    expect(s, pos, ')');
    return node(std::move(l), std::move(r));
  }

  std::shared_ptr<const Children> kids_;
};

inline std::ostream& operator<<(std::ostream& os, const TreeTerm& t) { return os << t.to_string(); }

namespace detail {
inline void encode_into(const TreeTerm& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('a');
    return;
  }
  out.push_back('b');
  encode_into(t.left(), out);
  encode_into(t.right(), out);
}
}  // namespace detail

inline BinString encode_tree(const TreeTerm& t) {
  std::string out;
  detail::encode_into(t, out);
  return BinString(std::move(out));
}

/// Polish-notation reader with an explicit stack: b opens a node expecting
/// two children, a is a leaf. Throws NotAlmostEven on leftover digits or on
/// running out of input mid-subtree.
inline TreeTerm decode_tree(const BinString& x) {
  struct Open {
    std::vector<TreeTerm> kids;
  };
  std::vector<Open> stack;
  const std::string& s = x.str();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'b') {
      stack.push_back({});
      continue;
    }
    TreeTerm done = TreeTerm::leaf();
    for (;;) {
      if (stack.empty()) {
        if (i + 1 != s.size()) throw NotAlmostEven("leftover digits after a complete tree: " + s);
        return done;
      }
      stack.back().kids.push_back(std::move(done));
      if (stack.back().kids.size() < 2) break;
      done = TreeTerm::node(stack.back().kids[0], stack.back().kids[1]);
      stack.pop_back();
    }
  }
  throw NotAlmostEven("input ends inside a subtree: " + s);
}

/// Drop the leading b, then cut the rest at its shortest prefix y with
/// α(y) = Sβ(y). Throws NotDecomposable unless x is AE and x ≠ a.
inline std::pair<BinString, BinString> decode_split_paper(const BinString& x) {
  if (!is_almost_even(x) || x.str() == "a") {
    throw NotDecomposable("not a decomposable almost-even string: " + x.str());
  }
  const std::string rest = x.str().substr(1);
  for (std::size_t n = 1; n < rest.size(); ++n) {
    const BinString y(rest.substr(0, n));
    if (alpha(y).value() == successor(beta(y).value())) {
      return {y, BinString(rest.substr(n))};
    }
  }
  throw NotDecomposable("no split found: " + x.str());
}

/// Codes of all subterms of the tree coded by x, including x itself.
inline std::set<BinString> subterm_codes(const BinString& x) {
  const TreeTerm t = decode_tree(x);
  std::set<BinString> out;
  std::vector<const TreeTerm*> todo{&t};
  while (!todo.empty()) {
    const TreeTerm* cur = todo.back();
    todo.pop_back();
    out.insert(encode_tree(*cur));
    if (!cur->is_leaf()) {
      todo.push_back(&cur->left());
      todo.push_back(&cur->right());
    }
  }
  return out;
}

/// All trees of depth ≤ max_depth, grouped by increasing depth.
inline std::vector<TreeTerm> trees_up_to_depth(std::size_t max_depth) {
  std::vector<TreeTerm> all{TreeTerm::leaf()};
  std::size_t prev_end = 0;  // trees [prev_end, all.size()) have the maximal depth so far
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t n = all.size();
    std::vector<TreeTerm> fresh;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < prev_end && j < prev_end) continue;
        fresh.push_back(TreeTerm::node(all[i], all[j]));
      }
    }
    prev_end = n;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return all;
}

/// All trees with exactly k internal nodes.
inline std::vector<TreeTerm> trees_with_nodes(std::size_t k) {
  std::vector<std::vector<TreeTerm>> by(k + 1);
  by[0] = {TreeTerm::leaf()};
  for (std::size_t n = 1; n <= k; ++n) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& lt : by[l]) {
        for (const auto& rt : by[n - 1 - l]) by[n].push_back(TreeTerm::node(lt, rt));
      }
    }
  }
  return by[k];
}

}  // namespace strtree
