#pragma once

// First-order syntax shared by the three signatures: 𝓛_T = {0, (,), ⊑},
// 𝓛_C = {a, b, *} and 𝓛_{C,⊑*} = 𝓛_C + ⊑*.
//
// Beyond the bare signatures, 𝓛_C formulas may use the successor term
// (succ s), the substring atom (subp s t), the domain atom (dom x) and the
// graphs (alpha x y), (beta x y) of the counting functions; (tstar x) is the
// domain atom of the tree translation. All of these are definable in the
// base language and are kept atomic so the evaluators can decide them
// directly.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strtree/error.hpp"

namespace strtree::logic {

enum class TermKind { Var, Zero, A, B, Pair, Star, Succ };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var only
  Term left, right;  // Pair/Star use both; Succ uses left
};

inline Term var(std::string name) { return std::make_shared<const TermNode>(TermNode{TermKind::Var, std::move(name), {}, {}}); }
inline Term zero() { return std::make_shared<const TermNode>(TermNode{TermKind::Zero, {}, {}, {}}); }
inline Term ca() { return std::make_shared<const TermNode>(TermNode{TermKind::A, {}, {}, {}}); }
inline Term cb() { return std::make_shared<const TermNode>(TermNode{TermKind::B, {}, {}, {}}); }
inline Term pair(Term l, Term r) { return std::make_shared<const TermNode>(TermNode{TermKind::Pair, {}, std::move(l), std::move(r)}); }
inline Term star(Term l, Term r) { return std::make_shared<const TermNode>(TermNode{TermKind::Star, {}, std::move(l), std::move(r)}); }
inline Term succ(Term s) { return std::make_shared<const TermNode>(TermNode{TermKind::Succ, {}, std::move(s), {}}); }

/// b*(s*t), the pairing image.
inline Term bpair(Term s, Term t) { return star(cb(), star(std::move(s), std::move(t))); }

/// Variable-free term of 𝓛_C spelling the digits of `s` as a right-nested product.
inline Term digits_term(const std::string& s) {
  if (s.empty()) throw ParseError("empty string has no term");
  Term t = s.back() == 'a' ? ca() : cb();
  for (std::size_t i = s.size() - 1; i-- > 0;) t = star(s[i] == 'a' ? ca() : cb(), t);
  return t;
}

inline bool term_equal(const Term& s, const Term& t) {
  if (s == t) return true;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TermKind::Var: return s->name == t->name;
    case TermKind::Zero:
    case TermKind::A:
    case TermKind::B: return true;
    case TermKind::Succ: return term_equal(s->left, t->left);
    case TermKind::Pair:
    case TermKind::Star: return term_equal(s->left, t->left) && term_equal(s->right, t->right);
  }
  return false;
}

/// Leaves have depth 0.
inline std::size_t term_depth(const Term& t) {
  switch (t->kind) {
    case TermKind::Pair:
    case TermKind::Star: return 1 + std::max(term_depth(t->left), term_depth(t->right));
    case TermKind::Succ: return 1 + term_depth(t->left);
    default: return 0;
  }
}

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var: out.insert(t->name); break;
    case TermKind::Pair:
    case TermKind::Star: collect_vars(t->left, out); collect_vars(t->right, out); break;
    case TermKind::Succ: collect_vars(t->left, out); break;
    default: break;
  }
}

inline bool is_ground(const Term& t) {
  std::set<std::string> v;
  collect_vars(t, v);
  return v.empty();
}

enum class FKind {
  Eq, SubT, SubStar, SubP, Dom, TStar, Alpha, Beta,
  Not, And, Or, Imp, Iff,
  ForAll, Exists, ExistsUnique,
};

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
  FKind kind;
  std::vector<Term> args;          // atoms
  std::vector<Formula> subs;       // connectives and binder bodies
  std::vector<std::string> vars;   // binders
};

inline bool is_atom(FKind k) { return k <= FKind::Beta; }
inline bool is_binder(FKind k) { return k >= FKind::ForAll; }

inline Formula mk(FKind k, std::vector<Term> args, std::vector<Formula> subs = {}, std::vector<std::string> vars = {}) {
  return std::make_shared<const FNode>(FNode{k, std::move(args), std::move(subs), std::move(vars)});
}

inline Formula eq(Term s, Term t) { return mk(FKind::Eq, {std::move(s), std::move(t)}); }
inline Formula subt(Term s, Term t) { return mk(FKind::SubT, {std::move(s), std::move(t)}); }
inline Formula substar(Term s, Term t) { return mk(FKind::SubStar, {std::move(s), std::move(t)}); }
inline Formula subp(Term s, Term t) { return mk(FKind::SubP, {std::move(s), std::move(t)}); }
inline Formula dom(Term s) { return mk(FKind::Dom, {std::move(s)}); }
inline Formula tstar(Term s) { return mk(FKind::TStar, {std::move(s)}); }
inline Formula alpha_of(Term s, Term t) { return mk(FKind::Alpha, {std::move(s), std::move(t)}); }
inline Formula beta_of(Term s, Term t) { return mk(FKind::Beta, {std::move(s), std::move(t)}); }
inline Formula lnot(Formula f) { return mk(FKind::Not, {}, {std::move(f)}); }
inline Formula land(std::vector<Formula> fs) { return mk(FKind::And, {}, std::move(fs)); }
inline Formula lor(std::vector<Formula> fs) { return mk(FKind::Or, {}, std::move(fs)); }
inline Formula imp(Formula f, Formula g) { return mk(FKind::Imp, {}, {std::move(f), std::move(g)}); }
inline Formula iff(Formula f, Formula g) { return mk(FKind::Iff, {}, {std::move(f), std::move(g)}); }
inline Formula forall(std::vector<std::string> vs, Formula body) { return mk(FKind::ForAll, {}, {std::move(body)}, std::move(vs)); }
inline Formula exists(std::vector<std::string> vs, Formula body) { return mk(FKind::Exists, {}, {std::move(body)}, std::move(vs)); }
inline Formula exists1(std::vector<std::string> vs, Formula body) { return mk(FKind::ExistsUnique, {}, {std::move(body)}, std::move(vs)); }

inline void free_vars_into(const Formula& f, std::set<std::string>& out) {
  if (is_atom(f->kind)) {
    for (const auto& t : f->args) collect_vars(t, out);
    return;
  }
  if (is_binder(f->kind)) {
    std::set<std::string> inner;
    free_vars_into(f->subs[0], inner);
    for (const auto& v : f->vars) inner.erase(v);
    out.insert(inner.begin(), inner.end());
    return;
  }
  for (const auto& g : f->subs) free_vars_into(g, out);
}

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  free_vars_into(f, out);
  return out;
}

inline bool is_closed(const Formula& f) { return free_vars(f).empty(); }

/// Every variable name used anywhere in f, bound or free.
inline void all_names_into(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f->args) collect_vars(t, out);
  out.insert(f->vars.begin(), f->vars.end());
  for (const auto& g : f->subs) all_names_into(g, out);
}

inline bool formula_equal(const Formula& f, const Formula& g) {
  if (f == g) return true;
  if (f->kind != g->kind || f->args.size() != g->args.size() || f->subs.size() != g->subs.size() || f->vars != g->vars) {
    return false;
  }
  for (std::size_t i = 0; i < f->args.size(); ++i) {
    if (!term_equal(f->args[i], g->args[i])) return false;
  }
  for (std::size_t i = 0; i < f->subs.size(); ++i) {
    if (!formula_equal(f->subs[i], g->subs[i])) return false;
  }
  return true;
}

/// Universal closure over the free variables, in sorted order.
inline Formula universal_closure(const Formula& f) {
  const auto fv = free_vars(f);
  if (fv.empty()) return f;
  return forall(std::vector<std::string>(fv.begin(), fv.end()), f);
}

enum class Signature { T, C, CStar };

inline const char* to_string(Signature s) {
  switch (s) {
    case Signature::T: return "L_T";
    case Signature::C: return "L_C";
    case Signature::CStar: return "L_C,substar";
  }
  return "?";
}

namespace detail {
inline bool term_allowed(TermKind k, Signature sig) {
  switch (k) {
    case TermKind::Var: return true;
    case TermKind::Zero:
    case TermKind::Pair: return sig == Signature::T;
    case TermKind::A:
    case TermKind::B:
    case TermKind::Star:
    case TermKind::Succ: return sig != Signature::T;
  }
  return false;
}

inline bool atom_allowed(FKind k, Signature sig) {
  switch (k) {
    case FKind::Eq: return true;
    case FKind::SubT: return sig == Signature::T;
    case FKind::SubStar:
    case FKind::TStar: return sig == Signature::CStar;
    default: return sig != Signature::T;
  }
}

inline void check_term(const Term& t, Signature sig) {
  if (!term_allowed(t->kind, sig)) throw SortError(std::string("term symbol outside ") + to_string(sig));
  if (t->left) check_term(t->left, sig);
  if (t->right) check_term(t->right, sig);
}
}  // namespace detail

/// Throws SortError if f uses a symbol outside `sig`.
inline void check_signature(const Formula& f, Signature sig) {
  if (is_atom(f->kind)) {
    if (!detail::atom_allowed(f->kind, sig)) throw SortError(std::string("relation symbol outside ") + to_string(sig));
    for (const auto& t : f->args) detail::check_term(t, sig);
    return;
  }
  for (const auto& g : f->subs) check_signature(g, sig);
}

inline bool in_signature(const Formula& f, Signature sig) {
  try {
    check_signature(f, sig);
    return true;
  } catch (const SortError&) {
    return false;
  }
}

/// Produces names v1, v2, ... that avoid a given set.
class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken, std::string stem = "w") : taken_(std::move(taken)), stem_(std::move(stem)) {}

  std::string next() {
    for (;;) {
      std::string cand = stem_ + std::to_string(++counter_);
      if (taken_.insert(cand).second) return cand;
    }
  }

  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::set<std::string> taken_;
  std::string stem_;
  std::size_t counter_ = 0;
};

}  // namespace strtree::logic
