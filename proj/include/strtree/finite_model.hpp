#pragma once

// Finite structures for 𝓛_{C,⊑*} built from a pool of variable-free terms.
// Elements are the distinct string values of a, b and the pool terms; x*y is
// the class of the concatenated value when present and the class of b
// otherwise; x ⊑* y holds when both values are tree codes and x codes a
// subterm of y.

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/counting.hpp"
#include "strtree/error.hpp"
#include "strtree/logic/infix.hpp"
#include "strtree/logic/syntax.hpp"
#include "strtree/logic/theories.hpp"
#include "strtree/report.hpp"
#include "strtree/tree_codec.hpp"

namespace strtree {

struct FiniteModel {
  std::vector<BinString> reps;  // class i ↦ its string value, shortlex ascending
  std::size_t a_elem = 0;
  std::size_t b_elem = 1;
  std::vector<std::size_t> op;  // row-major n×n
  std::vector<char> rel;        // row-major n×n

  std::size_t size() const noexcept { return reps.size(); }
  std::size_t star(std::size_t i, std::size_t j) const { return op[i * size() + j]; }
  bool related(std::size_t i, std::size_t j) const { return rel[i * size() + j] != 0; }

  std::optional<std::size_t> find(const BinString& v) const {
    auto it = std::lower_bound(reps.begin(), reps.end(), v);
    if (it == reps.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - reps.begin());
  }

  bool operator==(const FiniteModel&) const = default;
};

/// The model on the value classes of {a, b} ∪ pool.
inline FiniteModel build_model(const std::vector<logic::Term>& pool) {
  std::set<BinString> values{BinString::a(), BinString::b()};
  for (const auto& t : pool) values.insert(BinString(logic::ground_value(t)));
  FiniteModel m;
  m.reps.assign(values.begin(), values.end());
  const std::size_t n = m.size();
  m.a_elem = *m.find(BinString::a());
  m.b_elem = *m.find(BinString::b());
  m.op.assign(n * n, m.b_elem);
  m.rel.assign(n * n, 0);
  std::vector<std::set<BinString>> subs(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_almost_even(m.reps[j])) subs[j] = subterm_codes(m.reps[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (auto k = m.find(concat(m.reps[i], m.reps[j]))) m.op[i * n + j] = *k;
      m.rel[i * n + j] = subs[j].count(m.reps[i]) ? 1 : 0;
    }
  }
  return m;
}

namespace detail {

using GroundMemo = std::unordered_map<const logic::TermNode*, bool>;

// Returns whether t is ground; terms are shared, so each node is visited once.
inline bool ground_subterms(const logic::Term& t, std::vector<logic::Term>& out, GroundMemo& seen) {
  if (auto it = seen.find(t.get()); it != seen.end()) return it->second;
  bool ground = t->kind != logic::TermKind::Var;
  if (t->kind == logic::TermKind::Star || t->kind == logic::TermKind::Pair) {
    const bool l = ground_subterms(t->left, out, seen);
    const bool r = ground_subterms(t->right, out, seen);
    ground = l && r;
  } else if (t->kind == logic::TermKind::Succ) {
    ground = ground_subterms(t->left, out, seen);
  }
  if (ground && std::none_of(out.begin(), out.end(), [&](const logic::Term& s) { return logic::term_equal(s, t); })) {
    out.push_back(t);
  }
  return seen[t.get()] = ground;
}

inline void ground_subterms(const logic::Formula& f, std::vector<logic::Term>& out, GroundMemo& seen) {
  for (const auto& t : f->args) ground_subterms(t, out, seen);
  for (const auto& g : f->subs) ground_subterms(g, out, seen);
}

}  // namespace detail

/// Every variable-free term occurring in the formulas, subterms included, in
/// order of first occurrence.
inline std::vector<logic::Term> occurring_terms(const std::vector<logic::Axiom>& instances) {
  std::vector<logic::Term> out;
  detail::GroundMemo seen;
  for (const auto& ax : instances) detail::ground_subterms(ax.formula, out, seen);
  return out;
}

/// Elements with their representatives, the operation matrix (row i, column
/// j holds i*j) and the relation pairs, all by element index.
inline std::string model_to_text(const FiniteModel& m) {
  std::ostringstream os;
  const std::size_t n = m.size();
  os << "elements " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) os << i << ' ' << m.reps[i] << '\n';
  os << "op\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << m.star(i, j);
    os << '\n';
  }
  std::size_t pairs = 0;
  for (char c : m.rel) pairs += c ? 1 : 0;
  os << "rel " << pairs << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.related(i, j)) os << i << ' ' << j << '\n';
    }
  }
  return os.str();
}

namespace logic {

using ElementAssignment = std::map<std::string, std::size_t>;

/// Tarskian evaluation in a FiniteModel. Formulas are compiled to slot
/// indexed nodes; a quantifier whose outer variables occur only inside at
/// most two terms is memoized on the values of those terms.
class FiniteEvaluator {
 public:
  explicit FiniteEvaluator(const FiniteModel& m) : m_(m), n_(m.size()) {}

  bool eval(const Formula& f, const ElementAssignment& assignment = {}) {
    compile_root(f, assignment);
    return ev(root_);
  }

  /// A refuting assignment for a false universal sentence: the outermost
  /// universal variables, continued through true antecedents into nested
  /// universals. Empty when f holds or has no such prefix.
  ElementAssignment counterexample(const Formula& f, const ElementAssignment& assignment = {}) {
    compile_root(f, assignment);
    ElementAssignment out;
    std::size_t node = root_;
    for (;;) {
      const Node& q = nodes_[node];
      if (q.kind == FKind::Imp && ev(q.subs[0])) {
        node = q.subs[1];
        continue;
      }
      if (q.kind != FKind::ForAll) break;
      bool found = false;
      odometer(q.slots, [&] {
        if (!ev(q.subs[0])) {
          found = true;
          return true;
        }
        return false;
      });
      if (!found) break;
      for (auto s : q.slots) out[slot_names_[s]] = env_[s];
      node = q.subs[0];
    }
    return out;
  }

 private:
  struct CTerm {
    TermKind kind;  // Var (slot), A (element in `a`), Star
    std::size_t a = 0, l = 0, r = 0;
  };
  using TermKey = std::array<std::size_t, 4>;
  struct TermKeyHash {
    std::size_t operator()(const TermKey& k) const noexcept {
      std::size_t h = 0;
      for (auto v : k) h = h * 1000003u ^ v;
      return h;
    }
  };
  struct Node {
    FKind kind;
    std::vector<std::size_t> terms;
    std::vector<std::size_t> subs;
    std::vector<std::size_t> slots;
    std::vector<std::size_t> params;  // memo key terms
    std::vector<std::size_t> below_terms, below_slots;
    bool memo = false;
    std::vector<char> table;  // 0 unknown, 1 false, 2 true
  };

  void compile_root(const Formula& f, const ElementAssignment& assignment) {
    if (compiled_ == f && compiled_with_ == assignment) return;
    compiled_ = f;
    compiled_with_ = assignment;
    terms_.clear();
    term_slots_.clear();
    term_ids_.clear();
    nodes_.clear();
    slot_names_.clear();
    env_.clear();
    std::vector<std::pair<std::string, std::size_t>> scope;
    for (const auto& [name, e] : assignment) {
      if (e >= n_) throw Error("element out of range for variable " + name);
      scope.emplace_back(name, new_slot(name));
      env_.back() = e;
    }
    root_ = compile(f, scope);
    for (std::size_t i = 0; i < nodes_.size(); ++i) plan_memo(i);
    for (auto& q : nodes_) {
      q.below_terms = {};
      q.below_slots = {};
    }
  }

  std::size_t new_slot(const std::string& name) {
    slot_names_.push_back(name);
    env_.push_back(0);
    return slot_names_.size() - 1;
  }

  std::size_t intern(CTerm t) {
    const TermKey key{static_cast<std::size_t>(t.kind), t.a, t.l, t.r};
    auto it = term_ids_.find(key);
    if (it != term_ids_.end()) return it->second;
    terms_.push_back(t);
    std::vector<std::size_t> slots;
    if (t.kind == TermKind::Var) slots.push_back(t.a);
    if (t.kind == TermKind::Star) slots = sorted_union(term_slots_[t.l], term_slots_[t.r]);
    term_slots_.push_back(std::move(slots));
    return term_ids_[key] = terms_.size() - 1;
  }

  std::size_t compile_term(const Term& t, const std::vector<std::pair<std::string, std::size_t>>& scope) {
    switch (t->kind) {
      case TermKind::Var:
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->first == t->name) return intern({TermKind::Var, it->second});
        }
        throw UnassignedVariable(t->name);
      case TermKind::A: return intern({TermKind::A, m_.a_elem});
      case TermKind::B: return intern({TermKind::A, m_.b_elem});
      case TermKind::Star: {
        const auto l = compile_term(t->left, scope);
        const auto r = compile_term(t->right, scope);
        if (terms_[l].kind == TermKind::A && terms_[r].kind == TermKind::A) {
          return intern({TermKind::A, m_.star(terms_[l].a, terms_[r].a)});
        }
        return intern({TermKind::Star, 0, l, r});
      }
      default: throw SortError("term symbol outside L_{C,substar} in a finite model");
    }
  }

  std::size_t compile(const Formula& f, std::vector<std::pair<std::string, std::size_t>>& scope) {
    Node node{f->kind, {}, {}, {}, {}, {}, {}, false, {}};
    switch (f->kind) {
      case FKind::Eq:
      case FKind::SubStar:
      case FKind::SubP:
      case FKind::TStar:
        for (const auto& t : f->args) node.terms.push_back(compile_term(t, scope));
        break;
      case FKind::ForAll:
      case FKind::Exists:
      case FKind::ExistsUnique: {
        const std::size_t mark = scope.size();
        for (const auto& v : f->vars) {
          node.slots.push_back(new_slot(v));
          scope.emplace_back(v, node.slots.back());
        }
        node.subs.push_back(compile(f->subs[0], scope));
        scope.resize(mark);
        break;
      }
      case FKind::Not:
      case FKind::And:
      case FKind::Or:
      case FKind::Imp:
      case FKind::Iff:
        for (const auto& g : f->subs) node.subs.push_back(compile(g, scope));
        break;
      default: throw SortError(std::string("symbol ") + to_string_kind(f->kind) + " not interpreted in a finite model");
    }
    std::vector<std::size_t> ts = node.terms, ss = node.slots;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::sort(ss.begin(), ss.end());
    for (auto c : node.subs) {
      ts = sorted_union(ts, nodes_[c].below_terms);
      ss = sorted_union(ss, nodes_[c].below_slots);
    }
    node.below_terms = std::move(ts);
    node.below_slots = std::move(ss);
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  static const char* to_string_kind(FKind k) {
    switch (k) {
      case FKind::SubT: return "subt";
      case FKind::Dom: return "dom";
      case FKind::Alpha: return "alpha";
      case FKind::Beta: return "beta";
      default: return "?";
    }
  }

  // ---- memo planning -------------------------------------------------------

  static std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::vector<std::size_t> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  }

  // Maximal terms below `t` that use outer slots only; false past two.
  bool collect_params(std::size_t t, const std::vector<char>& inner, std::vector<std::size_t>& params) const {
    const auto& used = term_slots_[t];
    if (used.empty()) return true;
    const bool mixed = std::any_of(used.begin(), used.end(), [&](auto s) { return inner[s] != 0; });
    if (!mixed) {
      if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
      return params.size() <= 2;
    }
    const CTerm& c = terms_[t];
    if (c.kind == TermKind::Star) {
      return collect_params(c.l, inner, params) && collect_params(c.r, inner, params);
    }
    return true;
  }

  void plan_memo(std::size_t i) {
    Node& q = nodes_[i];
    if (!is_binder(q.kind)) return;
    std::vector<char> inner(slot_names_.size(), 0);
    for (auto s : q.below_slots) inner[s] = 1;
    std::vector<std::size_t> params;
    for (auto t : q.below_terms) {
      if (!collect_params(t, inner, params)) return;
    }
    std::sort(params.begin(), params.end());
    q.params = std::move(params);
    std::size_t cells = 1;
    for (std::size_t k = 0; k < q.params.size(); ++k) cells *= n_;
    q.memo = true;
    q.table.assign(cells, 0);
  }

  // ---- evaluation -----------------------------------------------------------

  std::size_t tv(std::size_t t) const {
    const CTerm& c = terms_[t];
    switch (c.kind) {
      case TermKind::Var: return env_[c.a];
      case TermKind::Star: return m_.star(tv(c.l), tv(c.r));
      default: return c.a;
    }
  }

  // x ⊑p y through its first-order expansion, evaluated in the model.
  bool subp(std::size_t x, std::size_t y) {
    if (subp_.empty()) subp_.assign(n_ * n_, 0);
    char& cell = subp_[x * n_ + y];
    if (cell) return cell == 2;
    bool r = x == y;
    for (std::size_t w = 0; !r && w < n_; ++w) r = m_.star(x, w) == y || m_.star(w, x) == y;
    for (std::size_t z1 = 0; !r && z1 < n_; ++z1) {
      for (std::size_t z2 = 0; !r && z2 < n_; ++z2) {
        r = m_.star(z1, m_.star(x, z2)) == y || m_.star(m_.star(z1, x), z2) == y;
      }
    }
    cell = r ? 2 : 1;
    return r;
  }

  // T*(x) ≡ x = a ∨ ∃y,z x = b*(y*z)
  bool tstar_at(std::size_t x) const {
    if (x == m_.a_elem) return true;
    for (std::size_t y = 0; y < n_; ++y) {
      for (std::size_t z = 0; z < n_; ++z) {
        if (m_.star(m_.b_elem, m_.star(y, z)) == x) return true;
      }
    }
    return false;
  }

  template <class F>
  bool odometer(const std::vector<std::size_t>& slots, F&& step) {
    for (auto s : slots) env_[s] = 0;
    if (n_ == 0) return false;
    for (;;) {
      if (step()) return true;
      std::size_t k = 0;
      while (k < slots.size()) {
        if (++env_[slots[k]] < n_) break;
        env_[slots[k]] = 0;
        ++k;
      }
      if (k == slots.size()) return false;
    }
  }

  bool quantify(const Node& q) {
    const std::size_t body = q.subs[0];
    switch (q.kind) {
      case FKind::ForAll: return !odometer(q.slots, [&] { return !ev(body); });
      case FKind::Exists: return odometer(q.slots, [&] { return ev(body); });
      default: {
        int count = 0;
        odometer(q.slots, [&] { return ev(body) && ++count >= 2; });
        return count == 1;
      }
    }
  }

  bool ev(std::size_t i) {
    Node& q = nodes_[i];
    switch (q.kind) {
      case FKind::Eq: return tv(q.terms[0]) == tv(q.terms[1]);
      case FKind::SubStar: return m_.related(tv(q.terms[0]), tv(q.terms[1]));
      case FKind::SubP: return subp(tv(q.terms[0]), tv(q.terms[1]));
      case FKind::TStar: return tstar_at(tv(q.terms[0]));
      case FKind::Not: return !ev(q.subs[0]);
      case FKind::And:
        for (auto s : q.subs) {
          if (!ev(s)) return false;
        }
        return true;
      case FKind::Or:
        for (auto s : q.subs) {
          if (ev(s)) return true;
        }
        return false;
      case FKind::Imp: return !ev(q.subs[0]) || ev(q.subs[1]);
      case FKind::Iff: return ev(q.subs[0]) == ev(q.subs[1]);
      default: break;
    }
    if (!q.memo) return quantify(q);
    std::size_t key = 0;
    for (auto t : q.params) key = key * n_ + tv(t);
    char cell = nodes_[i].table[key];
    if (cell) return cell == 2;
    const bool r = quantify(nodes_[i]);
    nodes_[i].table[key] = r ? 2 : 1;
    return r;
  }

  const FiniteModel& m_;
  std::size_t n_;
  std::vector<CTerm> terms_;
  std::vector<std::vector<std::size_t>> term_slots_;
  Formula compiled_;
  ElementAssignment compiled_with_;
  std::unordered_map<TermKey, std::size_t, TermKeyHash> term_ids_;
  std::vector<Node> nodes_;
  std::vector<std::string> slot_names_;
  std::vector<std::size_t> env_;
  std::size_t root_ = 0;
  std::vector<char> subp_;
};

inline bool eval_finite(const Formula& phi, const FiniteModel& model, const ElementAssignment& assignment = {}) {
  FiniteEvaluator ev(model);
  return ev.eval(phi, assignment);
}

}  // namespace logic

/// One case per instance; failures carry the refuting assignment by
/// representative string.
inline VerificationReport check_axioms(const FiniteModel& model, const std::vector<logic::Axiom>& instances) {
  VerificationReport r;
  r.suite = "check-axioms";
  r.bound = model.size();  // elements
  timed(r, [&] {
    logic::FiniteEvaluator ev(model);
    for (const auto& ax : instances) {
      if (ev.eval(ax.formula)) {
        ++r.cases;
        continue;
      }
      std::map<std::string, std::string> w;
      for (const auto& [name, e] : ev.counterexample(ax.formula)) w[name] = model.reps[e].str();
      r.check(false, ax.id, std::move(w));
    }
  });
  r.sort_failures();
  return r;
}

}  // namespace strtree
