#pragma once

// Evaluation over Σ* with every quantifier ranging over the strings of length
// at most a bound. Antecedents of universal implications and conjuncts of
// existential bodies act as guards: variables are bound in the order that
// keeps candidate sets smallest (a variable fixed by an equation, a substring
// of a known string, an almost-even string, ...), and a branch is cut as soon
// as a fully assigned guard fails. This is an optimization only: every
// candidate set is a superset of the values that can satisfy the guard.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/counting.hpp"
#include "strtree/error.hpp"
#include "strtree/logic/syntax.hpp"
#include "strtree/tree_codec.hpp"

namespace strtree::logic {

using Assignment = std::map<std::string, BinString>;

/// T*(x): x = a or x = b*(y*z) for some y, z.
inline bool is_tstar(std::string_view s) { return s == "a" || (s.size() >= 3 && s[0] == 'b'); }

class BoundedEvaluator {
 public:
  explicit BoundedEvaluator(std::size_t bound) : bound_(bound) {
    for (const auto& s : all_strings(bound)) {
      domain_.push_back(s.str());
      if (is_almost_even(s)) ae_.push_back(s.str());
      if (is_tstar(s.str())) tstar_.push_back(s.str());
    }
  }

  std::size_t bound() const noexcept { return bound_; }

  bool eval(const Formula& f, const Assignment& assignment = {}) {
    env_.clear();
    for (const auto& [k, v] : assignment) env_.emplace_back(k, v.str());
    return holds(f);
  }

  /// For a false universal sentence, values of its outermost variables that
  /// falsify the body; empty otherwise.
  Assignment counterexample(const Formula& f, const Assignment& assignment = {}) {
    env_.clear();
    for (const auto& [k, v] : assignment) env_.emplace_back(k, v.str());
    captured_.clear();
    if (f->kind != FKind::ForAll) return {};
    capture_ = &plan_for(f);
    holds(f);
    capture_ = nullptr;
    return captured_;
  }

  /// Value of a term under an assignment.
  std::string value(const Term& t, const Assignment& assignment = {}) {
    env_.clear();
    for (const auto& [k, v] : assignment) env_.emplace_back(k, v.str());
    return term_value(t);
  }

 private:
  using Values = std::vector<std::string>;

  struct Plan {
    FKind kind;
    std::vector<std::string> vars;
    std::vector<Formula> guards;
    std::vector<std::vector<std::size_t>> guard_vars;  // plan-variable indices per guard
    std::vector<std::vector<std::size_t>> var_guards;  // guards mentioning each variable
    std::vector<std::size_t> closed_guards;             // guards with no plan variable
    Formula body;                                       // ForAll only
    std::vector<Formula> split;                         // Exists over a disjunction
  };

  // ---- terms -------------------------------------------------------------

  const std::string* lookup(const std::string& name) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  std::string term_value(const Term& t) const {
    switch (t->kind) {
      case TermKind::Var: {
        const auto* v = lookup(t->name);
        if (!v) throw UnassignedVariable(t->name);
        return *v;
      }
      case TermKind::A: return "a";
      case TermKind::B: return "b";
      case TermKind::Star: return term_value(t->left) + term_value(t->right);
      case TermKind::Succ: {
        std::string s = term_value(t->left);
        if (s == "a") return "b";
        s.push_back('b');
        return s;
      }
      case TermKind::Zero:
      case TermKind::Pair: break;
    }
    throw SortError("L_T term symbol evaluated over strings");
  }

  // ---- atoms -------------------------------------------------------------

  bool subterm_code(const std::string& s, const std::string& t) {
    if (!is_almost_even(s) || !is_almost_even(t)) return false;
    auto it = subterm_cache_.find(t);
    if (it == subterm_cache_.end()) {
      std::set<std::string> codes;
      for (const auto& c : subterm_codes(BinString(t))) codes.insert(c.str());
      it = subterm_cache_.emplace(t, std::move(codes)).first;
    }
    return it->second.count(s) > 0;
  }

  bool atom(const Formula& f) {
    switch (f->kind) {
      case FKind::Eq: return term_value(f->args[0]) == term_value(f->args[1]);
      case FKind::SubP: return term_value(f->args[1]).find(term_value(f->args[0])) != std::string::npos;
      case FKind::SubStar: return subterm_code(term_value(f->args[0]), term_value(f->args[1]));
      case FKind::Dom: return is_almost_even(term_value(f->args[0]));
      case FKind::TStar: return is_tstar(term_value(f->args[0]));
      case FKind::Alpha:
      case FKind::Beta: {
        const std::string s = term_value(f->args[0]);
        const std::size_t na = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'a'));
        const std::size_t n = f->kind == FKind::Alpha ? na : s.size() - na;
        return term_value(f->args[1]) == std::string(n + 1, 'b');
      }
      case FKind::SubT: throw SortError("subterm relation of L_T evaluated over strings");
      default: break;
    }
    throw Error("not an atom");
  }

  bool holds(const Formula& f) {
    switch (f->kind) {
      case FKind::Not: return !holds(f->subs[0]);
      case FKind::And:
        for (const auto& g : f->subs) {
          if (!holds(g)) return false;
        }
        return true;
      case FKind::Or:
        for (const auto& g : f->subs) {
          if (holds(g)) return true;
        }
        return false;
      case FKind::Imp: return !holds(f->subs[0]) || holds(f->subs[1]);
      case FKind::Iff: return holds(f->subs[0]) == holds(f->subs[1]);
      case FKind::ForAll:
      case FKind::Exists:
      case FKind::ExistsUnique: return quantifier(f);
      default: return atom(f);
    }
  }

  // ---- plans -------------------------------------------------------------

  static void conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f->kind == FKind::And) {
      for (const auto& g : f->subs) conjuncts(g, out);
    } else {
      out.push_back(f);
    }
  }

  static bool mentions_any(const std::vector<Formula>& fs, const std::vector<std::string>& vs) {
    for (const auto& f : fs) {
      const auto fv = free_vars(f);
      for (const auto& v : vs) {
        if (fv.count(v)) return true;
      }
    }
    return false;
  }

  static bool disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    for (const auto& x : a) {
      if (std::find(b.begin(), b.end(), x) != b.end()) return false;
    }
    return true;
  }

  const Plan& plan_for(const Formula& f) {
    auto it = plans_.find(f.get());
    if (it != plans_.end()) return it->second;
    Plan p;
    p.kind = f->kind;
    p.vars = f->vars;
    if (f->kind == FKind::ForAll) {
      Formula b = f->subs[0];
      for (;;) {
        if (b->kind == FKind::Imp) {
          conjuncts(b->subs[0], p.guards);
          b = b->subs[1];
        } else if (b->kind == FKind::ForAll && disjoint(b->vars, p.vars) && !mentions_any(p.guards, b->vars)) {
          p.vars.insert(p.vars.end(), b->vars.begin(), b->vars.end());
          b = b->subs[0];
        } else {
          break;
        }
      }
      p.body = b;
    } else {
      conjuncts(f->subs[0], p.guards);
      if (f->kind == FKind::Exists) {
        bool merged = true;
        while (merged) {
          merged = false;
          for (std::size_t i = 0; i < p.guards.size(); ++i) {
            const Formula g = p.guards[i];
            if (g->kind != FKind::Exists || !disjoint(g->vars, p.vars)) continue;
            std::vector<Formula> others(p.guards);
            others.erase(others.begin() + static_cast<long>(i));
            if (mentions_any(others, g->vars)) continue;
            p.vars.insert(p.vars.end(), g->vars.begin(), g->vars.end());
            p.guards = std::move(others);
            conjuncts(g->subs[0], p.guards);
            merged = true;
            break;
          }
        }
        if (p.guards.size() == 1 && p.guards[0]->kind == FKind::Or) {
          for (const auto& d : p.guards[0]->subs) p.split.push_back(exists(p.vars, d));
        }
      }
    }
    p.var_guards.resize(p.vars.size());
    for (std::size_t g = 0; g < p.guards.size(); ++g) {
      const auto fv = free_vars(p.guards[g]);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (fv.count(p.vars[i])) {
          idx.push_back(i);
          p.var_guards[i].push_back(g);
        }
      }
      if (idx.empty()) p.closed_guards.push_back(g);
      p.guard_vars.push_back(std::move(idx));
    }
    return plans_.emplace(f.get(), std::move(p)).first->second;
  }

  // ---- candidate generation ------------------------------------------------

  struct Piece {
    bool known;
    std::string value;  // known pieces
    Term term;          // unknown pieces
  };

  bool is_masked(const std::string& n) const {
    return std::find(masked_.begin(), masked_.end(), n) != masked_.end();
  }

  bool known(const Term& t) const {
    switch (t->kind) {
      case TermKind::Var: return !is_masked(t->name) && lookup(t->name);
      case TermKind::Star: return known(t->left) && known(t->right);
      case TermKind::Succ: return known(t->left);
      case TermKind::A:
      case TermKind::B: return true;
      default: return false;
    }
  }

  void flatten(const Term& t, std::vector<Piece>& out) const {
    if (t->kind == TermKind::Star && !known(t)) {
      flatten(t->left, out);
      flatten(t->right, out);
      return;
    }
    if (known(t)) {
      std::string v = term_value(t);
      if (!out.empty() && out.back().known) {
        out.back().value += v;
      } else {
        out.push_back({true, std::move(v), nullptr});
      }
      return;
    }
    out.push_back({false, {}, t});
  }

  static bool is_var(const Term& t, const std::string& v) { return t->kind == TermKind::Var && t->name == v; }

  static Values substrings(const std::string& s) {
    Values out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t n = 1; i + n <= s.size(); ++n) out.push_back(s.substr(i, n));
    }
    return out;
  }

  std::optional<Values> eq_candidates(const Term& lhs, const Term& rhs, const std::string& v) const {
    std::vector<Piece> L, R;
    flatten(lhs, L);
    flatten(rhs, R);
    auto all_known = [](const std::vector<Piece>& p) { return p.size() == 1 && p[0].known; };
    if (!all_known(L) && !all_known(R)) {
      // Both sides open: the known prefixes (and suffixes) must agree.
      const std::string lp = L.front().known ? L.front().value : "";
      const std::string rp = R.front().known ? R.front().value : "";
      const std::size_t n = std::min(lp.size(), rp.size());
      if (lp.compare(0, n, rp, 0, n) != 0) return Values{};
      const std::string ls = L.back().known ? L.back().value : "";
      const std::string rs = R.back().known ? R.back().value : "";
      const std::size_t m = std::min(ls.size(), rs.size());
      if (ls.compare(ls.size() - m, m, rs, rs.size() - m, m) != 0) return Values{};
      return std::nullopt;
    }
    if (all_known(L) && all_known(R)) return std::nullopt;
    const std::string& K = all_known(L) ? L[0].value : R[0].value;
    const std::vector<Piece>& P = all_known(L) ? R : L;
    std::size_t pre = 0, suf = 0;
    if (P.front().known) {
      if (K.compare(0, P.front().value.size(), P.front().value) != 0 || P.front().value.size() > K.size()) return Values{};
      pre = P.front().value.size();
    }
    if (P.back().known && P.size() > 1) {
      const auto& s = P.back().value;
      if (s.size() + pre > K.size() || K.compare(K.size() - s.size(), s.size(), s) != 0) return Values{};
      suf = s.size();
    }
    if (pre + suf >= K.size()) return Values{};
    const std::string M = K.substr(pre, K.size() - pre - suf);
    std::vector<std::size_t> unknown;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (!P[i].known) unknown.push_back(i);
    }
    if (unknown.size() == 1) {
      const Term& u = P[unknown[0]].term;
      if (is_var(u, v)) return Values{M};
      if (u->kind == TermKind::Succ && is_var(u->left, v)) {
        Values out;
        if (M == "b") out.push_back("a");
        if (M.size() >= 2 && M.back() == 'b') out.push_back(M.substr(0, M.size() - 1));
        return out;
      }
      return std::nullopt;
    }
    bool as_piece = false;
    for (auto i : unknown) as_piece = as_piece || is_var(P[i].term, v);
    if (!as_piece) return std::nullopt;
    Values out;
    if (is_var(P[unknown.front()].term, v) && unknown.front() == (P.front().known ? 1u : 0u)) {
      for (std::size_t n = 1; n < M.size(); ++n) out.push_back(M.substr(0, n));
    } else if (is_var(P[unknown.back()].term, v) && unknown.back() == P.size() - (P.back().known && P.size() > 1 ? 2 : 1)) {
      for (std::size_t n = 1; n < M.size(); ++n) out.push_back(M.substr(M.size() - n));
    } else {
      out = substrings(M);
    }
    return out;
  }

  std::optional<Values> candidates(const Formula& g, const std::string& v) {
    switch (g->kind) {
      case FKind::Eq: return eq_candidates(g->args[0], g->args[1], v);
      case FKind::SubP: {
        if (!known(g->args[1])) return std::nullopt;
        std::vector<Piece> P;
        flatten(g->args[0], P);
        bool as_piece = false;
        for (const auto& p : P) as_piece = as_piece || (!p.known && is_var(p.term, v));
        if (!as_piece) return std::nullopt;
        return substrings(term_value(g->args[1]));
      }
      case FKind::SubStar: {
        if (!is_var(g->args[0], v) || !known(g->args[1])) return std::nullopt;
        const std::string t = term_value(g->args[1]);
        Values out;
        if (is_almost_even(t)) {
          for (const auto& c : subterm_codes(BinString(t))) out.push_back(c.str());
        }
        return out;
      }
      case FKind::Dom:
        if (is_var(g->args[0], v)) return ae_;
        return std::nullopt;
      case FKind::TStar:
        if (is_var(g->args[0], v)) return tstar_;
        return std::nullopt;
      case FKind::Alpha:
      case FKind::Beta: {
        if (!is_var(g->args[1], v) || !known(g->args[0])) return std::nullopt;
        const std::string s = term_value(g->args[0]);
        const std::size_t na = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'a'));
        return Values{std::string((g->kind == FKind::Alpha ? na : s.size() - na) + 1, 'b')};
      }
      case FKind::And: {
        std::optional<Values> best;
        for (const auto& h : g->subs) {
          auto c = candidates(h, v);
          if (c && (!best || c->size() < best->size())) best = std::move(c);
        }
        return best;
      }
      case FKind::Or: {
        Values all;
        for (const auto& h : g->subs) {
          auto c = candidates(h, v);
          if (!c) return std::nullopt;
          all.insert(all.end(), c->begin(), c->end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
      }
      case FKind::Exists:
      case FKind::ExistsUnique: {
        if (std::find(g->vars.begin(), g->vars.end(), v) != g->vars.end()) return std::nullopt;
        const std::size_t mark = masked_.size();
        masked_.insert(masked_.end(), g->vars.begin(), g->vars.end());
        auto c = candidates(g->subs[0], v);
        masked_.resize(mark);
        return c;
      }
      default: return std::nullopt;
    }
  }

  // ---- search --------------------------------------------------------------

  enum class Outcome { Continue, Stop };

  struct Search {
    const Plan& plan;
    std::vector<char> assigned;
    std::size_t count = 0;  // satisfying assignments (Exists/ExistsUnique)
    bool all = true;        // ForAll verdict
  };

  bool guard_ok(const Plan& p, std::size_t g) { return holds(p.guards[g]); }

  Outcome leaf(Search& s) {
    if (s.plan.kind == FKind::ForAll) {
      if (!holds(s.plan.body)) {
        s.all = false;
        if (&s.plan == capture_ && captured_.empty()) {
          for (const auto& v : s.plan.vars) captured_.emplace(v, BinString(*lookup(v)));
        }
        return Outcome::Stop;
      }
      return Outcome::Continue;
    }
    ++s.count;
    const std::size_t enough = s.plan.kind == FKind::Exists ? 1 : 2;
    return s.count >= enough ? Outcome::Stop : Outcome::Continue;
  }

  Outcome search(Search& s, std::size_t n_assigned) {
    const Plan& p = s.plan;
    if (n_assigned == p.vars.size()) return leaf(s);
    // Mask every unassigned plan variable so outer bindings of the same name
    // are not mistaken for known values.
    const std::size_t mark = masked_.size();
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
      if (!s.assigned[i]) masked_.push_back(p.vars[i]);
    }
    std::size_t pick = p.vars.size();
    std::optional<Values> best;
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
      if (s.assigned[i]) continue;
      if (pick == p.vars.size()) pick = i;
      for (auto g : p.var_guards[i]) {
        auto c = candidates(p.guards[g], p.vars[i]);
        if (c && (!best || c->size() < best->size())) {
          best = std::move(c);
          pick = i;
        }
      }
      if (best && best->size() <= 1) break;
    }
    masked_.resize(mark);
    const Values& values = best ? *best : domain_;
    const std::string& name = p.vars[pick];
    s.assigned[pick] = 1;
    Outcome out = Outcome::Continue;
    for (const auto& val : values) {
      if (val.empty() || val.size() > bound_) continue;
      // Guards are evaluated only once all their plan variables are bound,
      // so outer bindings of the same names stay hidden.
      env_.emplace_back(name, val);
      bool ok = true;
      for (auto g : p.var_guards[pick]) {
        bool complete = true;
        for (auto j : p.guard_vars[g]) complete = complete && s.assigned[j];
        if (complete && !guard_ok(p, g)) {
          ok = false;
          break;
        }
      }
      if (ok) out = search(s, n_assigned + 1);
      env_.pop_back();
      if (out == Outcome::Stop) break;
    }
    s.assigned[pick] = 0;
    return out;
  }

  bool quantifier(const Formula& f) {
    const Plan& p = plan_for(f);
    if (!p.split.empty()) {
      for (const auto& d : p.split) {
        if (holds(d)) return true;
      }
      return false;
    }
    Search s{p, std::vector<char>(p.vars.size(), 0)};
    bool closed_ok = true;
    for (auto g : p.closed_guards) closed_ok = closed_ok && guard_ok(p, g);
    if (closed_ok) search(s, 0);
    switch (p.kind) {
      case FKind::ForAll: return s.all;
      case FKind::Exists: return s.count >= 1;
      default: return s.count == 1;
    }
  }

  std::size_t bound_;
  Values domain_, ae_, tstar_;
  std::vector<std::pair<std::string, std::string>> env_;
  std::vector<std::string> masked_;
  std::unordered_map<const FNode*, Plan> plans_;
  const Plan* capture_ = nullptr;
  Assignment captured_;
  std::unordered_map<std::string, std::set<std::string>> subterm_cache_;
};

/// Truth of phi with quantifiers ranging over strings of length ≤ bound.
inline bool eval_bounded(const Formula& phi, std::size_t bound, const Assignment& assignment = {}) {
  BoundedEvaluator ev(bound);
  return ev.eval(phi, assignment);
}

}  // namespace strtree::logic
