#pragma once

// Relativized translations of 𝓛_T formulas: into 𝓛_C with domain 𝒜ℰ and
// ⊑ ↦ ⊆p, and into 𝓛_{C,⊑*} with domain T* and ⊑ ↦ ⊑*. In both, 0 ↦ a
// and (s,t) ↦ b*(s*t).

#include <string>
#include <vector>

#include "strtree/logic/syntax.hpp"

namespace strtree::logic {

namespace detail {

struct TranslationTarget {
  FKind sub;     // image of ⊑
  FKind domain;  // relativizing atom
};

inline Term translate_term(const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return t;
    case TermKind::Zero: return ca();
    case TermKind::Pair: return bpair(translate_term(t->left), translate_term(t->right));
    default: throw SortError("term symbol outside L_T");
  }
}

inline Formula relativize_guard(const std::vector<std::string>& vs, FKind domain) {
  std::vector<Formula> gs;
  for (const auto& v : vs) gs.push_back(mk(domain, {var(v)}));
  return gs.size() == 1 ? gs[0] : land(std::move(gs));
}

inline Formula translate(const Formula& f, const TranslationTarget& tgt) {
  switch (f->kind) {
    case FKind::Eq: return eq(translate_term(f->args[0]), translate_term(f->args[1]));
    case FKind::SubT: return mk(tgt.sub, {translate_term(f->args[0]), translate_term(f->args[1])});
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
    case FKind::Imp:
    case FKind::Iff: {
      std::vector<Formula> subs;
      for (const auto& g : f->subs) subs.push_back(translate(g, tgt));
      return mk(f->kind, {}, std::move(subs));
    }
    case FKind::ForAll:
      return forall(f->vars, imp(relativize_guard(f->vars, tgt.domain), translate(f->subs[0], tgt)));
    case FKind::Exists:
    case FKind::ExistsUnique: {
      std::vector<Formula> conj;
      for (const auto& v : f->vars) conj.push_back(mk(tgt.domain, {var(v)}));
      conj.push_back(translate(f->subs[0], tgt));
      return mk(f->kind, {}, {land(std::move(conj))}, f->vars);
    }
    default: throw SortError("relation symbol outside L_T");
  }
}

}  // namespace detail

/// 𝓛_T → 𝓛_C: ⊑ ↦ ⊆p, quantifiers relativized to (dom v).
inline Formula translate_T(const Formula& phi) {
  check_signature(phi, Signature::T);
  return detail::translate(phi, {FKind::SubP, FKind::Dom});
}

/// 𝓛_T → 𝓛_{C,⊑*}: ⊑ ↦ ⊑*, quantifiers relativized to (tstar v).
inline Formula translate_WT(const Formula& phi) {
  check_signature(phi, Signature::T);
  return detail::translate(phi, {FKind::SubStar, FKind::TStar});
}

/// Image of a variable-free 𝓛_T term.
inline Term translate_closed_term(const Term& t) {
  if (!is_ground(t)) throw SortError("term has variables");
  return detail::translate_term(t);
}

}  // namespace strtree::logic
