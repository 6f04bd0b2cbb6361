#pragma once

// Axioms and schema instances of T, WT, QT⁺, WQT and WQT*, and the lemma
// statements checked over the standard model.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strtree/logic/infix.hpp"
#include "strtree/logic/syntax.hpp"
#include "strtree/tree_codec.hpp"

namespace strtree::logic {

struct Axiom {
  std::string id;
  Formula formula;
};

namespace th {
inline Term v(const char* n) { return var(n); }
inline Formula neq(Term s, Term t) { return lnot(eq(std::move(s), std::move(t))); }
}  // namespace th

/// 0 ↦ (zero), (s,t) ↦ (pair s t).
inline Term tree_to_term(const TreeTerm& t) {
  if (t.is_leaf()) return zero();
  return pair(tree_to_term(t.left()), tree_to_term(t.right()));
}

/// τ as a term: 0 ↦ a, (u,v) ↦ b*(u*v).
inline Term tau_term(const TreeTerm& t) {
  if (t.is_leaf()) return ca();
  return bpair(tau_term(t.left()), tau_term(t.right()));
}

inline std::vector<Axiom> axioms_T() {
  using th::v;
  return {
      {"T1", forall({"x", "y"}, th::neq(pair(v("x"), v("y")), zero()))},
      {"T2", forall({"x", "y", "z", "w"}, imp(eq(pair(v("x"), v("y")), pair(v("z"), v("w"))),
                                              land({eq(v("x"), v("z")), eq(v("y"), v("w"))})))},
      {"T3", forall({"x"}, iff(subt(v("x"), zero()), eq(v("x"), zero())))},
      {"T4", forall({"x", "y", "z"}, iff(subt(v("x"), pair(v("y"), v("z"))),
                                         lor({eq(v("x"), pair(v("y"), v("z"))), subt(v("x"), v("y")),
                                              subt(v("x"), v("z"))})))},
  };
}

/// Distinct subterms of t, ordered by code.
inline std::vector<TreeTerm> subterms(const TreeTerm& t) {
  std::vector<TreeTerm> out;
  for (const auto& code : subterm_codes(encode_tree(t))) out.push_back(decode_tree(code));
  return out;
}

/// WT2 body ∀x (x ⊑ t ↔ ⋁_{s ∈ S(t)} x = s); a single disjunct stays bare.
inline Formula wt2_instance(const TreeTerm& t) {
  std::vector<Formula> ds;
  for (const auto& s : subterms(t)) ds.push_back(eq(var("x"), tree_to_term(s)));
  Formula rhs = ds.size() == 1 ? ds[0] : lor(std::move(ds));
  return forall({"x"}, iff(subt(var("x"), tree_to_term(t)), std::move(rhs)));
}

/// WT1 for unordered pairs of distinct trees of depth ≤ depth, then WT2 for
/// each such tree.
inline std::vector<Axiom> axioms_WT(std::size_t depth) {
  const auto trees = trees_up_to_depth(depth);
  std::vector<Axiom> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      out.push_back({"WT1[" + trees[i].to_string() + "," + trees[j].to_string() + "]",
                     th::neq(tree_to_term(trees[i]), tree_to_term(trees[j]))});
    }
  }
  for (const auto& t : trees) out.push_back({"WT2[" + t.to_string() + "]", wt2_instance(t)});
  return out;
}

inline std::vector<Axiom> axioms_QTplus() {
  using th::v;
  const auto x = v("x"), y = v("y"), z = v("z");
  const auto a = ca(), b = cb();
  return {
      {"QT1", forall({"x", "y", "z"}, eq(star(x, star(y, z)), star(star(x, y), z)))},
      {"QT2", forall({"x", "y"}, land({th::neq(star(x, y), a), th::neq(star(x, y), b)}))},
      {"QT3", forall({"x", "y"}, land({imp(eq(star(x, a), star(y, a)), eq(x, y)),
                                       imp(eq(star(x, b), star(y, b)), eq(x, y)),
                                       imp(eq(star(a, x), star(a, y)), eq(x, y)),
                                       imp(eq(star(b, x), star(b, y)), eq(x, y))}))},
      {"QT4", forall({"x", "y"}, land({th::neq(star(a, x), star(b, y)), th::neq(star(x, a), star(y, b))}))},
      {"QT5", forall({"x"}, lor({eq(x, a), eq(x, b),
                                 land({exists({"y"}, lor({eq(star(a, y), x), eq(star(b, y), x)})),
                                       exists({"z"}, lor({eq(star(z, a), x), eq(star(z, b), x)}))})}))},
      {"QT6", forall({"x", "y"}, iff(eq(succ(x), y), lor({land({eq(x, a), eq(y, b)}),
                                                          land({lnot(eq(x, a)), eq(star(x, b), y)})})))},
  };
}

/// WQT1 over unordered pairs of distinct pool codes, WQT2 over all ordered
/// pairs, then WQT3.
inline std::vector<Axiom> axioms_WQT(const std::vector<TreeTerm>& pool) {
  std::vector<TreeTerm> trees;
  for (const auto& t : pool) {
    if (std::find(trees.begin(), trees.end(), t) == trees.end()) trees.push_back(t);
  }
  std::vector<Axiom> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      out.push_back({"WQT1[" + trees[i].to_string() + "," + trees[j].to_string() + "]",
                     th::neq(tau_term(trees[i]), tau_term(trees[j]))});
    }
  }
  const auto z = var("z");
  for (const auto& s : trees) {
    for (const auto& t : trees) {
      const auto st = bpair(tau_term(s), tau_term(t));
      out.push_back({"WQT2[" + s.to_string() + "," + t.to_string() + "]",
                     forall({"z"}, iff(substar(z, st), lor({eq(z, st), substar(z, tau_term(s)), substar(z, tau_term(t))})))});
    }
  }
  out.push_back({"WQT3", forall({"z"}, iff(substar(z, ca()), eq(z, ca())))});
  return out;
}

// Abbreviations of 𝓛_{C,⊑*} expanded into first-order form. `fresh` supplies
// bound variable names that clash with nothing in the enclosing formula.

/// xBy ≡ ∃w y = x*w.
inline Formula begins_f(const Term& x, const Term& y, FreshNames& fresh) {
  const auto w = fresh.next();
  return exists({w}, eq(y, star(x, var(w))));
}

/// xEy ≡ ∃w y = w*x.
inline Formula ends_f(const Term& x, const Term& y, FreshNames& fresh) {
  const auto w = fresh.next();
  return exists({w}, eq(y, star(var(w), x)));
}

/// x ⊑p y ≡ x=y ∨ xBy ∨ xEy ∨ ∃z1,z2 y=z1*(x*z2) ∨ ∃z1,z2 y=(z1*x)*z2.
inline Formula subp_expanded(const Term& x, const Term& y, FreshNames& fresh) {
  const auto z1 = fresh.next(), z2 = fresh.next();
  const auto z3 = fresh.next(), z4 = fresh.next();
  return lor({eq(x, y), begins_f(x, y, fresh), ends_f(x, y, fresh),
              exists({z1, z2}, eq(y, star(var(z1), star(x, var(z2))))),
              exists({z3, z4}, eq(y, star(star(var(z3), x), var(z4))))});
}

inline std::string pool_label(const Term& t) {
  try {
    return to_infix(t);
  } catch (const SortError&) {
    return "?";
  }
}

/// WQT*9 as displayed, with its free z universally closed.
inline Formula wqtstar9_literal() {
  const auto x = var("x"), y = var("y"), z = var("z");
  return universal_closure(forall({"x", "y"}, imp(land({substar(x, y), substar(y, z)}), substar(y, z))));
}

/// For each pool term t one instance each of WQT*1..WQT*6 (schema-major),
/// then WQT*7, WQT*8 and transitivity as WQT*9: 6n+3 formulas.
inline std::vector<Axiom> axioms_WQTstar(const std::vector<Term>& pool) {
  const auto x = var("x"), y = var("y"), z = var("z");
  const auto a = ca(), b = cb();
  auto fresh_for = [](const Term& t) {
    std::set<std::string> taken{"x", "y", "z"};
    collect_vars(t, taken);
    return FreshNames(std::move(taken));
  };
  std::vector<Axiom> out;
  for (int schema = 1; schema <= 6; ++schema) {
    for (const auto& t : pool) {
      FreshNames f = fresh_for(t);
      auto in_t = [&](const Term& s) { return subp_expanded(s, t, f); };
      Formula phi;
      switch (schema) {
        case 1: {
          const auto l = star(x, star(y, z)), r = star(star(x, y), z);
          phi = forall({"x", "y", "z"}, imp(lor({in_t(l), in_t(r)}), eq(l, r)));
          break;
        }
        case 2:
          phi = forall({"x", "y"}, imp(in_t(star(x, y)), land({th::neq(star(x, y), a), th::neq(star(x, y), b)})));
          break;
        case 3: {
          auto cancel = [&](const Term& s1, const Term& s2) {
            return imp(land({in_t(s1), in_t(s2)}), imp(eq(s1, s2), eq(x, y)));
          };
          phi = forall({"x", "y"}, land({cancel(star(a, x), star(a, y)), cancel(star(b, x), star(b, y)),
                                         cancel(star(x, a), star(y, a)), cancel(star(x, b), star(y, b))}));
          break;
        }
        case 4: {
          auto apart = [&](const Term& s1, const Term& s2) { return imp(land({in_t(s1), in_t(s2)}), th::neq(s1, s2)); };
          phi = forall({"x", "y"}, land({apart(star(a, x), star(b, y)), apart(star(x, a), star(y, b))}));
          break;
        }
        case 5:
          phi = forall({"x"}, imp(in_t(x), lor({eq(x, a), eq(x, b),
                                                 land({lor({begins_f(a, x, f), begins_f(b, x, f)}),
                                                       lor({ends_f(a, x, f), ends_f(b, x, f)})})})));
          break;
        case 6: {
          const auto byz = bpair(y, z);
          phi = forall({"y", "z"}, imp(substar(byz, t), forall({"x"}, iff(substar(x, byz), lor({eq(x, byz), substar(x, y), substar(x, z)})))));
          break;
        }
      }
      out.push_back({"WQT*" + std::to_string(schema) + "[t=" + pool_label(t) + "]", std::move(phi)});
    }
  }
  out.push_back({"WQT*7", forall({"z"}, iff(substar(z, a), eq(z, a)))});
  out.push_back({"WQT*8", forall({"x", "y"}, imp(land({substar(x, y), substar(y, x)}), eq(x, y)))});
  out.push_back({"WQT*9", forall({"x", "y", "z"}, imp(land({substar(x, y), substar(y, z)}), substar(x, z)))});
  return out;
}

// Lemma statements over Σ*, with ≤ read through R: s ≤ t ≡ s = t ∨ sRt and
// sRt ≡ (s=a & ¬t=a) ∨ ∃w s*w = t.

inline Formula r_rel(const Term& s, const Term& t, FreshNames& fresh) {
  const auto w = fresh.next();
  return lor({land({eq(s, ca()), lnot(eq(t, ca()))}), exists({w}, eq(star(s, var(w)), t))});
}

inline Formula le_rel(const Term& s, const Term& t, FreshNames& fresh) { return lor({eq(s, t), r_rel(s, t, fresh)}); }

inline std::vector<Axiom> lemma_statements() {
  using th::v;
  const auto x = v("x"), y = v("y"), z = v("z"), u = v("u"), vv = v("v"), x2 = v("x2");
  const auto a = ca(), b = cb();
  FreshNames f({"x", "y", "z", "u", "v", "x2"});
  std::vector<Axiom> out;
  out.push_back({"dom-shape", forall({"x"}, imp(dom(x), lor({eq(x, a), land({begins_f(b, x, f), ends_f(star(a, a), x, f)})})))});
  {
    const auto w = f.next();
    out.push_back({"dom-prefix-count", forall({"x", "x2"}, imp(land({dom(x), exists({w}, eq(x, star(var(w), x2)))}),
                                                      exists({"u", "v"}, land({alpha_of(x2, u), beta_of(x2, vv), le_rel(succ(vv), u, f)}))))});
  }
  out.push_back({"dom-left-cancel", forall({"x", "y", "u", "v"}, imp(land({dom(x), dom(u), eq(star(x, y), star(u, vv))}),
                                                             land({eq(x, u), eq(y, vv)})))});
  out.push_back({"dom-unique-split", forall({"x"}, iff(dom(x), lor({eq(x, a), exists1({"y", "z"}, land({eq(x, bpair(y, z)), dom(y), dom(z)}))})))});
  out.push_back({"dom-subp-split", forall({"x", "y", "z"}, imp(land({dom(x), dom(y), dom(z)}),
                                                     imp(subp(x, bpair(y, z)), lor({eq(x, bpair(y, z)), subp(x, y), subp(x, z)}))))});
  {
    const auto w = f.next();
    out.push_back({"dom*-prefix-count", forall({"x", "x2"}, imp(land({dom(x), exists({w}, eq(x, star(var(w), x2)))}),
                                                      forall({"u", "v"}, imp(land({alpha_of(x2, u), beta_of(x2, vv)}), le_rel(succ(vv), u, f)))))});
  }
  out.push_back({"dom*-closed", forall({"x", "y", "z"}, imp(land({dom(x), dom(y), eq(z, bpair(x, y))}), dom(z)))});
  out.push_back({"dom*-bpair-inject", forall({"x", "y", "u", "v"}, imp(land({dom(x), dom(u), eq(bpair(x, y), bpair(u, vv))}),
                                                             land({eq(x, u), eq(y, vv)})))});
  out.push_back({"dom*-subp-a", forall({"x"}, imp(dom(x), iff(subp(x, a), eq(x, a))))});
  out.push_back({"dom*-subp-bpair", forall({"x", "y", "z"}, imp(land({dom(x), dom(y), dom(z)}),
                                                        iff(subp(x, bpair(y, z)), lor({eq(x, bpair(y, z)), subp(x, y), subp(x, z)}))))});
  return out;
}

}  // namespace strtree::logic
