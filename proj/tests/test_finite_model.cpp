#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strtree/counting.hpp"
#include "strtree/finite_model.hpp"
#include "strtree/logic/infix.hpp"
#include "strtree/logic/sexpr.hpp"
#include "strtree/logic/theories.hpp"
#include "strtree/tree_codec.hpp"

using namespace strtree;
using namespace strtree::logic;

namespace {

Term T_(const char* s) { return parse_infix_term(s); }

const Axiom& by_id(const std::vector<Axiom>& axs, const std::string& id) {
  return *std::find_if(axs.begin(), axs.end(), [&](const Axiom& a) { return a.id == id; });
}

// Naive Tarskian evaluation over the element indices; ⊆p and T* go through
// their first-order definitions.
struct NaiveModel {
  const FiniteModel& m;
  std::map<std::string, std::size_t> env;

  std::size_t val(const Term& t) {
    switch (t->kind) {
      case TermKind::Var: return env.at(t->name);
      case TermKind::A: return m.a_elem;
      case TermKind::B: return m.b_elem;
      case TermKind::Star: return m.star(val(t->left), val(t->right));
      default: throw Error("term");
    }
  }

  bool some(const std::vector<std::string>& vs, std::size_t i, const Formula& body) {
    if (i == vs.size()) return holds(body);
    const auto saved = env.count(vs[i]) ? std::optional{env[vs[i]]} : std::nullopt;
    bool r = false;
    for (std::size_t e = 0; !r && e < m.size(); ++e) {
      env[vs[i]] = e;
      r = some(vs, i + 1, body);
    }
    if (saved) env[vs[i]] = *saved; else env.erase(vs[i]);
    return r;
  }

  std::size_t how_many(const std::vector<std::string>& vs, std::size_t i, const Formula& body) {
    if (i == vs.size()) return holds(body) ? 1 : 0;
    const auto saved = env.count(vs[i]) ? std::optional{env[vs[i]]} : std::nullopt;
    std::size_t n = 0;
    for (std::size_t e = 0; e < m.size(); ++e) {
      env[vs[i]] = e;
      n += how_many(vs, i + 1, body);
    }
    if (saved) env[vs[i]] = *saved; else env.erase(vs[i]);
    return n;
  }

  bool holds(const Formula& f) {
    switch (f->kind) {
      case FKind::Not: return !holds(f->subs[0]);
      case FKind::And: return std::all_of(f->subs.begin(), f->subs.end(), [&](const auto& g) { return holds(g); });
      case FKind::Or: return std::any_of(f->subs.begin(), f->subs.end(), [&](const auto& g) { return holds(g); });
      case FKind::Imp: return !holds(f->subs[0]) || holds(f->subs[1]);
      case FKind::Iff: return holds(f->subs[0]) == holds(f->subs[1]);
      case FKind::ForAll: return !some(f->vars, 0, lnot(f->subs[0]));
      case FKind::Exists: return some(f->vars, 0, f->subs[0]);
      case FKind::ExistsUnique: return how_many(f->vars, 0, f->subs[0]) == 1;
      case FKind::Eq: return val(f->args[0]) == val(f->args[1]);
      case FKind::SubStar: return m.related(val(f->args[0]), val(f->args[1]));
      case FKind::SubP: {
        std::set<std::string> taken;
        all_names_into(f, taken);
        for (const auto& [k, v] : env) taken.insert(k);
        FreshNames fresh(std::move(taken));
        return holds(subp_expanded(f->args[0], f->args[1], fresh));
      }
      case FKind::TStar: {
        const auto x = val(f->args[0]);
        if (x == m.a_elem) return true;
        for (std::size_t y = 0; y < m.size(); ++y) {
          for (std::size_t z = 0; z < m.size(); ++z) {
            if (m.star(m.b_elem, m.star(y, z)) == x) return true;
          }
        }
        return false;
      }
      default: throw Error("atom");
    }
  }
};

std::size_t skip_tree(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) return std::string::npos;
  if (s[pos] == 'a') return pos + 1;
  const std::size_t mid = skip_tree(s, pos + 1);
  return mid == std::string::npos ? mid : skip_tree(s, mid);
}

void naive_subterms(const std::string& s, std::size_t pos, std::set<std::string>& out) {
  out.insert(s.substr(pos, skip_tree(s, pos) - pos));
  if (s[pos] == 'b') {
    naive_subterms(s, pos + 1, out);
    naive_subterms(s, skip_tree(s, pos + 1), out);
  }
}

std::vector<std::vector<Term>> sample_pools() {
  return {{},
          {T_("a")},
          {T_("a*a")},
          {T_("b*(a*a)")},
          {T_("b*(a*a)"), T_("b*a")},
          {T_("a*b"), T_("b*a"), T_("(a*b)*a")},
          {T_("b*((b*(a*a))*a)"), T_("b*(a*(b*(a*a)))")},
          {T_("a*a"), T_("a*(a*a)"), T_("b*(b*b)")}};
}

}  // namespace

TEST(BuildModel, EmptyPool) {
  const auto m = build_model({});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.reps[m.a_elem], BinString::a());
  EXPECT_EQ(m.reps[m.b_elem], BinString::b());
  EXPECT_EQ(m.star(m.a_elem, m.a_elem), m.b_elem);
  EXPECT_TRUE(m.related(m.a_elem, m.a_elem));
  EXPECT_FALSE(m.related(m.b_elem, m.b_elem));
}

TEST(BuildModel, SinglePoolTerm) {
  const auto m = build_model({T_("b*(a*a)")});
  EXPECT_EQ(model_to_text(m),
            "elements 3\n0 a\n1 b\n2 baa\n"
            "op\n1 1 1\n1 1 1\n1 1 1\n"
            "rel 3\n0 0\n0 2\n2 2\n");
}

TEST(BuildModel, ValueClassesIgnoreBracketing) {
  const auto m = build_model({T_("(b*a)*a"), T_("b*(a*a)")});
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m, build_model({T_("b*(a*a)")}));
}

TEST(BuildModel, MatchesDefinition) {
  for (const auto& pool : sample_pools()) {
    const auto m = build_model(pool);
    std::set<std::string> values{"a", "b"};
    for (const auto& t : pool) values.insert(ground_value(t));
    ASSERT_EQ(m.size(), values.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        const std::string c = m.reps[i].str() + m.reps[j].str();
        const std::string want = values.count(c) ? c : "b";
        ASSERT_EQ(m.reps[m.star(i, j)].str(), want);
        std::set<std::string> subs;
        const std::string& y = m.reps[j].str();
        if (skip_tree(y, 0) == y.size()) naive_subterms(y, 0, subs);
        ASSERT_EQ(m.related(i, j), subs.count(m.reps[i].str()) > 0) << i << ' ' << j;
      }
    }
  }
}

TEST(BuildModel, IndependentOfPoolOrder) {
  std::vector<Term> pool{T_("a*b"), T_("b*(a*a)"), T_("b*a"), T_("a")};
  const auto ref = build_model(pool);
  std::sort(pool.begin(), pool.end(), [](const Term& x, const Term& y) { return to_infix(x) < to_infix(y); });
  do {
    ASSERT_EQ(build_model(pool), ref);
  } while (std::next_permutation(pool.begin(), pool.end(),
                                 [](const Term& x, const Term& y) { return to_infix(x) < to_infix(y); }));
}

TEST(EvalFinite, Examples) {
  const auto m = build_model({T_("b*(a*a)")});
  EXPECT_FALSE(eval_finite(parse_formula("(= (a) (b))"), m));
  EXPECT_TRUE(eval_finite(parse_formula("(exists (x) (= x (a)))"), m));
  EXPECT_TRUE(eval_finite(parse_formula("(forall (x) (= (star x x) (b)))"), m));
  EXPECT_TRUE(eval_finite(parse_formula("(subp (a) (b))"), build_model({T_("a*b")})));
  EXPECT_TRUE(eval_finite(parse_formula("(= x (b))"), m, {{"x", m.b_elem}}));
}

TEST(EvalFinite, AntisymmetryHoldsInEveryModel) {
  const auto wqt8 = axioms_WQTstar({})[1];
  ASSERT_EQ(wqt8.id, "WQT*8");
  for (const auto& pool : sample_pools()) EXPECT_TRUE(eval_finite(wqt8.formula, build_model(pool)));
}

TEST(CheckAxioms, EmptyInstances) {
  const auto r = check_axioms(build_model({}), {});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases, 0u);
}

TEST(CheckAxioms, PerturbedOperationIsCaught) {
  const std::vector<Term> pool{T_("a*a")};
  auto m = build_model(pool);
  const auto inst = axioms_WQTstar(pool);
  const auto before = check_axioms(m, inst);
  EXPECT_EQ(before.cases, inst.size());
  const auto& wqt2 = by_id(inst, "WQT*2[t=a*a]");
  ASSERT_TRUE(eval_finite(wqt2.formula, m));
  m.op[m.a_elem * m.size() + m.a_elem] = m.a_elem;
  EXPECT_FALSE(eval_finite(wqt2.formula, m));
  const auto after = check_axioms(m, inst);
  const auto hit = std::find_if(after.failures.begin(), after.failures.end(), [](const Failure& f) { return f.law == "WQT*2[t=a*a]"; });
  ASSERT_NE(hit, after.failures.end());
  EXPECT_EQ(hit->witness.at("x"), "a");
  EXPECT_EQ(hit->witness.at("y"), "a");
}

TEST(CheckAxioms, OccurringTermsCollectsSubterms) {
  const auto terms = occurring_terms({{"t", parse_formula("(forall (x) (= (star x (star (a) (b))) (b)))")}});
  std::set<std::string> got;
  for (const auto& t : terms) got.insert(to_infix(t));
  EXPECT_EQ(got, (std::set<std::string>{"a", "b", "a*b"}));
}

TEST(EvalProperties, AgreesWithNaiveEvaluation) {
  for (const auto& pool : sample_pools()) {
    const auto m = build_model(pool);
    auto inst = axioms_WQTstar(pool);
    const auto wqt = axioms_WQT({TreeTerm::leaf(), TreeTerm::parse("(0,0)")});
    inst.insert(inst.end(), wqt.begin(), wqt.end());
    inst.push_back({"lit9", wqtstar9_literal()});
    inst.push_back({"uniq", parse_formula("(exists1 (x) (tstar x))")});
    inst.push_back({"open", parse_formula("(forall (y) (exists (x) (or (subp x y) (substar y x))))")});
    for (const auto& ax : inst) {
      NaiveModel naive{m, {}};
      ASSERT_EQ(eval_finite(ax.formula, m), naive.holds(ax.formula)) << ax.id << ' ' << to_sexpr(ax.formula);
    }
  }
}

TEST(EvalProperties, TreePoolsSatisfyWqt) {
  for (const auto& trees : {std::vector<TreeTerm>{}, trees_up_to_depth(1), trees_up_to_depth(2)}) {
    std::vector<Term> pool;
    for (const auto& t : trees) pool.push_back(tau_term(t));
    const auto inst = axioms_WQT(trees);
    const auto r = check_axioms(build_model(occurring_terms(inst)), inst);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0].law);
  }
}
