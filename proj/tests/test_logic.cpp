#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strtree/error.hpp"
#include "strtree/logic/eval_bounded.hpp"
#include "strtree/logic/infix.hpp"
#include "strtree/logic/sexpr.hpp"
#include "strtree/logic/theories.hpp"
#include "strtree/logic/translate.hpp"

using namespace strtree;
using namespace strtree::logic;

namespace {

// ---- naive evaluator: plain recursion, every quantifier over every string ---

std::vector<std::string> strings_up_to(std::size_t n) {
  std::vector<std::string> out, layer{""};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      next.push_back(s + "a");
      next.push_back(s + "b");
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::size_t skip_tree(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) return std::string::npos;
  if (s[pos] == 'a') return pos + 1;
  const std::size_t mid = skip_tree(s, pos + 1);
  return mid == std::string::npos ? mid : skip_tree(s, mid);
}

bool naive_ae(const std::string& s) { return skip_tree(s, 0) == s.size(); }

void naive_subterms(const std::string& s, std::size_t pos, std::set<std::string>& out) {
  const std::size_t end = skip_tree(s, pos);
  out.insert(s.substr(pos, end - pos));
  if (s[pos] == 'b') {
    naive_subterms(s, pos + 1, out);
    naive_subterms(s, skip_tree(s, pos + 1), out);
  }
}

struct Naive {
  std::vector<std::string> dom;
  std::map<std::string, std::string> env;

  std::string val(const Term& t) {
    switch (t->kind) {
      case TermKind::Var: return env.at(t->name);
      case TermKind::A: return "a";
      case TermKind::B: return "b";
      case TermKind::Star: return val(t->left) + val(t->right);
      case TermKind::Succ: {
        const auto s = val(t->left);
        return s == "a" ? "b" : s + "b";
      }
      default: throw SortError("tree term");
    }
  }

  bool atom(const Formula& f) {
    const auto s = val(f->args[0]);
    switch (f->kind) {
      case FKind::Eq: return s == val(f->args[1]);
      case FKind::SubP: return val(f->args[1]).find(s) != std::string::npos;
      case FKind::Dom: return naive_ae(s);
      case FKind::TStar: return s == "a" || (s.size() >= 3 && s[0] == 'b');
      case FKind::SubStar: {
        const auto t = val(f->args[1]);
        if (!naive_ae(s) || !naive_ae(t)) return false;
        std::set<std::string> subs;
        naive_subterms(t, 0, subs);
        return subs.count(s) > 0;
      }
      case FKind::Alpha:
      case FKind::Beta: {
        const auto na = static_cast<std::size_t>(std::count(s.begin(), s.end(), 'a'));
        return val(f->args[1]) == std::string((f->kind == FKind::Alpha ? na : s.size() - na) + 1, 'b');
      }
      default: throw Error("atom");
    }
  }

  // number of satisfying tuples, capped at cap
  std::size_t count(const std::vector<std::string>& vs, std::size_t i, const Formula& body, std::size_t cap) {
    if (i == vs.size()) return holds(body) ? 1 : 0;
    const auto saved = env.find(vs[i]) == env.end() ? std::optional<std::string>{} : std::optional{env[vs[i]]};
    std::size_t n = 0;
    for (const auto& d : dom) {
      env[vs[i]] = d;
      n += count(vs, i + 1, body, cap - n);
      if (n >= cap) break;
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
      case FKind::ForAll: return count(f->vars, 0, lnot(f->subs[0]), 1) == 0;
      case FKind::Exists: return count(f->vars, 0, f->subs[0], 1) == 1;
      case FKind::ExistsUnique: return count(f->vars, 0, f->subs[0], 2) == 1;
      default: return atom(f);
    }
  }
};

std::size_t quantifier_depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& g : f->subs) d = std::max(d, quantifier_depth(g));
  return d + (is_binder(f->kind) ? f->vars.size() : 0);
}

// Largest bound keeping the naive search under about a million leaves.
std::size_t naive_bound(const Formula& f) {
  const std::size_t q = quantifier_depth(f);
  std::size_t b = 5;
  while (b > 1) {
    double leaves = 1;
    for (std::size_t i = 0; i < q; ++i) leaves *= double((std::size_t{2} << b) - 2);
    if (leaves <= 1e6) break;
    --b;
  }
  return b;
}

std::vector<Formula> corpus() {
  std::vector<Formula> fs;
  for (const auto& ax : axioms_QTplus()) fs.push_back(ax.formula);
  for (const auto& ax : lemma_statements()) fs.push_back(ax.formula);
  for (const auto& ax : axioms_T()) {
    fs.push_back(translate_T(ax.formula));
    fs.push_back(translate_WT(ax.formula));
  }
  for (const auto& ax : axioms_WT(1)) fs.push_back(translate_WT(ax.formula));
  for (const auto& ax : axioms_WQTstar({parse_infix_term("b*(a*a)"), parse_infix_term("a")})) fs.push_back(ax.formula);
  fs.push_back(wqtstar9_literal());
  for (const char* s : {
           "(forall (x) (exists (y) (= (star x y) x)))",
           "(exists1 (y) (subp y (star (a) (a))))",
           "(exists1 (y) (subp y (a)))",
           "(forall (x) (exists1 (y) (= (succ x) y)))",
           "(forall (x) (imp (tstar x) (or (= x (a)) (dom x) (not (dom x)))))",
           "(forall (x y) (imp (and (subp x y) (subp y x)) (= x y)))",
           "(exists (x y) (and (= (star x y) (star y x)) (not (= x y))))",
           "(forall (x) (exists (u v) (and (alpha x u) (beta x v))))",
           "(exists1 (x y) (= (star x y) (star (a) (b))))",
           "(forall (x) (exists (y) (and (subp y x) (not (= y x)))))",
       }) {
    fs.push_back(parse_formula(s));
  }
  return fs;
}

}  // namespace

TEST(Theories, Census) {
  EXPECT_EQ(axioms_T().size(), 4u);
  EXPECT_EQ(axioms_QTplus().size(), 6u);
  auto count = [](const std::vector<Axiom>& axs, const std::string& prefix) {
    return std::count_if(axs.begin(), axs.end(), [&](const Axiom& a) { return a.id.rfind(prefix, 0) == 0; });
  };
  EXPECT_EQ(count(axioms_WT(0), "WT1"), 0);
  EXPECT_EQ(count(axioms_WT(0), "WT2"), 1);
  EXPECT_EQ(count(axioms_WT(1), "WT1"), 1);
  EXPECT_EQ(count(axioms_WT(1), "WT2"), 2);
  // depth 2: five trees
  EXPECT_EQ(count(axioms_WT(2), "WT1"), 10);
  EXPECT_EQ(count(axioms_WT(2), "WT2"), 5);
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<Term> pool;
    for (std::size_t i = 0; i < n; ++i) pool.push_back(digits_term(std::string(i + 1, 'a')));
    EXPECT_EQ(axioms_WQTstar(pool).size(), 6 * n + 3);
  }
  const TreeTerm leaf = TreeTerm::leaf(), one = TreeTerm::node(leaf, leaf);
  const auto wqt = axioms_WQT({leaf, one, leaf});
  EXPECT_EQ(count(wqt, "WQT1"), 1);
  EXPECT_EQ(count(wqt, "WQT2"), 4);
  EXPECT_EQ(count(wqt, "WQT3"), 1);
}

TEST(Translate, Examples) {
  const auto t3 = axioms_T()[2].formula;
  EXPECT_TRUE(formula_equal(translate_T(t3), parse_formula("(forall (x) (imp (dom x) (iff (subp x (a)) (= x (a)))))")));
  EXPECT_EQ(to_sexpr(translate_T(t3)), "(forall (x) (imp (dom x) (iff (subp x (a)) (= x (a)))))");
  EXPECT_TRUE(formula_equal(translate_WT(t3), parse_formula("(forall (x) (imp (tstar x) (iff (substar x (a)) (= x (a)))))")));
  const auto ex = parse_formula("(exists (x y) (= (pair x y) (pair (zero) (zero))))");
  EXPECT_TRUE(formula_equal(
      translate_T(ex),
      parse_formula("(exists (x y) (and (dom x) (dom y) (= (star (b) (star x y)) (star (b) (star (a) (a))))))")));
  EXPECT_EQ(to_infix(translate_closed_term(tree_to_term(TreeTerm::parse("((0,0),0)")))), "b*((b*(a*a))*a)");
  EXPECT_EQ(ground_value(translate_closed_term(tree_to_term(TreeTerm::parse("((0,0),0)")))), "bbaaa");
}

TEST(Translate, RejectsOtherSignatures) {
  EXPECT_THROW(translate_T(parse_formula("(forall (x) (= (star x x) x))")), SortError);
  EXPECT_THROW(translate_WT(parse_formula("(dom (zero))")), SortError);
  EXPECT_THROW(translate_closed_term(pair(var("x"), zero())), SortError);
}

TEST(Sexpr, ParseAndPrint) {
  const auto f = parse_formula("  (forall (x y)  ; comment\n (not (= (succ x) y)))");
  EXPECT_EQ(to_sexpr(f), "(forall (x y) (not (= (succ x) y)))");
  EXPECT_EQ(parse_formulas("(dom (a)) (tstar (b))").size(), 2u);
  EXPECT_TRUE(parse_formulas("; nothing\n").empty());
  EXPECT_EQ(to_sexpr(parse_term("(pair (zero) x)")), "(pair (zero) x)");
  EXPECT_THROW(parse_formula("(forall x (= x x))"), ParseError);
  EXPECT_THROW(parse_formula("(= x x) extra"), ParseError);
  EXPECT_THROW(parse_formula("(frob x)"), ParseError);
  EXPECT_THROW(parse_term("(star (a))"), ParseError);
}

TEST(Sexpr, RoundTripsCorpus) {
  for (const auto& f : corpus()) {
    const auto text = to_sexpr(f);
    ASSERT_TRUE(formula_equal(parse_formula(text), f)) << text;
    ASSERT_EQ(to_sexpr(parse_formula(text)), text);
  }
  for (const auto& ax : axioms_T()) {
    ASSERT_TRUE(formula_equal(parse_formula(to_sexpr(ax.formula)), ax.formula));
  }
}

TEST(Infix, ParseAndPrint) {
  const auto t = parse_infix_term(" b * ( a*a ) ");
  EXPECT_TRUE(term_equal(t, star(cb(), star(ca(), ca()))));
  EXPECT_EQ(to_infix(t), "b*(a*a)");
  EXPECT_TRUE(term_equal(parse_infix_term("a*a*b"), star(ca(), star(ca(), cb()))));
  EXPECT_EQ(to_infix(parse_infix_term("(a*a)*b")), "(a*a)*b");
  EXPECT_EQ(ground_value(parse_infix_term("(a*b)*(b*a)")), "abba");
  EXPECT_THROW(parse_infix_term("a*"), ParseError);
  EXPECT_THROW(parse_infix_term("(a"), ParseError);
  EXPECT_THROW(parse_infix_term("a x"), ParseError);
  EXPECT_THROW(to_infix(var("x")), SortError);
}

TEST(EvalBounded, Examples) {
  EXPECT_TRUE(eval_bounded(axioms_QTplus()[1].formula, 5));
  EXPECT_TRUE(eval_bounded(translate_T(axioms_T()[2].formula), 9));
  EXPECT_FALSE(eval_bounded(parse_formula("(forall (x) (exists (y) (= (star x y) x)))"), 3));
  EXPECT_TRUE(eval_bounded(parse_formula("(dom x)"), 1, {{"x", BinString("baa")}}));
  EXPECT_FALSE(eval_bounded(parse_formula("(dom x)"), 1, {{"x", BinString("ab")}}));
  EXPECT_TRUE(eval_bounded(parse_formula("(alpha x (star (b) (b)))"), 1, {{"x", BinString("bab")}}));
  EXPECT_TRUE(eval_bounded(parse_formula("(substar (star (b) (star (a) (a))) x)"), 1, {{"x", BinString("bbaaa")}}));
  // assigned values may exceed the bound; quantified ones may not
  EXPECT_FALSE(eval_bounded(parse_formula("(exists (y) (= y x))"), 2, {{"x", BinString("aaa")}}));
}

TEST(EvalBounded, Errors) {
  EXPECT_THROW(eval_bounded(parse_formula("(= x (a))"), 3), UnassignedVariable);
  EXPECT_THROW(eval_bounded(parse_formula("(forall (x) (subt x (zero)))"), 2), SortError);
  EXPECT_THROW(eval_bounded(parse_formula("(= (zero) (zero))"), 2), SortError);
}

TEST(EvalBounded, Counterexample) {
  BoundedEvaluator ev(3);
  const auto f = parse_formula("(forall (x y) (not (= (star x y) (star (a) (b)))))");
  const auto cx = ev.counterexample(f);
  ASSERT_EQ(cx.size(), 2u);
  EXPECT_EQ(cx.at("x"), BinString("a"));
  EXPECT_EQ(cx.at("y"), BinString("b"));
  EXPECT_TRUE(ev.counterexample(parse_formula("(forall (x) (= x x))")).empty());
}

TEST(EvalProperties, AgreesWithNaiveEvaluator) {
  for (const auto& f : corpus()) {
    const std::size_t b = naive_bound(f);
    Naive n{strings_up_to(b), {}};
    ASSERT_EQ(eval_bounded(f, b), n.holds(f)) << "bound " << b << ": " << to_sexpr(f);
  }
}

TEST(EvalProperties, AgreesUnderAssignments) {
  const std::vector<Formula> open = {
      parse_formula("(exists1 (y) (subp y x))"),
      parse_formula("(exists (u v) (= (star u v) x))"),
      parse_formula("(exists1 (u v) (and (= x (star (b) (star u v))) (dom u) (dom v)))"),
      parse_formula("(forall (y) (imp (subp y x) (subp y (star x x))))"),
      parse_formula("(exists (y) (and (substar y x) (not (= y x))))"),
  };
  const auto xs = strings_up_to(5);
  for (const auto& f : open) {
    Naive n{strings_up_to(4), {}};
    BoundedEvaluator ev(4);
    for (const auto& x : xs) {
      n.env = {{"x", x}};
      ASSERT_EQ(ev.eval(f, {{"x", BinString(x)}}), n.holds(f)) << x << ' ' << to_sexpr(f);
    }
  }
}

TEST(EvalProperties, TranslatedTreeAxiomsHold) {
  for (const auto& ax : axioms_T()) EXPECT_TRUE(eval_bounded(translate_T(ax.formula), 7)) << ax.id;
  for (const auto& ax : axioms_WT(2)) EXPECT_TRUE(eval_bounded(translate_WT(ax.formula), 7)) << ax.id;
  for (const auto& ax : lemma_statements()) EXPECT_TRUE(eval_bounded(ax.formula, 6)) << ax.id;
}

// T* admits strings that are not codes, so cancellation fails there.
TEST(EvalProperties, WtTranslationDoesNotInterpretPairInjectivity) {
  BoundedEvaluator ev(7);
  const auto t2 = translate_WT(axioms_T()[1].formula);
  ASSERT_FALSE(ev.eval(t2));
  const auto cx = ev.counterexample(t2);
  ASSERT_EQ(cx.size(), 4u);
  const auto xy = cx.at("x").str() + cx.at("y").str(), zw = cx.at("z").str() + cx.at("w").str();
  EXPECT_EQ(xy, zw);
  EXPECT_NE(cx.at("x"), cx.at("z"));
}
