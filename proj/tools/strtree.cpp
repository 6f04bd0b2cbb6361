// strtree: command-line front end for the string/tree library.
// Exit status: 0 pass, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strtree/strtree.hpp"

namespace {

using strtree::BinString;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw strtree::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

strtree::RecursionSpec spec_named(const std::string& name) {
  if (name == "alpha") return strtree::alpha_spec();
  if (name == "beta") return strtree::beta_spec();
  throw strtree::ParseError("unknown recursion spec: " + name + " (expected alpha or beta)");
}

// S-expression first, then infix.
strtree::logic::Term parse_any_term(const std::string& text) {
  // infix first: a bare digit would otherwise read as a variable
  try {
    return strtree::logic::parse_infix_term(text);
  } catch (const strtree::ParseError&) {
    return strtree::logic::parse_term(text);
  }
}

void print_report(const strtree::VerificationReport& r, bool json) {
  if (json) {
    std::cout << strtree::report_to_json(r).dump(2) << '\n';
    return;
  }
  std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << ", verified up to bound " << r.bound << " ("
            << r.cases << " cases, " << r.failures.size() << " failures, " << r.elapsed.count() << " ms)\n";
  for (const auto& [name, values] : r.details) {
    std::cout << "  " << name << ":";
    for (auto v : values) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (const auto& f : r.failures) {
    std::cout << "  " << f.law;
    for (const auto& [k, v] : f.witness) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strings, trees and their codings"};
  app.require_subcommand(1);
  int status = kPass;

  // tree
  auto* tree = app.add_subcommand("tree", "convert between trees and their string codes");
  tree->require_subcommand(1);
  std::string tree_arg;
  tree->add_subcommand("encode", "tree -> code")->add_option("tree", tree_arg)->required();
  tree->add_subcommand("decode", "code -> tree")->add_option("code", tree_arg)->required();

  // str
  auto* str = app.add_subcommand("str", "string functions");
  str->require_subcommand(1);
  std::string str_arg;
  for (const char* name : {"alpha", "beta", "ae"}) str->add_subcommand(name)->add_option("string", str_arg)->required();

  // pair
  auto* pair = app.add_subcommand("pair", "pair coding");
  pair->require_subcommand(1);
  std::vector<std::string> pair_args;
  pair->add_subcommand("encode", "x y -> z")->add_option("strings", pair_args)->required()->expected(2);
  pair->add_subcommand("decode", "z -> x y")->add_option("z", pair_args)->required()->expected(1);

  // set
  auto* set = app.add_subcommand("set", "set coding");
  set->require_subcommand(1);
  std::vector<std::string> set_args;
  set->add_subcommand("encode", "w1 ... -> code")->add_option("members", set_args)->required();
  set->add_subcommand("members", "code -> members")->add_option("code", set_args)->required()->expected(1);

  // rec
  auto* rec = app.add_subcommand("rec", "string recursion");
  rec->require_subcommand(1);
  std::string rec_spec, rec_m;
  for (const char* name : {"run", "certify"}) {
    auto* c = rec->add_subcommand(name);
    c->add_option("spec", rec_spec)->required();
    c->add_option("m", rec_m)->required();
  }

  // logic
  auto* logic = app.add_subcommand("logic", "formula files");
  logic->require_subcommand(1);
  std::string formula_file;
  std::size_t eval_bound = 0;
  logic->add_subcommand("translate-t", "translate into L_C over AE")->add_option("file", formula_file)->required();
  logic->add_subcommand("translate-wt", "translate into L_C,substar over T*")->add_option("file", formula_file)->required();
  auto* eval = logic->add_subcommand("eval", "evaluate sentences over strings up to a length");
  eval->add_option("file", formula_file)->required();
  eval->add_option("--bound", eval_bound, "maximum string length")->required();

  // model
  auto* model = app.add_subcommand("model", "finite models");
  model->require_subcommand(1);
  auto* build = model->add_subcommand("build", "build the model of a term pool");
  std::vector<std::string> pool_args;
  bool check = false;
  build->add_option("terms", pool_args);
  build->add_flag("--check", check, "check the WQT* instances for the pool");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<std::size_t> bound;
  bool json = false;
  std::string suite_names = "all";
  for (const auto& s : strtree::suites::registry()) suite_names += ", " + s.name;
  verify->add_option("suite", suite, suite_names)->required();
  verify->add_option("--bound", bound, "suite bound");
  verify->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (tree->parsed()) {
      if (tree->got_subcommand("encode")) {
        std::cout << strtree::encode_tree(strtree::TreeTerm::parse(tree_arg)) << '\n';
      } else {
        std::cout << strtree::decode_tree(BinString::parse(tree_arg)) << '\n';
      }
    } else if (str->parsed()) {
      const BinString x = BinString::parse(str_arg);
      if (str->got_subcommand("alpha")) {
        std::cout << strtree::alpha(x).value() << '\n';
      } else if (str->got_subcommand("beta")) {
        std::cout << strtree::beta(x).value() << '\n';
      } else {
        std::cout << (strtree::is_almost_even(x) ? "true" : "false") << '\n';
      }
    } else if (pair->parsed()) {
      if (pair->got_subcommand("encode")) {
        std::cout << strtree::encode_pair(BinString::parse(pair_args[0]), BinString::parse(pair_args[1])) << '\n';
      } else {
        const auto [x, y] = strtree::decode_pair(BinString::parse(pair_args[0]));
        std::cout << x << ' ' << y << '\n';
      }
    } else if (set->parsed()) {
      if (set->got_subcommand("encode")) {
        std::vector<BinString> ws;
        for (const auto& w : set_args) ws.push_back(BinString::parse(w));
        std::cout << strtree::encode_set(ws).raw << '\n';
      } else {
        for (const auto& w : strtree::members(BinString::parse(set_args[0]))) std::cout << w << '\n';
      }
    } else if (rec->parsed()) {
      const auto spec = spec_named(rec_spec);
      const BinString m = BinString::parse(rec_m);
      if (rec->got_subcommand("run")) {
        std::cout << strtree::run_recursion(spec, m) << '\n';
      } else {
        std::cout << strtree::build_comp_code(spec, m).code.raw << '\n';
      }
    } else if (logic->parsed()) {
      const auto formulas = strtree::logic::parse_formulas(read_file(formula_file));
      if (logic->got_subcommand("translate-t")) {
        for (const auto& f : formulas) std::cout << strtree::logic::to_sexpr(strtree::logic::translate_T(f)) << '\n';
      } else if (logic->got_subcommand("translate-wt")) {
        for (const auto& f : formulas) std::cout << strtree::logic::to_sexpr(strtree::logic::translate_WT(f)) << '\n';
      } else {
        strtree::logic::BoundedEvaluator ev(eval_bound);
        for (const auto& f : formulas) {
          const bool ok = ev.eval(f);
          std::cout << (ok ? "true" : "false") << '\n';
          if (!ok) status = kFail;
        }
      }
    } else if (model->parsed()) {
      std::vector<strtree::logic::Term> pool;
      for (const auto& t : pool_args) pool.push_back(parse_any_term(t));
      const auto m = strtree::build_model(pool);
      std::cout << strtree::model_to_text(m);
      if (check) {
        auto r = strtree::check_axioms(m, strtree::logic::axioms_WQTstar(pool));
        print_report(r, false);
        if (!r.passed()) status = kFail;
      }
    } else if (verify->parsed()) {
      if (suite != "all" && !strtree::suites::find_suite(suite)) {
        std::cerr << "unknown suite: " << suite << " (expected one of " << suite_names << ")\n";
        return kUsage;
      }
      const auto r = strtree::suites::run_suite(suite, bound);
      print_report(r, json);
      if (!r.passed()) status = kFail;
    }
  } catch (const strtree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
