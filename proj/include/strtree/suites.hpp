#pragma once

// Named verification suites. Each checks one family of laws exhaustively up
// to a bound and returns a report listing every counterexample.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/counting.hpp"
#include "strtree/error.hpp"
#include "strtree/finite_model.hpp"
#include "strtree/logic/eval_bounded.hpp"
#include "strtree/logic/infix.hpp"
#include "strtree/logic/theories.hpp"
#include "strtree/logic/translate.hpp"
#include "strtree/report.hpp"
#include "strtree/set_coding.hpp"
#include "strtree/string_recursion.hpp"
#include "strtree/tree_codec.hpp"

namespace strtree::suites {

using Witness = std::map<std::string, std::string>;

namespace detail {

inline BinString S(const BinString& x) { return successor(x); }
inline BinString cat(const BinString& x, const BinString& y) { return concat(x, y); }
inline bool B(const BinString& x, const BinString& y) { return begins(x, y); }
inline bool E(const BinString& x, const BinString& y) { return ends(x, y); }
inline bool P(const BinString& x, const BinString& y) { return is_substring(x, y); }

/// The w with y = x·w, when x is a proper prefix of y.
inline std::optional<BinString> after_prefix(const BinString& x, const BinString& y) {
  if (!begins(x, y)) return std::nullopt;
  return y.substr(x.size(), y.size() - x.size());
}

/// The w with y = w·x, when x is a proper suffix of y.
inline std::optional<BinString> before_suffix(const BinString& x, const BinString& y) {
  if (!ends(x, y)) return std::nullopt;
  return y.substr(0, y.size() - x.size());
}

inline Witness logic_witness(const logic::Assignment& a) {
  Witness w;
  for (const auto& [k, v] : a) w[k] = v.str();
  return w;
}

/// Evaluates every axiom at the bound, one case each.
inline void eval_all(VerificationReport& r, logic::BoundedEvaluator& ev, const std::vector<logic::Axiom>& axioms,
                     const std::function<logic::Formula(const logic::Formula&)>& map = nullptr) {
  for (const auto& ax : axioms) {
    const auto f = map ? map(ax.formula) : ax.formula;
    const bool ok = ev.eval(f);
    r.check(ok, ax.id, ok ? Witness{} : logic_witness(ev.counterexample(f)));
  }
}

inline std::uint64_t catalan(std::uint64_t k) {
  std::uint64_t c = 1;  // C(2k, k) / (k + 1), built incrementally
  for (std::uint64_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Recursive-descent split of a tree code into the codes of its children.
inline std::size_t skip_tree(const std::string& s, std::size_t pos) {
  if (pos >= s.size()) throw NotAlmostEven(s);
  if (s[pos] == 'a') return pos + 1;
  return skip_tree(s, skip_tree(s, pos + 1));
}

}  // namespace detail

// ---- strings-laws -----------------------------------------------------------

inline VerificationReport strings_laws(std::size_t bound = 7) {
  using namespace detail;
  VerificationReport r{"strings-laws", bound};
  timed(r, [&] {
    const auto D = all_strings(bound);
    const auto T = all_b_tallies(bound);
    const auto a = BinString::a(), b = BinString::b();
    auto in_domain = [&](const BinString& w) { return w.size() <= bound; };
    std::vector<BinString> yz_table;
    yz_table.reserve(D.size() * D.size());
    for (const auto& y : D) {
      for (const auto& z : D) yz_table.push_back(cat(y, z));
    }

    for (const auto& x : D) {
      r.check(is_tractable(x), "I0", [&] { return Witness{{"x", x.str()}}; });
      const bool qt5 = x == a || x == b ||
                       ([&] {
                         for (const auto& y : D) {
                           if (cat(a, y) == x || cat(b, y) == x) return true;
                         }
                         return false;
                       }() &&
                        [&] {
                          for (const auto& z : D) {
                            if (cat(z, a) == x || cat(z, b) == x) return true;
                          }
                          return false;
                        }());
      r.check(qt5, "QT5", [&] { return Witness{{"x", x.str()}}; });
      r.check(!E(x, x), "ends-irreflexive", [&] { return Witness{{"x", x.str()}}; });
      for (std::size_t iy = 0; iy < D.size(); ++iy) {
        const auto& y = D[iy];
        const auto xy = cat(x, y);
        r.check(xy != a && xy != b, "QT2", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        r.check((cat(x, a) != cat(y, a) || x == y) && (cat(x, b) != cat(y, b) || x == y) &&
                    (cat(a, x) != cat(a, y) || x == y) && (cat(b, x) != cat(b, y) || x == y),
                "QT3", {{"x", x.str()}, {"y", y.str()}});
        r.check(cat(a, x) != cat(b, y) && cat(x, a) != cat(y, b), "QT4", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        r.check((S(x) == y) == ((x == a && y == b) || (x != a && cat(x, b) == y)), "QT6", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        r.check(!(P(x, y) && P(y, x)) || x == y, "subp-antisymmetric", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        r.check(!P(cat(x, y), x) && !P(cat(y, x), x), "factor-not-above-concat", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        if (is_tally_b(y)) r.check(less(x, y) == less(S(x), S(y)), "succ-monotone", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        if (is_tally_b(y) && less(x, y)) r.check(less_eq(S(x), y), "less-then-succ-le", [&] { return Witness{{"u", x.str()}, {"v", y.str()}}; });
        for (std::size_t k = 0; k < D.size(); ++k) {
          const auto& z = D[k];
          const bool assoc = cat(xy, z) == cat(x, yz_table[iy * D.size() + k]);
          r.check(assoc, "QT1", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
          if (P(x, y) && P(y, z)) r.check(P(x, z), "subp-transitive", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
        }
      }
      // ¬∃x1,x2 x1·x·x2 = x
      bool embeds = false;
      for (const auto& x1 : D) {
        for (const auto& x2 : D) embeds = embeds || (x1.size() + x.size() + x2.size() == x.size() && concat(x1, x, x2) == x);
      }
      r.check(!embeds, "no-self-embedding", [&] { return Witness{{"x", x.str()}}; });
    }

    // tallies and successors
    for (const auto& y : D) {
      if (is_tally_b(y)) r.check(is_tally_b(S(y)), "succ-tally", [&] { return Witness{{"y", y.str()}}; });
      bool pred = false;
      for (const auto& y1 : D) pred = pred || (is_tally_b(y1) && y == S(y1));
      r.check(is_tally_b(y) == (y == b || pred), "tally-is-succ", [&] { return Witness{{"y", y.str()}}; });
    }

    // concatenation on b-tallies
    for (const auto& x : T) {
      r.check(cat(x, b) == cat(b, x), "tally-b-commute", [&] { return Witness{{"u", x.str()}}; });
      for (const auto& y : T) {
        r.check(is_tally_b(cat(x, y)), "tally-concat", [&] { return Witness{{"y", x.str()}, {"z", y.str()}}; });
        r.check(less_eq(x, y) || less_eq(y, x), "tally-total", [&] { return Witness{{"x", x.str()}, {"z", y.str()}}; });
        r.check(cat(S(x), y) == cat(x, S(y)) && cat(x, S(y)) == S(cat(x, y)), "tally-succ-concat", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
        r.check(cat(x, y) == cat(y, x), "tally-commute", [&] { return Witness{{"u", x.str()}, {"v", y.str()}}; });
      }
    }

    // prefixes (suffixes) of x are ordered by B (E).
    for (const auto& x : D) {
      for (std::size_t i = 1; i < x.size(); ++i) {
        for (std::size_t j = 1; j < x.size(); ++j) {
          const auto u = x.substr(0, i), v = x.substr(0, j);
          r.check(u == v || B(u, v) || B(v, u), "prefixes-linear", [&] { return Witness{{"x", x.str()}, {"u", u.str()}, {"v", v.str()}}; });
          const auto us = x.substr(x.size() - i, i), vs = x.substr(x.size() - j, j);
          r.check(us == vs || E(us, vs) || E(vs, us), "suffixes-linear", [&] { return Witness{{"x", x.str()}, {"u", us.str()}, {"v", vs.str()}}; });
        }
      }
    }

    for (const auto& y : D) {
      for (const auto& z : D) {
        const auto yz = cat(y, z);
        // prefix and suffix of yz, for every x in the domain
        for (const auto& x : D) {
          const auto w = after_prefix(y, x);
          const bool rhs_b = B(x, y) || x == y || (w && in_domain(*w) && B(*w, z));
          r.check(B(x, yz) == rhs_b, "prefix-of-concat", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
          const auto w2 = before_suffix(z, x);
          const bool rhs_e = E(x, z) || x == z || (w2 && in_domain(*w2) && E(*w2, y));
          r.check(E(x, yz) == rhs_e, "suffix-of-concat", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
        }
        // u B b(xy) with x := y, y := z here.
        const auto bx = cat(b, y), bxy = cat(b, yz);
        for (std::size_t k = 1; k < bxy.size() && k <= bound; ++k) {
          const auto u = bxy.substr(0, k);
          const auto y1 = after_prefix(bx, u);
          const bool ok = u == b || B(u, bx) || u == bx || (y1 && in_domain(*y1) && B(*y1, z));
          r.check(ok, "prefix-of-bpair", [&] { return Witness{{"x", y.str()}, {"y", z.str()}, {"u", u.str()}}; });
        }
        // x1·x·x2 = yz, every part in the domain.
        for (std::size_t i = 1; i < yz.size(); ++i) {
          for (std::size_t j = i + 1; j < yz.size(); ++j) {
            const auto x1 = yz.substr(0, i), x = yz.substr(i, j - i), x2 = yz.substr(j, yz.size() - j);
            if (!in_domain(x1) || !in_domain(x) || !in_domain(x2)) continue;
            bool split = false;
            for (std::size_t k = 1; k < x.size(); ++k) {
              split = split || (E(x.substr(0, k), y) && B(x.substr(k, x.size() - k), z));
            }
            r.check(P(x, y) || P(x, z) || split, "factor-of-concat",
                    {{"x", x.str()}, {"x1", x1.str()}, {"x2", x2.str()}, {"y", y.str()}, {"z", z.str()}});
          }
        }
        // x ranges over substrings in the domain.
        std::set<BinString> in_yz, in_byz;
        for (std::size_t i = 0; i < bxy.size(); ++i) {
          for (std::size_t n = 1; i + n <= bxy.size() && n <= bound; ++n) {
            in_byz.insert(bxy.substr(i, n));
            if (i >= 1) in_yz.insert(bxy.substr(i, n));
          }
        }
        for (const auto& x : in_yz) {
          bool ok = x == yz || P(x, y) || P(x, z);
          if (auto y1 = before_suffix(z, x)) ok = ok || (in_domain(*y1) && E(*y1, y));
          if (auto z1 = after_prefix(y, x)) ok = ok || (in_domain(*z1) && B(*z1, z));
          for (std::size_t k = 1; k < x.size(); ++k) ok = ok || (E(x.substr(0, k), y) && B(x.substr(k, x.size() - k), z));
          r.check(ok, "substring-of-concat", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
        }
        for (const auto& x : in_byz) {
          bool ok = x == bxy || x == b || P(x, yz);
          if (auto u2 = after_prefix(b, x)) ok = ok || (in_domain(*u2) && B(*u2, yz));
          r.check(ok, "substring-of-bpair", [&] { return Witness{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}}; });
        }
      }
    }
  });
  r.sort_failures();
  return r;
}

// ---- tally-arith ------------------------------------------------------------

inline VerificationReport tally_arith(std::size_t bound = 10) {
  using namespace detail;
  VerificationReport r{"tally-arith", bound};
  timed(r, [&] {
    const auto T = all_b_tallies(bound);
    const auto b = BinString::b(), bb = BinString("bb");
    auto Add = [](const BinString& x, const BinString& y, const BinString& z) { return addtally_relation(x, y, z); };
    auto w = [](std::initializer_list<std::pair<const char*, const BinString*>> kv) {
      Witness out;
      for (const auto& [k, v] : kv) out[k] = v->str();
      return out;
    };

    // functionality over tallies and every short string.
    std::set<BinString> mixed(T.begin(), T.end());
    for (const auto& s : all_strings(std::min<std::size_t>(bound, 4))) mixed.insert(s);
    for (const auto& x : mixed) {
      for (const auto& y : mixed) {
        std::vector<BinString> vals;
        for (const auto& v : mixed) {
          if (Add(x, y, v)) vals.push_back(v);
        }
        r.check(vals.size() <= 1, "add-functional", vals.size() <= 1 ? Witness{} : w({{"x", &x}, {"y", &y}, {"v", &vals[0]}, {"w", &vals[1]}}));
      }
    }

    for (const auto& x : T) {
      r.check(Add(x, b, x), "add-right-zero", [&] { return w({{"x", &x}}); });
      r.check(Add(b, x, x), "add-left-zero", [&] { return w({{"y", &x}}); });
      r.check(Add(x, bb, S(x)), "add-right-one", [&] { return w({{"x", &x}}); });
      r.check(Add(bb, x, S(x)), "add-left-one", [&] { return w({{"y", &x}}); });
      for (const auto& y : T) {
        const auto sum = addtally(x, y);
        r.check(Add(x, y, sum) && tally_to_nat(sum) == tally_to_nat(x) + tally_to_nat(y), "addtally-nat",
                w({{"x", &x}, {"y", &y}}));
        bool diff = false;
        for (const auto& z : T) diff = diff || Add(z, x, y);
        r.check(less_eq(x, y) == diff, "le-difference", [&] { return w({{"x", &x}, {"y", &y}}); });
        for (const auto& z : T) {
          if (Add(x, y, z)) {
            r.check(Add(x, cat(y, b), cat(z, b)), "add-right-succ", [&] { return w({{"x", &x}, {"y", &y}, {"z", &z}}); });
            r.check(Add(cat(x, b), y, cat(z, b)), "add-left-succ", [&] { return w({{"x", &x}, {"y", &y}, {"z", &z}}); });
            r.check(Add(y, x, z), "add-commute", [&] { return w({{"x", &x}, {"y", &y}, {"z", &z}}); });
          }
          for (const auto& v : T) {
            if (Add(x, y, v) && Add(x, z, v)) r.check(y == z, "add-cancel", w({{"x", &x}, {"y", &y}, {"z", &z}, {"v", &v}}));
          }
        }
      }
    }

    // Add(x,u,y) & Add(x,v,z) & u ≤ v → y ≤ z
    for (const auto& x : T) {
      for (const auto& u : T) {
        for (const auto& v : T) {
          if (!less_eq(u, v)) continue;
          for (const auto& y : T) {
            if (!Add(x, u, y)) continue;
            for (const auto& z : T) {
              if (Add(x, v, z)) r.check(less_eq(y, z), "add-monotone", w({{"x", &x}, {"u", &u}, {"v", &v}, {"y", &y}, {"z", &z}}));
            }
          }
        }
      }
    }

    // (x+y)+z = x+(y+z)
    for (const auto& x : T) {
      for (const auto& y : T) {
        for (const auto& z : T) {
          for (const auto& u : T) {
            if (!Add(x, y, u)) continue;
            for (const auto& v1 : T) {
              if (!Add(u, z, v1)) continue;
              for (const auto& ww : T) {
                if (!Add(y, z, ww)) continue;
                for (const auto& v2 : T) {
                  if (Add(x, ww, v2)) {
                    r.check(v1 == v2, "add-assoc", [&] { return w({{"x", &x}, {"y", &y}, {"z", &z}, {"u", &u}, {"v1", &v1}, {"w", &ww}, {"v2", &v2}}); });
                  }
                }
              }
            }
          }
        }
      }
    }

    // x1+x2 = z1, y1+y2 = z2, x1 ≤ y1, z1 = Sz2 → Sy2 ≤ x2
    for (const auto& x1 : T) {
      for (const auto& y1 : T) {
        if (!less_eq(x1, y1)) continue;
        for (const auto& x2 : T) {
          for (const auto& y2 : T) {
            for (const auto& z1 : T) {
              if (!Add(x1, x2, z1)) continue;
              for (const auto& z2 : T) {
                if (Add(y1, y2, z2) && z1 == S(z2)) {
                  r.check(less_eq(S(y2), x2), "add-split-bound",
                          w({{"x1", &x1}, {"x2", &x2}, {"y1", &y1}, {"y2", &y2}, {"z1", &z1}, {"z2", &z2}}));
                }
              }
            }
          }
        }
      }
    }
  });
  r.sort_failures();
  return r;
}

// ---- ae-census --------------------------------------------------------------

inline VerificationReport ae_census(std::size_t bound = 13) {
  VerificationReport r{"ae-census", bound};
  timed(r, [&] {
    std::vector<long long> counts, expected;
    for (std::size_t len = 1; len <= bound; ++len) {
      std::uint64_t n = 0;
      std::string s(len, 'a');
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> (len - 1 - i)) & 1 ? 'b' : 'a';
        if (is_almost_even(s)) ++n;
      }
      const std::uint64_t want = len % 2 ? detail::catalan((len - 1) / 2) : 0;
      r.check(n == want, "AE-census", [&] { return Witness{{"length", std::to_string(len)}, {"count", std::to_string(n)}}; });
      if (len % 2) {
        counts.push_back(static_cast<long long>(n));
        expected.push_back(static_cast<long long>(want));
      }
    }
    r.details.emplace_back("counts", counts);
    r.details.emplace_back("catalan", expected);
  });
  r.sort_failures();
  return r;
}

// ---- codec ------------------------------------------------------------------

inline VerificationReport codec(std::size_t bound = 13) {
  VerificationReport r{"codec", bound};
  timed(r, [&] {
    for (std::size_t k = 0; 2 * k + 1 <= bound; ++k) {
      for (const auto& t : trees_with_nodes(k)) {
        bool ok = false;
        try {
          ok = decode_tree(encode_tree(t)) == t;
        } catch (const Error&) {
        }
        r.check(ok, "decode-encode", [&] { return Witness{{"tree", t.to_string()}}; });
      }
    }
    for (const auto& x : all_strings(bound)) {
      if (!is_almost_even(x)) {
        bool rejected = false;
        try {
          decode_tree(x);
        } catch (const NotAlmostEven&) {
          rejected = true;
        }
        r.check(rejected, "decode-rejects", [&] { return Witness{{"x", x.str()}}; });
        continue;
      }
      const TreeTerm t = decode_tree(x);
      r.check(encode_tree(t) == x, "encode-decode", [&] { return Witness{{"x", x.str()}}; });
      if (x.size() == 1) continue;
      const std::size_t mid = detail::skip_tree(x.str(), 1);
      const BinString l = x.substr(1, mid - 1), rt = x.substr(mid, x.size() - mid);
      bool agree = false;
      try {
        const auto [pl, pr] = decode_split_paper(x);
        agree = pl == l && pr == rt && encode_tree(t.left()) == l && encode_tree(t.right()) == rt;
      } catch (const Error&) {
      }
      r.check(agree, "split-agrees", [&] { return Witness{{"x", x.str()}}; });
    }
  });
  r.sort_failures();
  return r;
}

// ---- set-coding -------------------------------------------------------------

inline VerificationReport set_coding(std::size_t bound = 12) {
  VerificationReport r{"set-coding", bound};
  timed(r, [&] {
    const std::size_t comp = bound >= 2 ? (bound - 2) / 2 : 0;
    for (const auto& x : all_strings(comp)) {
      for (const auto& y : all_strings(comp)) {
        const auto z = encode_pair(x, y);
        bool ok = pair_holds(x, y, z);
        try {
          ok = ok && decode_pair(z) == std::make_pair(x, y);
        } catch (const NotAPair&) {
          ok = false;
        }
        r.check(ok, "pair-roundtrip", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
      }
    }
    // Every decomposition z = t a x a t a y a t has t = the leading run of b
    // and x a t a y the middle, so splitting the middle at each inner
    // marker enumerates all candidates.
    for (const auto& z : all_strings(bound)) {
      const std::string& s = z.str();
      std::size_t L = 0;
      while (L < s.size() && s[L] == 'b') ++L;
      std::vector<std::pair<BinString, BinString>> found;
      if (L > 0 && s.size() >= 3 * L + 6) {
        const std::string mid = s.substr(L + 1, s.size() - 2 * L - 2);
        const std::string sep = "a" + std::string(L, 'b') + "a";
        for (std::size_t p = mid.find(sep); p != std::string::npos; p = mid.find(sep, p + 1)) {
          if (p == 0 || p + sep.size() >= mid.size()) continue;
          BinString x(mid.substr(0, p)), y(mid.substr(p + sep.size()));
          if (pair_holds(x, y, z)) found.emplace_back(std::move(x), std::move(y));
        }
      }
      const auto decoded = try_decode_pair(z);
      const bool ok = found.size() <= 1 && decoded.has_value() == (found.size() == 1) && (!decoded || *decoded == found[0]);
      r.check(ok, "pair-unique", [&] { return Witness{{"z", z.str()}}; });
    }

    // members ∘ encode_set over all non-empty sets of strings of length ≤ 3.
    const auto small = all_strings(3);
    for (std::uint32_t mask = 1; mask < (1u << small.size()); ++mask) {
      std::vector<BinString> ws;
      for (std::size_t i = 0; i < small.size(); ++i) {
        if (mask & (1u << i)) ws.push_back(small[i]);
      }
      const auto code = encode_set(ws);
      bool ok = false;
      try {
        ok = members(code.raw) == std::set<BinString>(ws.begin(), ws.end());
      } catch (const NotASet&) {
      }
      r.check(ok, "members-encode", [&] { return Witness{{"z", code.raw.str()}}; });
    }

    const auto cores = all_strings(4);
    auto tallies_for = [](std::size_t lo, std::size_t hi) {
      std::vector<BinString> out;
      for (std::size_t k = lo; k <= hi; ++k) out.push_back(BinString::repeat('b', k));
      return out;
    };

    // Singleton: Set(x) & Firstf(x, t1, aua, t2) & x = t1 aua t2 → members = {u}.
    for (const auto& u : cores) {
      const auto aua = concat(BinString::a(), u, BinString::a());
      const std::size_t top = max_b_run(u.str()) + 3;
      for (const auto& t1 : tallies_for(1, top)) {
        for (const auto& t2 : tallies_for(1, top)) {
          const auto x = concat(t1, aua, t2);
          if (!is_set(x) || !is_first_frame(x, t1, aua, t2)) continue;
          r.check(members(x) == std::set<BinString>{u}, "Singleton", [&] { return Witness{{"x", x.str()}, {"u", u.str()}}; });
        }
      }
    }

    // Doubleton: Pref(aua,t1) & Pref(ava,t2) & t1 < t2 = t3 & u ≠ v, x = t1 aua t2 ava t3.
    for (const auto& u : cores) {
      for (const auto& v : cores) {
        if (u == v) continue;
        const auto aua = concat(BinString::a(), u, BinString::a());
        const auto ava = concat(BinString::a(), v, BinString::a());
        const std::size_t top = std::max(max_b_run(u.str()), max_b_run(v.str())) + 3;
        for (const auto& t1 : tallies_for(1, top)) {
          for (const auto& t2 : tallies_for(1, top)) {
            if (!is_preframe(aua, t1) || !is_preframe(ava, t2) || t1.size() >= t2.size()) continue;
            const auto x = concat(concat(t1, aua, t2), concat(ava, t2));
            bool ok = false;
            try {
              ok = members(x) == std::set<BinString>{u, v};
            } catch (const NotASet&) {
            }
            r.check(ok, "Doubleton", [&] { return Witness{{"x", x.str()}, {"u", u.str()}, {"v", v.str()}}; });
          }
        }
      }
    }

    // Appending: Env(t2,x) & Env(t,y) & (t3 a)By & t2 < t3 & disjoint → some z
    // with Env(t,z) codes the union; the witness is append_codes(x, y).
    auto check_append = [&](const std::vector<BinString>& X, const std::vector<BinString>& Y) {
      const auto cx = encode_set(X);
      const std::size_t env = cx.envelope()->value().size();
      for (std::size_t extra = 0; extra < 2; ++extra) {
        const auto cy = encode_set_from(Y, std::max(ladder_base(Y), env + 1) + extra);
        const BinString& t2 = cx.envelope()->value();
        const BinString& t = cy.envelope()->value();
        const BinString& t3 = cy.frames.front().t1.value();
        if (!envelops(t2, cx.raw) || !envelops(t, cy.raw) || !begins(concat(t3, BinString::a()), cy.raw) ||
            t2.size() >= t3.size()) {
          continue;
        }
        const auto z = append_codes(cx, cy);
        std::set<BinString> want(X.begin(), X.end());
        want.insert(Y.begin(), Y.end());
        bool ok = false;
        try {
          ok = envelops(t, z) && members(z) == want;
        } catch (const NotASet&) {
        }
        r.check(ok, "Appending", [&] { return Witness{{"x", cx.raw.str()}, {"y", cy.raw.str()}, {"z", z.str()}}; });
      }
    };
    for (std::size_t i = 0; i < cores.size(); ++i) {
      for (std::size_t j = 0; j < cores.size(); ++j) {
        if (i == j) continue;
        check_append({cores[i]}, {cores[j]});
        for (std::size_t k = j + 1; k < cores.size(); ++k) {
          if (k == i) continue;
          check_append({cores[i]}, {cores[j], cores[k]});
          check_append({cores[j], cores[k]}, {cores[i]});
        }
      }
    }
  });
  r.sort_failures();
  return r;
}

// ---- recursion --------------------------------------------------------------

inline VerificationReport recursion(std::size_t bound = 8) {
  VerificationReport r{"recursion", bound};
  timed(r, [&] {
    for (const auto& spec : {alpha_spec(), beta_spec()}) {
      const std::string law = "H[" + spec.name + "]";
      for (const auto& m : all_strings(bound)) {
        const BinString want = spec.name == "alpha" ? alpha(m).value() : beta(m).value();
        const auto cert = build_comp_code(spec, m);
        bool ok = check_min_comp(cert.code.raw, m, spec) && eval_H(m, want, spec);
        // No other value is paired with m in the certificate.
        for (const auto& w : cert.code.members()) {
          if (auto zv = try_decode_pair(w); zv && zv->first == m) ok = ok && zv->second == want;
        }
        for (const auto& other : {BinString::a(), BinString::repeat('b', want.size() - 1 ? want.size() - 1 : 2), concat(want, BinString::b())}) {
          if (other != want) ok = ok && !eval_H(m, other, spec);
        }
        r.check(ok, law, [&] { return Witness{{"m", m.str()}}; });
      }

      const std::string mlaw = "MinComp-mutation[" + spec.name + "]";
      for (const auto& m : all_strings(bound / 2)) {
        const auto cert = build_comp_code(spec, m);
        r.check(check_min_comp(cert.code.raw, m, spec), "MinComp-accepts[" + spec.name + "]", [&] { return Witness{{"m", m.str()}}; });
        const auto base = pair_members(cert.table);
        auto reject = [&](std::vector<BinString> ws, const std::string& what) {
          const auto code = encode_set(ws);
          r.check(!check_min_comp(code.raw, m, spec), mlaw, [&] { return Witness{{"m", m.str()}, {"mutation", what}, {"u", code.raw.str()}}; });
        };
        std::vector<BinString> values{BinString::a(), BinString("ab")};
        for (std::size_t k = 1; k <= m.size() + 2; ++k) values.push_back(BinString::repeat('b', k));
        for (std::size_t i = 0; i < base.size(); ++i) {
          auto del = base;
          del.erase(del.begin() + static_cast<long>(i));
          reject(del, "delete " + base[i].str());
          const auto [z, v] = decode_pair(base[i]);
          for (const auto& v2 : values) {
            if (v2 == v) continue;
            auto changed = base;
            changed[i] = encode_pair(z, v2);
            reject(changed, "revalue " + z.str() + "->" + v2.str());
            auto added = base;
            added.push_back(encode_pair(z, v2));
            reject(added, "add " + z.str() + "->" + v2.str());
          }
        }
        for (const auto& z : all_strings(m.size() + 1)) {
          if (cert.table.count(z)) continue;
          auto added = base;
          added.push_back(encode_pair(z, BinString::b()));
          reject(added, "add " + z.str() + "->b");
        }
        auto junk = base;
        junk.push_back(BinString("ab"));
        reject(junk, "add ab");
      }
    }
  });
  r.sort_failures();
  return r;
}

// ---- interpretation ----------------------------------------------------------

inline VerificationReport interpretation(std::size_t bound = 11) {
  VerificationReport r{"interpretation", bound};
  timed(r, [&] {
    logic::BoundedEvaluator ev(bound);
    detail::eval_all(r, ev, logic::axioms_T(), [](const logic::Formula& f) { return logic::translate_T(f); });
    detail::eval_all(r, ev, logic::lemma_statements());
    // ⊑* and ⊆p agree on tree codes.
    std::vector<BinString> ae;
    for (const auto& x : all_strings(bound)) {
      if (is_almost_even(x)) ae.push_back(x);
    }
    for (const auto& x : ae) {
      for (const auto& y : ae) {
        r.check(subterm_codes(y).count(x) == (is_substring(x, y) ? 1u : 0u), "substar-subp", [&] { return Witness{{"x", x.str()}, {"y", y.str()}}; });
      }
    }
  });
  r.sort_failures();
  return r;
}

// ---- wt-translation ----------------------------------------------------------

inline VerificationReport wt_translation(std::size_t bound = 11, std::size_t wt_depth = 3, std::size_t tau_depth = 5) {
  VerificationReport r{"wt-translation", bound};
  timed(r, [&] {
    logic::BoundedEvaluator ev(bound);
    detail::eval_all(r, ev, logic::axioms_WT(wt_depth), [](const logic::Formula& f) { return logic::translate_WT(f); });
    std::unordered_set<BinString> codes;
    const auto trees = trees_up_to_depth(tau_depth);
    for (const auto& t : trees) {
      const bool fresh = codes.insert(encode_tree(t)).second;
      r.check(fresh, "tau-injective", [&] { return Witness{{"tree", t.to_string()}}; });
    }
  });
  r.sort_failures();
  return r;
}

// ---- finite-models -----------------------------------------------------------

namespace detail {

/// All variable-free 𝓛_C terms of depth ≤ d, by depth.
inline std::vector<logic::Term> c_terms(std::size_t d) {
  std::vector<logic::Term> out{logic::ca(), logic::cb()};
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<logic::Term> next{logic::ca(), logic::cb()};
    for (const auto& l : out) {
      for (const auto& r : out) next.push_back(logic::star(l, r));
    }
    out = std::move(next);
  }
  return out;
}

inline std::string pool_text(const std::vector<logic::Term>& pool) {
  std::string s = "[";
  for (std::size_t i = 0; i < pool.size(); ++i) s += (i ? ", " : "") + logic::to_infix(pool[i]);
  return s + "]";
}

inline std::string tree_pool_text(const std::vector<TreeTerm>& pool) {
  std::string s = "[";
  for (std::size_t i = 0; i < pool.size(); ++i) s += (i ? ", " : "") + pool[i].to_string();
  return s + "]";
}

/// Calls f on every subset of `items` with 1..k elements.
template <class T, class F>
void subsets_up_to(const std::vector<T>& items, std::size_t k, F&& f) {
  std::vector<T> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (!cur.empty()) f(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < items.size(); ++i) {
      cur.push_back(items[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
}

}  // namespace detail

struct FiniteModelsPlan {
  std::size_t max_pool = 4;      // terms per pool
  std::size_t max_depth = 3;     // term depth
  std::size_t full_depth = 2;    // depth at which pools of up to `full_pool` terms are exhaustive
  std::size_t full_pool = 2;
  std::size_t samples = 1000;    // random pools of `max_pool` terms of depth ≤ max_depth
  std::uint32_t seed = 20261014;
  std::size_t tree_depth = 3;    // WQT pools: every set of ≤ max_pool trees of this depth
};

/// Checks the model built on the variable-free terms occurring in the
/// instances against the instances themselves.
inline void check_pool_model(VerificationReport& r, const std::vector<logic::Axiom>& instances, const std::string& pool,
                             std::map<std::string, long long>& failing) {
  const auto model = build_model(occurring_terms(instances));
  auto rep = check_axioms(model, instances);
  r.cases += rep.cases;
  std::set<std::string> schemas;
  for (auto& f : rep.failures) {
    f.witness["@pool"] = pool;
    schemas.insert(f.law.substr(0, f.law.find('[')));
    r.failures.push_back(std::move(f));
  }
  for (const auto& s : schemas) ++failing[s];
}

inline VerificationReport finite_models(const FiniteModelsPlan& plan = {}) {
  VerificationReport r{"finite-models", plan.max_pool};
  timed(r, [&] {
    std::map<std::string, long long> failing;
    long long pools = 0, tree_pools = 0;
    auto run = [&](const std::vector<logic::Term>& pool) {
      ++pools;
      check_pool_model(r, logic::axioms_WQTstar(pool), detail::pool_text(pool), failing);
    };
    detail::subsets_up_to(detail::c_terms(plan.full_depth), plan.full_pool, run);
    const auto deep = detail::c_terms(plan.max_depth);
    for (const auto& t : deep) {
      if (logic::term_depth(t) > plan.full_depth) run({t});
    }
    std::mt19937 rng(plan.seed);
    std::uniform_int_distribution<std::size_t> pick(0, deep.size() - 1);
    for (std::size_t s = 0; s < plan.samples && deep.size() >= plan.max_pool; ++s) {
      std::vector<logic::Term> pool;
      while (pool.size() < plan.max_pool) {
        const auto& t = deep[pick(rng)];
        if (std::none_of(pool.begin(), pool.end(), [&](const logic::Term& u) { return logic::term_equal(u, t); })) pool.push_back(t);
      }
      run(pool);
    }
    detail::subsets_up_to(trees_up_to_depth(plan.tree_depth), plan.max_pool, [&](const std::vector<TreeTerm>& pool) {
      ++tree_pools;
      check_pool_model(r, logic::axioms_WQT(pool), detail::tree_pool_text(pool), failing);
    });
    r.details.emplace_back("pools", std::vector<long long>{pools});
    r.details.emplace_back("tree_pools", std::vector<long long>{tree_pools});
    for (const auto& [schema, n] : failing) r.details.emplace_back("failing_pools[" + schema + "]", std::vector<long long>{n});
  });
  r.sort_failures();
  return r;
}

// ---- registry ----------------------------------------------------------------

struct Suite {
  std::string name;
  std::size_t default_bound;
  std::function<VerificationReport(std::size_t)> run;
};

inline const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"strings-laws", 7, [](std::size_t n) { return strings_laws(n); }},
      {"tally-arith", 10, [](std::size_t n) { return tally_arith(n); }},
      {"ae-census", 13, [](std::size_t n) { return ae_census(n); }},
      {"codec", 13, [](std::size_t n) { return codec(n); }},
      {"set-coding", 12, [](std::size_t n) { return set_coding(n); }},
      {"recursion", 8, [](std::size_t n) { return recursion(n); }},
      {"interpretation", 11, [](std::size_t n) { return interpretation(n); }},
      {"wt-translation", 11, [](std::size_t n) { return wt_translation(n); }},
      {"finite-models", 4, [](std::size_t n) {
         FiniteModelsPlan p;
         p.max_pool = n;
         p.full_pool = std::min(p.full_pool, n);
         return finite_models(p);
       }},
  };
  return suites;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

/// Runs one suite, or every suite for "all" (each at its own default when no
/// bound is given).
inline VerificationReport run_suite(const std::string& name, std::optional<std::size_t> bound = std::nullopt) {
  if (name == "all") {
    VerificationReport r{"all", bound.value_or(0)};
    timed(r, [&] {
      for (const auto& s : registry()) {
        auto part = s.run(bound.value_or(s.default_bound));
        r.absorb(part);
        r.details.emplace_back("cases[" + s.name + "]", std::vector<long long>{static_cast<long long>(part.cases)});
      }
    });
    r.sort_failures();
    return r;
  }
  const Suite* s = find_suite(name);
  if (!s) throw Error("unknown suite: " + name);
  return s->run(bound.value_or(s->default_bound));
}

}  // namespace strtree::suites
