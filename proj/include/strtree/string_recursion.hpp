#pragma once

// Recursion on strings along the R-order:
//   h(a) = p, h(b) = q, h(y·a) = f1(y, h(y)), h(y·b) = f2(y, h(y)),
// evaluated directly and witnessed by computation certificates: set codes
// whose members are pair codes (index, value).

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/set_coding.hpp"

namespace strtree {

struct RecursionSpec {
  using Step = std::function<BinString(const BinString& y, const BinString& u)>;
  std::string name;
  BinString p;
  BinString q;
  Step f1;
  Step f2;
};

inline RecursionSpec alpha_spec() {
  return {"alpha", BinString("bb"), BinString("b"),
          [](const BinString&, const BinString& u) { return concat(u, BinString::b()); },
          [](const BinString&, const BinString& u) { return u; }};
}

inline RecursionSpec beta_spec() {
  return {"beta", BinString("b"), BinString("bb"),
          [](const BinString&, const BinString& u) { return u; },
          [](const BinString&, const BinString& u) { return concat(u, BinString::b()); }};
}

/// Left-to-right fold over the digits of m.
inline BinString run_recursion(const RecursionSpec& spec, const BinString& m) {
  BinString h = m[0] == 'a' ? spec.p : spec.q;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const BinString y = m.substr(0, i);
    h = m[i] == 'a' ? spec.f1(y, h) : spec.f2(y, h);
  }
  return h;
}

/// Least X with a ∈ X, b ∈ X when b ≤ m, and z·a, z·b ∈ X for z ∈ X with z < m.
inline std::set<BinString> index_closure(const BinString& m) {
  std::set<BinString> out{BinString::a()};
  std::deque<BinString> todo{BinString::a()};
  if (less_eq(BinString::b(), m)) {
    out.insert(BinString::b());
    todo.push_back(BinString::b());
  }
  while (!todo.empty()) {
    const BinString z = todo.front();
    todo.pop_front();
    if (!less(z, m)) continue;
    for (const auto& next : {concat(z, BinString::a()), concat(z, BinString::b())}) {
      if (out.insert(next).second) todo.push_back(next);
    }
  }
  return out;
}

struct CompCode {
  SetCode code;
  std::map<BinString, BinString> table;  // index -> value

  /// Length of the certificate string.
  std::size_t size() const { return code.raw.size(); }
};

/// (index, value) for every closure index, values computed along the closure.
inline std::map<BinString, BinString> comp_table(const RecursionSpec& spec, const BinString& m) {
  const auto idx = index_closure(m);
  std::map<BinString, BinString> table;
  // Shortlex order visits z before z·a and z·b.
  for (const auto& z : idx) {
    if (z.size() == 1) {
      table.emplace(z, z.str() == "a" ? spec.p : spec.q);
      continue;
    }
    const BinString parent = z.substr(0, z.size() - 1);
    const BinString& hp = table.at(parent);
    table.emplace(z, z.back() == 'a' ? spec.f1(parent, hp) : spec.f2(parent, hp));
  }
  return table;
}

inline std::vector<BinString> pair_members(const std::map<BinString, BinString>& table) {
  std::vector<BinString> out;
  for (const auto& [z, v] : table) out.push_back(encode_pair(z, v));
  return out;
}

inline CompCode build_comp_code(const RecursionSpec& spec, const BinString& m) {
  auto table = comp_table(spec, m);
  return CompCode{encode_set(pair_members(table)), std::move(table)};
}

/// Comp(u, m) clause by clause. Members that are not pair codes are ignored,
/// as in the definition, which only constrains members that decode.
inline bool check_comp(const BinString& u, const BinString& m, const RecursionSpec& spec) {
  std::set<BinString> mem;
  try {
    mem = members(u);  // C1
  } catch (const NotASet&) {
    return false;
  }
  auto has = [&](const BinString& z, const BinString& v) { return mem.count(encode_pair(z, v)) > 0; };
  if (!has(BinString::a(), spec.p)) return false;                                        // C2
  if (less_eq(BinString::b(), m) && !has(BinString::b(), spec.q)) return false;           // C3
  std::map<BinString, BinString> seen;
  for (const auto& w : mem) {
    const auto zv = try_decode_pair(w);
    if (!zv) continue;
    const auto& [z, v] = *zv;
    if (less(z, m)) {
      if (!has(concat(z, BinString::a()), spec.f1(z, v))) return false;                  // C4
      if (!has(concat(z, BinString::b()), spec.f2(z, v))) return false;                  // C5
    }
    auto [it, fresh] = seen.emplace(z, v);
    if (!fresh && it->second != v) return false;                                         // C6
  }
  return true;
}

/// The index-bound clause of MinComp for one decoded index z.
inline bool within_index_bound(const BinString& z, const BinString& m) {
  if (m.str() == "a" && z.str() == "a") return true;
  if (m.str() == "b" && z.str() == "b") return true;
  // n < m requires n = a or n a proper prefix of m.
  std::vector<BinString> below;
  if (m.str() != "a") below.push_back(BinString::a());
  for (std::size_t k = 1; k < m.size(); ++k) below.push_back(m.substr(0, k));
  for (const auto& n : below) {
    if (!less(n, m)) continue;
    if (less_eq(z, concat(n, BinString::a())) || less_eq(z, concat(n, BinString::b()))) return true;
  }
  return false;
}

/// MinComp(u, m). The minimality clause over all codes u' is decided as
/// member-set equality with the canonical certificate: C2-C5 force every
/// Comp code to contain the closure pairs (induction along <), and Comp
/// itself forces the converse inclusion.
inline bool check_min_comp(const BinString& u, const BinString& m, const RecursionSpec& spec) {
  if (!check_comp(u, m, spec)) return false;
  const auto mem = members(u);
  const auto canon = pair_members(comp_table(spec, m));
  if (mem != std::set<BinString>(canon.begin(), canon.end())) return false;
  for (const auto& w : mem) {
    const auto zv = try_decode_pair(w);
    if (!zv || !within_index_bound(zv->first, m)) return false;
  }
  return true;
}

/// H(m, y): some MinComp certificate for m contains Pair[m, y]. All MinComp
/// certificates share one member set, so the canonical one decides it.
inline bool eval_H(const BinString& m, const BinString& y, const RecursionSpec& spec) {
  const auto cert = build_comp_code(spec, m);
  return check_min_comp(cert.code.raw, m, spec) && is_member(encode_pair(m, y), cert.code.raw);
}

}  // namespace strtree
