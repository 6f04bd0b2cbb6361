#pragma once

// Finite sets and ordered pairs of strings coded as single strings, with
// b-tallies as frame markers.
//
// Every marker of a frame is adjacent to an a digit or to an end of the code,
// so markers are always maximal runs of b. parse_set therefore enumerates
// frames as pairs of maximal runs and evaluates the Env conditions over that
// finite structure.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strtree/bin_string.hpp"
#include "strtree/error.hpp"

namespace strtree {

enum class FrameKind { First, Intermediate, Last };

inline const char* to_string(FrameKind k) {
  switch (k) {
    case FrameKind::First: return "First";
    case FrameKind::Intermediate: return "Intermediate";
    case FrameKind::Last: return "Last";
  }
  return "?";
}

struct Frame {
  BTally t1;
  BinString payload;  // a·w·a
  BTally t2;
  FrameKind kind;

  /// w, where payload = a·w·a.
  BinString core() const { return payload.substr(1, payload.size() - 2); }

  bool operator==(const Frame&) const = default;
};

struct SetCode {
  BinString raw;
  std::vector<Frame> frames;  // in order of occurrence; empty for aa

  std::set<BinString> members() const {
    std::set<BinString> out;
    for (const auto& f : frames) out.insert(f.core());
    return out;
  }

  /// Longest b-tally of the code; none for aa.
  std::optional<BTally> envelope() const {
    if (frames.empty()) return std::nullopt;
    return frames.back().t2;
  }
};

/// b^(r+1) where r is the longest run of b in x.
inline BTally min_nonoccurrent_tally(const BinString& x) { return nat_to_tally(max_b_run(x.str())); }

namespace detail {

struct Run {
  std::size_t begin, end;  // [begin, end)
  std::size_t len() const { return end - begin; }
};

inline std::vector<Run> b_runs(const std::string& s) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != 'b') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] == 'b') ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

/// All frames of x, with every kind the frame satisfies.
struct RawFrame {
  std::size_t i, j;  // run indices
  bool first, inter, last;
};

inline std::vector<RawFrame> raw_frames(const std::string& s, const std::vector<Run>& runs) {
  std::vector<RawFrame> out;
  const std::size_t n = s.size();
  // Runs are maximal, so the longest run inside s[r1.end, r2.begin) is the
  // longest run strictly between them, and the one inside s[0, r1.begin - 1)
  // the longest run before r1.
  std::size_t before = 0;
  for (std::size_t i = 0; i < runs.size(); before = std::max(before, runs[i].len()), ++i) {
    const Run& r1 = runs[i];
    std::size_t between = 0;
    for (std::size_t j = i + 1; j < runs.size(); between = std::max(between, runs[j].len()), ++j) {
      const Run& r2 = runs[j];
      // Pref(u, t1): u = s[r1.end, r2.begin) has the shape a·y·a with |y| ≥ 1
      // and t1 is longer than every run inside u.
      const std::size_t ulen = r2.begin - r1.end;
      if (ulen < 3) continue;
      if (r1.len() <= between) continue;
      const bool at_start = r1.begin == 0;
      const bool at_end = r2.end == n;
      // w a t1 ... with Max⁺T_b(t1, w): w = s[0, r1.begin - 1), non-empty.
      const bool w_ok = r1.begin >= 2 && r1.len() > before;
      const bool eq = r1.len() == r2.len();
      const bool lt = r1.len() < r2.len();
      // t1·u·t2·a proper prefix of x <=> at least two digits follow t2.
      const bool tail = r2.end + 2 <= n;
      RawFrame f{i, j, false, false, false};
      f.first = at_start && ((eq && at_end) || (lt && tail));
      f.last = eq && at_end && (at_start || w_ok);
      f.inter = lt && w_ok && tail;
      if (f.first || f.inter || f.last) out.push_back(f);
    }
  }
  return out;
}

}  // namespace detail

/// Decides Set(x) by evaluating the Env conditions; throws NotASet naming the
/// first condition that fails.
inline SetCode parse_set(const BinString& x) {
  const std::string& s = x.str();
  if (s == "aa") return SetCode{x, {}};
  const auto runs = detail::b_runs(s);
  if (runs.empty()) throw NotASet("(a)", "no b-tally occurs in " + s);
  std::size_t t = 0;
  for (const auto& r : runs) t = std::max(t, r.len());

  const auto frames = detail::raw_frames(s, runs);
  auto payload_of = [&](const detail::RawFrame& f) { return s.substr(runs[f.i].end, runs[f.j].begin - runs[f.i].end); };

  if (std::none_of(frames.begin(), frames.end(), [](const auto& f) { return f.first; })) {
    throw NotASet("(b)", "no first frame in " + s);
  }
  if (std::none_of(frames.begin(), frames.end(),
                   [&](const auto& f) { return f.last && runs[f.i].len() == t; })) {
    throw NotASet("(c)", "no last frame marked by the longest tally in " + s);
  }
  for (std::size_t p = 0; p < frames.size(); ++p) {
    for (std::size_t q = p + 1; q < frames.size(); ++q) {
      const auto& f = frames[p];
      const auto& g = frames[q];
      const bool same_u = payload_of(f) == payload_of(g);
      const bool same_t = runs[f.i].len() == runs[g.i].len();
      if (same_u && !same_t) throw NotASet("(d)", "one string framed by two initial markers in " + s);
      if (same_t && !same_u) throw NotASet("(e)", "one initial marker frames two strings in " + s);
    }
  }

  SetCode out{x, {}};
  for (const auto& f : frames) {
    FrameKind kind = f.last ? FrameKind::Last : f.first ? FrameKind::First : FrameKind::Intermediate;
    out.frames.push_back(Frame{nat_to_tally(runs[f.i].len() - 1), BinString(payload_of(f)),
                               nat_to_tally(runs[f.j].len() - 1), kind});
  }
  return out;
}

inline bool is_set(const BinString& x) {
  try {
    parse_set(x);
    return true;
  } catch (const NotASet&) {
    return false;
  }
}

inline std::set<BinString> members(const BinString& x) { return parse_set(x).members(); }

/// y ε x.
inline bool is_member(const BinString& y, const BinString& x) {
  try {
    return members(x).count(y) > 0;
  } catch (const NotASet&) {
    return false;
  }
}

/// Max⁺T_b(t, u): t is a b-tally longer than every b-tally in u.
inline bool max_plus_tally(const BinString& t, const BinString& u) {
  return is_tally_b(t) && t.size() > max_b_run(u.str());
}

/// Pref(u, t): u = a·y·a and Max⁺T_b(t, u).
inline bool is_preframe(const BinString& u, const BinString& t) {
  return u.size() >= 3 && u.front() == 'a' && u.back() == 'a' && max_plus_tally(t, u);
}

/// Firstf(x, t1, u, t2) read from its definition.
inline bool is_first_frame(const BinString& x, const BinString& t1, const BinString& u, const BinString& t2) {
  if (!is_preframe(u, t1) || !is_tally_b(t2)) return false;
  const std::string f = t1.str() + u.str() + t2.str();
  if (t1 == t2 && f == x.str()) return true;
  return t1.size() < t2.size() && x.size() > f.size() + 1 && x.str().compare(0, f.size() + 1, f + "a") == 0;
}

/// Env(t, x): x is a set code other than aa and t is its longest b-tally.
inline bool envelops(const BinString& t, const BinString& x) {
  return x.str() != "aa" && is_tally_b(t) && t.size() == max_b_run(x.str()) && is_set(x);
}

/// Deduplicates and sorts by (length, a < b).
inline std::vector<BinString> canonical_members(std::vector<BinString> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

/// 1 + the longest b-run over all payloads a·w·a.
inline std::size_t ladder_base(const std::vector<BinString>& ws) {
  std::size_t r = 0;
  for (const auto& w : ws) r = std::max(r, max_b_run(w.str()));
  return r + 1;
}

/// Ladder code t1 p1 t2 p2 ... tn pn tn with tᵢ = b^(base+i-1); base must be
/// at least ladder_base(ws).
inline SetCode encode_set_from(const std::vector<BinString>& input, std::size_t base) {
  const auto ws = canonical_members(input);
  if (ws.empty()) return SetCode{BinString("aa"), {}};
  if (base < ladder_base(ws)) throw Error("ladder base below the longest payload run");
  std::string raw;
  SetCode out{BinString::a(), {}};
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto t1 = BinString::repeat('b', base + i);
    const auto t2 = BinString::repeat('b', base + std::min(i + 1, ws.size() - 1));
    const auto payload = concat(BinString::a(), ws[i], BinString::a());
    raw += t1.str() + payload.str();
    const FrameKind kind = (i + 1 == ws.size()) ? FrameKind::Last : (i == 0 ? FrameKind::First : FrameKind::Intermediate);
    out.frames.push_back(Frame{BTally::from(t1), payload, BTally::from(t2), kind});
  }
  raw += std::string(base + ws.size() - 1, 'b');
  out.raw = BinString(std::move(raw));
  return out;
}

inline SetCode encode_set(const std::vector<BinString>& ws) {
  return encode_set_from(ws, ladder_base(canonical_members(ws)));
}

/// Joins two ladder codes with disjoint members: x without its final
/// envelope marker, then y. y's first marker must exceed x's envelope.
inline BinString append_codes(const SetCode& x, const SetCode& y) {
  if (x.frames.empty()) return y.raw;
  if (y.frames.empty()) return x.raw;
  const std::size_t env = x.envelope()->value().size();
  if (y.frames.front().t1.value().size() <= env) throw Error("appended ladder does not ascend");
  return BinString(x.raw.str().substr(0, x.raw.size() - env) + y.raw.str());
}

/// z = t·a·x·a·t·a·y·a·t with t the shortest b-tally not occurring in x·a·y.
inline BinString encode_pair(const BinString& x, const BinString& y) {
  const auto t = min_nonoccurrent_tally(concat(x, BinString::a(), y)).value().str();
  return BinString(t + "a" + x.str() + "a" + t + "a" + y.str() + "a" + t);
}

/// Inverse of encode_pair; throws NotAPair on anything else.
inline std::pair<BinString, BinString> decode_pair(const BinString& z) {
  const std::string& s = z.str();
  std::size_t L = 0;
  while (L < s.size() && s[L] == 'b') ++L;
  auto fail = [&](const char* why) { return NotAPair(std::string(why) + ": " + s); };
  if (L == 0) throw fail("no leading tally");
  // t a x a t a y a t with |x|,|y| ≥ 1
  if (s.size() < 3 * L + 6) throw fail("too short");
  if (s[L] != 'a' || s[s.size() - L - 1] != 'a') throw fail("marker not followed by a");
  if (s.compare(s.size() - L, L, std::string(L, 'b')) != 0) throw fail("missing closing marker");
  const std::string mid = s.substr(L + 1, s.size() - 2 * L - 2);  // x a t a y
  std::optional<detail::Run> sep;
  for (const auto& r : detail::b_runs(mid)) {
    if (r.len() < L) continue;
    if (r.len() > L || sep) throw fail("marker is not the shortest non-occurrent tally");
    sep = r;
  }
  if (!sep || sep->begin < 2 || sep->end + 2 > mid.size()) throw fail("no inner marker");
  if (mid[sep->begin - 1] != 'a' || mid[sep->end] != 'a') throw fail("inner marker not delimited by a");
  BinString x(mid.substr(0, sep->begin - 1));
  BinString y(mid.substr(sep->end + 1));
  if (max_b_run(x.str() + "a" + y.str()) + 1 != L) throw fail("marker is not the shortest non-occurrent tally");
  return {std::move(x), std::move(y)};
}

/// Pair[x, y, z] read directly: some b-tally t ⊆p z has z = taxatayat and is
/// a shortest b-tally not occurring in x·a·y.
inline bool pair_holds(const BinString& x, const BinString& y, const BinString& z) {
  const std::string xay = x.str() + "a" + y.str();
  for (std::size_t k = 1; k <= z.size(); ++k) {
    const std::string t(k, 'b');
    if (z.str() != t + "a" + x.str() + "a" + t + "a" + y.str() + "a" + t) continue;
    auto max_plus = [&](std::size_t len) {
      // MaxT_b(b^len, xay) and not b^len ⊆p xay
      return len >= max_b_run(xay) && xay.find(std::string(len, 'b')) == std::string::npos;
    };
    if (!max_plus(k)) continue;
    bool least = true;
    for (std::size_t k2 = 1; k2 < k; ++k2) least = least && !max_plus(k2);
    if (least) return true;
  }
  return false;
}

inline std::optional<std::pair<BinString, BinString>> try_decode_pair(const BinString& z) {
  try {
    return decode_pair(z);
  } catch (const NotAPair&) {
    return std::nullopt;
  }
}

}  // namespace strtree
