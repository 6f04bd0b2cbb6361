#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "strtree/error.hpp"
#include "strtree/set_coding.hpp"

using namespace strtree;

namespace {

BinString S_(const char* s) { return BinString::parse(s); }
std::string bs(std::size_t n) { return std::string(n, 'b'); }

std::size_t oracle_longest_run(const std::string& s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t j = i;
    while (j < s.size() && s[j] == 'b') ++j;
    best = std::max(best, j - i);
  }
  return best;
}

// Ladder built by hand: markers b^(L+i), final marker repeated.
std::string oracle_ladder(std::vector<std::string> ws) {
  std::sort(ws.begin(), ws.end(), [](const auto& x, const auto& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::size_t L = 0;
  for (const auto& w : ws) L = std::max(L, oracle_longest_run(w));
  L += 1;
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += bs(L + i) + "a" + ws[i] + "a";
  return out + bs(L + ws.size() - 1);
}

}  // namespace

TEST(MinNonoccurrentTally, Examples) {
  EXPECT_EQ(min_nonoccurrent_tally(S_("aaa")).value(), S_("b"));
  EXPECT_EQ(min_nonoccurrent_tally(S_("abba")).value(), S_("bbb"));
  EXPECT_EQ(min_nonoccurrent_tally(S_("b")).value(), S_("bb"));
}

TEST(ParseSet, Examples) {
  EXPECT_TRUE(parse_set(S_("aa")).frames.empty());
  const auto one = parse_set(S_("baaab"));
  ASSERT_EQ(one.frames.size(), 1u);
  EXPECT_EQ(one.frames[0].t1.value(), S_("b"));
  EXPECT_EQ(one.frames[0].payload, S_("aaa"));
  EXPECT_EQ(one.frames[0].t2.value(), S_("b"));
  EXPECT_EQ(one.frames[0].kind, FrameKind::Last);
  EXPECT_THROW(parse_set(S_("ba")), NotASet);
}

TEST(ParseSet, ReportsFailingCondition) {
  try {
    parse_set(S_("aaa"));  // no b-tally at all
    FAIL();
  } catch (const NotASet& e) {
    EXPECT_EQ(e.condition(), "(a)") << e.what();
  }
}

TEST(Members, Examples) {
  EXPECT_TRUE(members(S_("aa")).empty());
  EXPECT_EQ(members(S_("baaab")), (std::set<BinString>{S_("a")}));
  const auto ab = encode_set({S_("a"), S_("b")});
  EXPECT_EQ(members(ab.raw), (std::set<BinString>{S_("a"), S_("b")}));
}

TEST(EncodeSet, Examples) {
  EXPECT_EQ(encode_set({}).raw, S_("aa"));
  EXPECT_EQ(encode_set({S_("a")}).raw, S_("baaab"));
  // payloads aaa and aba: L = 2, markers bb and bbb
  EXPECT_EQ(encode_set({S_("a"), S_("b")}).raw.str(), oracle_ladder({"a", "b"}));
  EXPECT_EQ(encode_set({S_("a"), S_("b")}).raw, S_("bbaaabbbababbb"));
  EXPECT_EQ(encode_set({S_("b"), S_("a"), S_("b")}).raw, encode_set({S_("a"), S_("b")}).raw);
}

TEST(EncodePair, Examples) {
  EXPECT_EQ(encode_pair(S_("a"), S_("a")), S_("baaabaaab"));
  EXPECT_EQ(encode_pair(S_("b"), S_("a")).str(), "bb" + std::string("a") + "b" + "a" + "bb" + "a" + "a" + "a" + "bb");
  EXPECT_EQ(decode_pair(S_("baaabaaab")), std::make_pair(S_("a"), S_("a")));
  EXPECT_THROW(decode_pair(S_("aa")), NotAPair);
}

TEST(DecodePair, RejectsTampering) {
  const auto z = encode_pair(S_("ab"), S_("ba")).str();
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::string t = z;
    t[i] = t[i] == 'a' ? 'b' : 'a';
    const BinString tz(t);
    const auto got = try_decode_pair(tz);
    if (got) {
      // Flipping a digit can only land on another valid code whose encoding is tz.
      EXPECT_EQ(encode_pair(got->first, got->second), tz);
      EXPECT_NE(*got, std::make_pair(S_("ab"), S_("ba")));
    }
  }
  // Non-minimal marker: bb where b already suffices.
  EXPECT_THROW(decode_pair(S_("bbaaabbaaabb")), NotAPair);
  EXPECT_FALSE(pair_holds(S_("a"), S_("a"), S_("bbaaabbaaabb")));
}

TEST(SetProperties, PairRoundTripAndDefinition) {
  for (const auto& x : all_strings(5)) {
    for (const auto& y : all_strings(5)) {
      const auto z = encode_pair(x, y);
      ASSERT_TRUE(pair_holds(x, y, z));
      ASSERT_EQ(decode_pair(z), std::make_pair(x, y));
      const std::string t = bs(oracle_longest_run(x.str() + "a" + y.str()) + 1);
      ASSERT_EQ(z.str(), t + "a" + x.str() + "a" + t + "a" + y.str() + "a" + t);
    }
  }
}

TEST(SetProperties, PairUniqueness) {
  // Brute force over every split z = t a x a t a y a t.
  for (const auto& z : all_strings(12)) {
    const std::string& s = z.str();
    std::set<std::pair<BinString, BinString>> found;
    for (std::size_t k = 1; 3 * k + 6 <= s.size(); ++k) {
      for (std::size_t xl = 1; 3 * k + 5 + xl <= s.size(); ++xl) {
        const std::size_t yl = s.size() - 3 * k - 4 - xl;
        const BinString x(s.substr(k + 1, xl)), y(s.substr(2 * k + xl + 3, yl));
        if (pair_holds(x, y, z)) found.emplace(x, y);
      }
    }
    ASSERT_LE(found.size(), 1u) << z;
    const auto d = try_decode_pair(z);
    ASSERT_EQ(d.has_value(), found.size() == 1) << z;
    if (d) {
      ASSERT_EQ(*d, *found.begin());
    }
  }
}

TEST(SetProperties, MembersOfEncodeSet) {
  const auto small = all_strings(3);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      for (std::size_t k = j; k < small.size(); ++k) {
        const std::vector<BinString> ws{small[i], small[j], small[k]};
        const auto code = encode_set(ws);
        ASSERT_EQ(code.raw.str(), oracle_ladder({small[i].str(), small[j].str(), small[k].str()}));
        ASSERT_EQ(members(code.raw), std::set<BinString>(ws.begin(), ws.end())) << code.raw;
        ASSERT_EQ(parse_set(code.raw).frames, code.frames) << code.raw;
        ASSERT_TRUE(envelops(code.envelope()->value(), code.raw));
      }
    }
  }
}

TEST(SetProperties, EncodedFramesSatisfyInvariants) {
  const auto code = encode_set({S_("bb"), S_("a"), S_("bab"), S_("abba")});
  std::size_t prev = 0;
  for (std::size_t i = 0; i < code.frames.size(); ++i) {
    const auto& f = code.frames[i];
    EXPECT_TRUE(is_preframe(f.payload, f.t1.value()));
    EXPECT_GT(f.t1.value().size(), prev);
    prev = f.t1.value().size();
    if (f.kind == FrameKind::Last) {
      EXPECT_EQ(f.t1, f.t2);
    } else {
      EXPECT_LT(f.t1, f.t2);
    }
  }
  EXPECT_EQ(code.envelope()->value().size(), max_b_run(code.raw.str()));
}

TEST(SetProperties, SingletonLemma) {
  for (const auto& u : all_strings(5)) {
    const auto aua = concat(BinString::a(), u, BinString::a());
    const auto t = min_nonoccurrent_tally(aua).value();
    const auto x = concat(t, aua, t);
    ASSERT_EQ(members(x), std::set<BinString>{u}) << x;
    ASSERT_TRUE(is_first_frame(x, t, aua, t));
  }
}

TEST(SetProperties, DoubletonLemma) {
  const auto D = all_strings(4);
  for (const auto& u : D) {
    for (const auto& v : D) {
      if (u == v) continue;
      const auto aua = concat(BinString::a(), u, BinString::a());
      const auto ava = concat(BinString::a(), v, BinString::a());
      const auto t1 = BinString::repeat('b', std::max(max_b_run(u.str()), max_b_run(v.str())) + 1);
      const auto t2 = concat(t1, BinString::b());
      const auto x = concat(concat(t1, aua, t2), concat(ava, t2));
      ASSERT_EQ(members(x), (std::set<BinString>{u, v})) << x;
    }
  }
}

TEST(SetProperties, AppendingLemma) {
  const auto D = all_strings(3);
  for (const auto& u : D) {
    for (const auto& v : D) {
      for (const auto& w : D) {
        if (u == v || u == w || v == w) continue;
        const auto cx = encode_set({u});
        const auto cy = encode_set_from({v, w}, std::max(ladder_base({v, w}), cx.envelope()->value().size() + 1));
        const auto z = append_codes(cx, cy);
        ASSERT_EQ(members(z), (std::set<BinString>{u, v, w})) << z;
        ASSERT_TRUE(envelops(cy.envelope()->value(), z));
      }
    }
  }
}

TEST(SetProperties, NonAscendingAppendRejected) {
  const auto cx = encode_set({S_("bb")});
  const auto cy = encode_set({S_("a")});
  EXPECT_THROW(append_codes(cx, cy), Error);
}

TEST(SetProperties, NotSets) {
  for (const char* s : {"a", "b", "ab", "bab", "baab", "bbaaab", "baaabb"}) {
    EXPECT_FALSE(is_set(S_(s))) << s;
  }
  EXPECT_FALSE(is_member(S_("a"), S_("ab")));
  EXPECT_TRUE(is_member(S_("a"), S_("baaab")));
}
