#pragma once

// The standard string model: non-empty strings over {a, b} with concatenation,
// the proper prefix/suffix relations, the part-of relation, successor, the
// R-ordering and b-tally arithmetic.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "strtree/error.hpp"

namespace strtree {

/// A non-empty finite string over the digits a and b.
class BinString {
 public:
  /// Throws ParseError on empty input or any character other than 'a'/'b'.
  explicit BinString(std::string digits) : digits_(std::move(digits)) { validate(digits_); }

  static BinString parse(std::string_view text) { return BinString(std::string(text)); }

  static BinString a() { return BinString(Trusted{}, "a"); }
  static BinString b() { return BinString(Trusted{}, "b"); }

  /// `digit` repeated n times; n must be positive.
  static BinString repeat(char digit, std::size_t n) {
    if (n == 0) throw ParseError("empty string is not in the model");
    return BinString(std::string(n, digit));
  }

  const std::string& str() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  char operator[](std::size_t i) const noexcept { return digits_[i]; }
  char front() const noexcept { return digits_.front(); }
  char back() const noexcept { return digits_.back(); }

  /// Substring [pos, pos+len); the result must be non-empty.
  BinString substr(std::size_t pos, std::size_t len = std::string::npos) const {
    auto piece = digits_.substr(pos, len);
    if (piece.empty()) throw ParseError("empty substring");
    return BinString(Trusted{}, std::move(piece));
  }

  bool operator==(const BinString&) const = default;

  /// Shortlex: by length, then lexicographically with a < b.
  std::strong_ordering operator<=>(const BinString& other) const noexcept {
    if (auto c = digits_.size() <=> other.digits_.size(); c != 0) return c;
    return digits_.compare(other.digits_) <=> 0;
  }

  friend BinString concat(const BinString& x, const BinString& y);
  friend BinString successor(const BinString& x);

 private:
  struct Trusted {};
  BinString(Trusted, std::string digits) : digits_(std::move(digits)) {}

  static void validate(const std::string& digits) {
    if (digits.empty()) throw ParseError("empty string is not in the model");
    for (char c : digits) {
      if (c != 'a' && c != 'b') {
        throw ParseError(std::string("invalid digit '") + c + "' (expected a or b)");
      }
    }
  }

  std::string digits_;
};

inline std::ostream& operator<<(std::ostream& os, const BinString& x) { return os << x.str(); }

inline BinString concat(const BinString& x, const BinString& y) {
  std::string out;
  out.reserve(x.size() + y.size());
  out.append(x.digits_).append(y.digits_);
  return BinString(BinString::Trusted{}, std::move(out));
}

template <class... Rest>
BinString concat(const BinString& x, const BinString& y, const Rest&... rest) {
  return concat(concat(x, y), rest...);
}

/// xBy: x is a proper prefix of y.
inline bool begins(const BinString& x, const BinString& y) {
  return x.size() < y.size() && y.str().compare(0, x.size(), x.str()) == 0;
}

/// xEy: x is a proper suffix of y.
inline bool ends(const BinString& x, const BinString& y) {
  return x.size() < y.size() && y.str().compare(y.size() - x.size(), x.size(), x.str()) == 0;
}

/// x ⊆p y: x occurs contiguously in y, equality included.
inline bool is_substring(const BinString& x, const BinString& y) {
  return y.str().find(x.str()) != std::string::npos;
}

/// b on a, otherwise x with b appended.
inline BinString successor(const BinString& x) {
  if (x.str() == "a") return BinString::b();
  std::string out = x.digits_;
  out.push_back('b');
  return BinString(BinString::Trusted{}, std::move(out));
}

/// xRy ≡ (x = a ∧ y ≠ a) ∨ xBy.
inline bool r_precedes(const BinString& x, const BinString& y) {
  return (x.str() == "a" && y.str() != "a") || begins(x, y);
}

/// I₀(x) ≡ ∀y (yRx ∨ y = x → ¬yRy). The strings y with yRx ∨ y = x are a,
/// the proper prefixes of x and x itself, so the quantifier is finite.
inline bool is_tractable(const BinString& x) {
  const auto a = BinString::a();
  if (r_precedes(x, x)) return false;
  if (r_precedes(a, x) && r_precedes(a, a)) return false;
  for (std::size_t n = 1; n < x.size(); ++n) {
    auto prefix = x.substr(0, n);
    if (r_precedes(prefix, prefix)) return false;
  }
  return true;
}

/// x < y ≡ I₀(x) ∧ I₀(y) ∧ xRy.
inline bool less(const BinString& x, const BinString& y) {
  return is_tractable(x) && is_tractable(y) && r_precedes(x, y);
}

inline bool less_eq(const BinString& x, const BinString& y) { return x == y || less(x, y); }

inline bool is_tally_b(const BinString& x) {
  return std::all_of(x.str().begin(), x.str().end(), [](char c) { return c == 'b'; });
}

inline bool is_tally_a(const BinString& x) {
  return std::all_of(x.str().begin(), x.str().end(), [](char c) { return c == 'a'; });
}

/// Length of the longest run of b's in x; 0 when x has no b.
inline std::size_t max_b_run(std::string_view x) {
  std::size_t best = 0, run = 0;
  for (char c : x) {
    run = (c == 'b') ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

/// A b-tally b^(n+1), denoting the natural number n.
class BTally {
 public:
  /// Throws NotATally unless every digit of x is b.
  static BTally from(const BinString& x) {
    if (!is_tally_b(x)) throw NotATally("not a b-tally: " + x.str());
    return BTally(x);
  }

  static BTally of(std::uint64_t n) { return BTally(BinString::repeat('b', n + 1)); }

  const BinString& value() const noexcept { return value_; }
  operator const BinString&() const noexcept { return value_; }  // NOLINT

  std::uint64_t denotes() const noexcept { return value_.size() - 1; }

  bool operator==(const BTally&) const = default;
  /// Tally order u ≤ v is length comparison.
  auto operator<=>(const BTally& other) const noexcept { return value_.size() <=> other.value_.size(); }

 private:
  explicit BTally(BinString v) : value_(std::move(v)) {}
  BinString value_;
};

inline BTally nat_to_tally(std::uint64_t n) { return BTally::of(n); }

/// Throws NotATally on non-tallies.
inline std::uint64_t tally_to_nat(const BinString& t) { return BTally::from(t).denotes(); }

/// Addition on b-tallies: b^m + b^n = b^(m+n-1). Any non-tally argument
/// yields the default value b.
inline BinString addtally(const BinString& x, const BinString& y) {
  if (!is_tally_b(x) || !is_tally_b(y)) return BinString::b();
  return BinString::repeat('b', x.size() + y.size() - 1);
}

/// The Addtally(x, y, z) relation evaluated clause by clause from its
/// definition, independently of `addtally`.
inline bool addtally_relation(const BinString& x, const BinString& y, const BinString& z) {
  const bool tx = is_tally_b(x), ty = is_tally_b(y);
  if (tx && ty) {
    const auto b = BinString::b();
    if (x == b && z == y) return true;
    if (y == b && z == x) return true;
    // ∃x₁,y₁ (Tally_b(x₁) ∧ x = Sx₁ ∧ Tally_b(y₁) ∧ y = Sy₁ ∧ z = x*y₁); tallies
    // of length ≥ 2 have a unique predecessor obtained by dropping one digit.
    if (x.size() >= 2 && y.size() >= 2) {
      const auto y1 = y.substr(0, y.size() - 1);
      if (z == concat(x, y1)) return true;
    }
    return false;
  }
  return z == BinString::b();
}

/// Every string of length 1..max_len in shortlex order.
inline std::vector<BinString> all_strings(std::size_t max_len) {
  std::vector<BinString> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string s(len, 'a');
      for (std::size_t i = 0; i < len; ++i) {
        if (bits & (std::uint64_t{1} << (len - 1 - i))) s[i] = 'b';
      }
      out.emplace_back(std::move(s));
    }
  }
  return out;
}

/// b, bb, ..., b^max_len.
inline std::vector<BinString> all_b_tallies(std::size_t max_len) {
  std::vector<BinString> out;
  for (std::size_t n = 1; n <= max_len; ++n) out.push_back(BinString::repeat('b', n));
  return out;
}

}  // namespace strtree

template <>
struct std::hash<strtree::BinString> {
  std::size_t operator()(const strtree::BinString& x) const noexcept {
    return std::hash<std::string>{}(x.str());
  }
};
