#pragma once

#include <cstddef>

#include "strtree/bin_string.hpp"

namespace strtree {

inline std::size_t count_a(const BinString& x) {
  std::size_t n = 0;
  for (char c : x.str()) n += (c == 'a');
  return n;
}

inline std::size_t count_b(const BinString& x) { return x.size() - count_a(x); }

/// α(x): the b-tally denoting the number of a-digits in x.
inline BTally alpha(const BinString& x) { return nat_to_tally(count_a(x)); }

/// β(x): the b-tally denoting the number of b-digits in x.
inline BTally beta(const BinString& x) { return nat_to_tally(count_b(x)); }

/// One more a than b overall, and no proper prefix with more a's than b's.
inline bool is_almost_even(std::string_view x) {
  if (x.empty()) return false;
  long balance = 0;  // #b - #a over the prefix read so far
  for (std::size_t i = 0; i < x.size(); ++i) {
    balance += (x[i] == 'b') ? 1 : -1;
    if (i + 1 < x.size() && balance < 0) return false;
  }
  return balance == -1;
}

inline bool is_almost_even(const BinString& x) { return is_almost_even(std::string_view(x.str())); }

}  // namespace strtree
