#pragma once

// Outcome of a verification run: how many cases were checked and every
// failing law with the assignment that refutes it.

#include <algorithm>
#include <chrono>
#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strtree {

struct Failure {
  std::string law;
  std::map<std::string, std::string> witness;

  bool operator==(const Failure&) const = default;
  auto operator<=>(const Failure&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::size_t bound = 0;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::chrono::milliseconds elapsed{0};
  // Suite-specific figures (e.g. census counts), kept in insertion order.
  std::vector<std::pair<std::string, std::vector<long long>>> details;

  VerificationReport() = default;
  VerificationReport(std::string name, std::size_t n) : suite(std::move(name)), bound(n) {}

  bool passed() const noexcept { return failures.empty(); }

  void fail(std::string law, std::map<std::string, std::string> witness) {
    failures.push_back({std::move(law), std::move(witness)});
  }

  /// Counts one case, recording a failure when `ok` is false.
  void check(bool ok, std::string_view law, std::map<std::string, std::string> witness = {}) {
    ++cases;
    if (!ok) fail(std::string(law), std::move(witness));
  }

  /// As above, building the witness only on failure.
  template <std::invocable F>
  void check(bool ok, std::string_view law, F&& witness) {
    ++cases;
    if (!ok) fail(std::string(law), witness());
  }

  void sort_failures() { std::sort(failures.begin(), failures.end()); }

  void absorb(const VerificationReport& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    for (const auto& d : other.details) details.push_back(d);
  }
};

/// Runs `body` once and stores its wall time in the report.
template <class F>
void timed(VerificationReport& r, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
}

}  // namespace strtree
