#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gcdpat/integer.hpp"
#include "gcdpat/patterns.hpp"
#include "gcdpat/poly.hpp"

// Naive reference implementations. Nothing here reuses the pattern
// extraction or modular shortcuts, so agreement with them is evidence.
namespace gcdpat::oracle {

struct SequenceWindow {
  Integer start;
  std::vector<Integer> values;  // G(start), G(start + 1), ...
};

// Direct gcd of exact values over [start, start + len).
SequenceWindow brute_g_window(const IntPoly& A, const IntPoly& B, const Integer& start, std::uint64_t len);

// Smallest divisor of delta_abs that is an exact period of the window.
// Requires a window of at least 2 * delta_abs values.
Integer brute_minimal_period(const SequenceWindow& window, const Integer& delta_abs);

// Distinct G(n) over n in [0, |resultant|), which covers a full period.
std::vector<Integer> brute_value_set(const IntPoly& A, const IntPoly& B,
                                     unsigned long scan_cap = kDefaultScanCap);

struct SearchResult {
  std::optional<std::pair<IntPoly, IntPoly>> pair;
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_skipped = 0;  // p-part scan above the cap
};

// First monic pair (1 <= deg <= degree_bound, other coefficients in
// [-coeff_bound, coeff_bound]) whose p-pattern matches target under eq.
// Order: degrees (deg A <= deg B) lexicographically, then coefficients from
// the constant term up, A before B; unordered pairs are visited once.
SearchResult search_realizing_pair(const Integer& p, const std::vector<Integer>& target, Equivalence eq,
                                   unsigned degree_bound, long coeff_bound,
                                   unsigned long scan_cap = kDefaultScanCap);

}  // namespace gcdpat::oracle
