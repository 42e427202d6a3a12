#pragma once

#include <cstdint>
#include <vector>

#include "gcdpat/patterns.hpp"
#include "gcdpat/poly.hpp"

namespace gcdpat {

struct VerifyOptions {
  unsigned samples = 20;        // random tuples for the product constraint
  std::uint64_t seed = 1;
  long window = 50;             // divisibility checks over n in [-window, window]
  unsigned long scan_cap = kDefaultScanCap;
};

// Runs every structural check against one pair: divisibility of G(n) by the
// resultant and by delta, the two delta routes, the product formula, period
// and value set against the brute-force oracle, the gcd-degree bound modulo
// p, the valuation-one shape, and sampled product constraints. Checks whose
// hypotheses fail (non-monic input, scans above the cap) are Skipped.
std::vector<Check> verify_suite(const IntPoly& A, const IntPoly& B, const VerifyOptions& options = {});

}  // namespace gcdpat
