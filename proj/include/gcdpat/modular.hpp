#pragma once

#include <vector>

#include "gcdpat/integer.hpp"
#include "gcdpat/poly.hpp"

namespace gcdpat {

struct PrimePower {
  Integer p;
  unsigned k = 1;
  Integer modulus;  // p^k

  // Validates primality of p and k >= 1.
  static PrimePower make(const Integer& p, unsigned k);
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Roots r_1..r_d of poly modulo p^omega, pairwise distinct modulo p, with
// prod (x - r_i) == poly (mod p^omega).
struct SplitFactorization {
  IntPoly poly;
  PrimePower pp;
  std::vector<Integer> roots;
};

inline constexpr unsigned long kDefaultRootScanCap = 1'000'000;

// Exhaustive scan of [0, p). Throws ScanCapExceeded above scan_cap.
std::vector<Integer> roots_mod_p(const IntPoly& P, const Integer& p,
                                 unsigned long scan_cap = kDefaultRootScanCap);

// P monic; true iff P has deg P distinct roots modulo p.
bool is_split_simple_mod_p(const IntPoly& P, const Integer& p);

// Lifts a simple root rho mod p to the unique root mod p^omega congruent to
// rho, one power of p per step.
Integer hensel_lift_root(const IntPoly& P, const Integer& rho, const Integer& p, unsigned omega);

SplitFactorization lift_factorization(const IntPoly& P, const Integer& p, unsigned omega);

// Monic gcd over F_p, coefficients in [0, p). Inputs must be monic.
IntPoly poly_gcd_mod_p(const IntPoly& A, const IntPoly& B, const Integer& p);

struct ResModPReport {
  std::size_t deg_D = 0;
  unsigned omega_p = 0;
  bool holds = false;
};

// deg gcd(A mod p, B mod p) <= nu_p(resultant).
ResModPReport check_resmodp(const IntPoly& A, const IntPoly& B, const Integer& p);

}  // namespace gcdpat
