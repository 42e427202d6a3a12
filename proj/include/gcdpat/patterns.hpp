#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcdpat/integer.hpp"
#include "gcdpat/modular.hpp"
#include "gcdpat/poly.hpp"
#include "gcdpat/sylvester.hpp"

namespace gcdpat {

inline constexpr unsigned long kDefaultScanCap = 1'000'000;

// Minimal-period list of p-parts of G(n), anchored at n = 0, of length p^mu.
struct Pattern {
  Integer p;
  unsigned mu = 0;
  std::vector<Integer> values;

  std::size_t length() const { return values.size(); }
  // Entry for any integer n, using the mathematical modulo.
  const Integer& at(const Integer& n) const;
  Integer max_entry() const;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  bool holds() const { return status != CheckStatus::Fail; }
};

struct ProfileOptions {
  // Upper bound on the number of n scanned by any single loop.
  unsigned long scan_cap = kDefaultScanCap;
};

struct GcdProfile {
  IntPoly A;
  IntPoly B;
  ResultantReport resultant_report;
  BezoutCertificate delta_certificate;  // A U + B V = delta
  Integer delta;
  Integer delta_lattice;
  bool delta_minimality_certified = false;
  std::map<Integer, Pattern> patterns;  // one per prime dividing the resultant
  Integer global_period;
  std::vector<Integer> value_set;  // ascending
  std::vector<Check> checks;
};

// gcd(|A(n)|, |B(n)|).
Integer gcd_value(const IntPoly& A, const IntPoly& B, const Integer& n);

// Largest power of p dividing N >= 1.
Integer p_part(const Integer& N, const Integer& p);

// Scans n in [0, p^omega) and shrinks to the minimal period. omega must be at
// least nu_p(G(n)) for every n; nu_p of the resultant or of delta both work.
Pattern extract_pattern(const IntPoly& A, const IntPoly& B, const Integer& p, unsigned omega,
                        unsigned long scan_cap = kDefaultScanCap);

GcdProfile build_profile(const IntPoly& A, const IntPoly& B, const ProfileOptions& options = {});

// Product of the pattern entries at n.
Integer reconstruct_g(const GcdProfile& profile, const Integer& n);

struct ConstraintReport {
  Integer lhs;  // q_1 ... q_l
  Integer rhs;  // |resultant| * prod_{i<j} |n_j - n_i|
  bool holds = false;
};

// q_1 ... q_l divides |resultant| * prod |n_j - n_i| when q_i | G(n_i).
ConstraintReport verify_constraint(const IntPoly& A, const IntPoly& B,
                                   const std::vector<std::pair<Integer, Integer>>& pairs);

struct GapReport {
  unsigned omega1 = 0;
  unsigned omega2 = 0;
  unsigned nu_resultant = 0;
  unsigned nu_difference = 0;
  bool holds = false;
};

// nu_p(n2 - n1) >= nu_p(G(n1)) + nu_p(G(n2)) - nu_p(resultant).
GapReport valuation_gap_check(const IntPoly& A, const IntPoly& B, const Integer& n1, const Integer& n2,
                              const Integer& p);

// Shape [p, 1, ..., 1]_p up to permutation; omega_p must be 1.
bool validate_valpresone(const Pattern& pattern, unsigned omega_p);

struct Deg1Pattern {
  Pattern pattern;
  unsigned omega = 0;
  // Residue carrying the largest entry, i.e. the rotation of the basic
  // pattern [n ^ p^omega]. Absent on fallback.
  std::optional<Integer> anchor;
  bool fell_back = false;
};

// Closed form for deg A = 1: entry n is gcd(n - anchor, p^omega) with
// anchor = -a0 / a1 mod p^omega. Falls back to extract_pattern (and sets
// fell_back) when gcd(a0, a1) != 1 or B is not monic.
Deg1Pattern deg1_pattern(const IntPoly& A, const IntPoly& B, const Integer& p);

// p-part of G(n) from lifted roots: gcd(n - r_i, r_i - s_j, p^omega) for the
// root classes containing n, 1 if there are none.
Integer simpleroots_gcd(const SplitFactorization& fA, const SplitFactorization& fB, const Integer& n);

struct DeltaValuationReport {
  unsigned mu = 0;            // largest k with a common root mod p^k
  unsigned nu_p_delta = 0;    // valuation of the minimal Bezout constant
  std::size_t pattern_length = 0;
  Integer pattern_max;
  bool holds = false;         // mu == nu_p_delta, length == max == p^mu
};

// Requires A, B monic, coprime and both split with simple roots mod p.
DeltaValuationReport delta_valuation_split(const IntPoly& A, const IntPoly& B, const Integer& p);

struct XpowReport {
  unsigned long a = 0;
  unsigned long b = 0;
  bool coprime = false;
  std::optional<IntPoly> common_factor;  // x^gcd(a,b) + 1 when not coprime
  std::vector<Integer> pattern;          // [1, 2] when coprime
  bool pattern_verified = false;
  std::optional<BezoutCertificate> two_certificate;  // A U + B V = 2
};

// x^a + 1 against x^b + 1.
XpowReport xpow_plus_one_analysis(unsigned long a, unsigned long b, unsigned long window = 64);

// Number of maps Z/m -> Z/m induced by integer polynomials:
// prod_{k=0}^{m} m / gcd(m, k!).
Integer count_poly_functions(unsigned long m);

// Distinct tuples [f(0) ^ m, ..., f(m-1) ^ m] over polynomial maps f mod m.
std::size_t count_gcd_tuples(unsigned long m);
inline std::size_t count_gcd_tuples_mod4() { return count_gcd_tuples(4); }

enum class Equivalence { Exact, Rotation, Permutation };

bool pattern_equivalent(const std::vector<Integer>& values, const std::vector<Integer>& target, Equivalence eq);

// Offset k with values[i] == target[(i + k) mod L] for all i, if any.
std::optional<std::size_t> rotation_offset(const std::vector<Integer>& values, const std::vector<Integer>& target);

}  // namespace gcdpat
