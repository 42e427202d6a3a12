#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "gcdpat/integer.hpp"
#include "gcdpat/matrix.hpp"
#include "gcdpat/poly.hpp"

namespace gcdpat {

// (d+e) x (d+e) Sylvester matrix. Rows index powers x^{d+e-1} down to x^0;
// column j < e holds the coefficients of x^{e-1-j} A(x), column e+j < e+d
// those of x^{d-1-j} B(x).
struct SylvesterMatrix {
  IntMatrix entries;
  std::size_t d = 0;  // deg A
  std::size_t e = 0;  // deg B
};

// A*U + B*V == value with deg U < deg B and deg V < deg A.
struct BezoutCertificate {
  IntPoly U;
  IntPoly V;
  Integer value;
};

using Factorization = std::map<Integer, unsigned>;

struct ResultantReport {
  Integer delta_signed;
  Integer delta_abs;
  Factorization factorization;
  std::optional<BezoutCertificate> certificate;  // absent iff delta == 0
};

SylvesterMatrix sylvester_matrix(const IntPoly& A, const IntPoly& B);

Integer resultant(const IntPoly& A, const IntPoly& B);

// Integer cofactors from the adjugate column S* E, sign-normalized so the
// value is |resultant|.
BezoutCertificate bezout_certificate(const IntPoly& A, const IntPoly& B);

// Divides the resultant certificate by gcd(content U, content V).
BezoutCertificate minimal_delta(const IntPoly& A, const IntPoly& B);

// Independent route to delta: the constant-term pivot of the Hermite normal
// form of the lattice spanned by x^i A (i < e) and x^j B (j < d).
Integer delta_lattice_oracle(const IntPoly& A, const IntPoly& B);

// Over the degree-bounded cofactors the two routes always coincide. The value
// is the true minimal Bezout constant of the ideal (A, B) in Z[x] whenever A
// or B has leading coefficient +-1, since cofactors can then be reduced into
// the degree bounds.
bool delta_minimality_certified(const IntPoly& A, const IntPoly& B);

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

// Prime factorization by trial division up to trial_bound. A remaining
// cofactor is accepted when it is below trial_bound^2 or below 2^64 and passes
// a primality test that is deterministic in that range.
Factorization factorize_abs_delta(const Integer& delta_abs,
                                  unsigned long trial_bound = kDefaultTrialBound);

// Assembles delta, its factorization and (when delta != 0) the certificate.
ResultantReport resultant_report(const IntPoly& A, const IntPoly& B);

// Trial-division primality check for p up to 2^64.
bool is_prime(const Integer& p);

}  // namespace gcdpat
