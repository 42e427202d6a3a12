#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gcdpat {

using Integer = mpz_class;

inline Integer abs_value(const Integer& a) { return abs(a); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow_of(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Representative in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees d | n.
inline Integer div_exact(const Integer& n, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// Inverse of a modulo m in [0, m); returns false when gcd(a, m) != 1.
inline bool inverse_mod(const Integer& a, const Integer& m, Integer& out) {
  return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

// nu_p(n) for n != 0. nu_p(0) is infinite; callers handle zero themselves.
inline unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer rest = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline bool fits_u64(const Integer& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

inline Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline Integer from_i64(std::int64_t v) {
  Integer out = from_u64(v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                                : static_cast<std::uint64_t>(v));
  if (v < 0) out = -out;
  return out;
}

}  // namespace gcdpat
