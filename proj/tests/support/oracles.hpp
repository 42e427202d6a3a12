#pragma once

// Test-only reference computations, deliberately independent of the library
// code paths they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gcdpat/matrix.hpp"
#include "gcdpat/poly.hpp"

namespace testsupport {

using gcdpat::Integer;
using gcdpat::IntMatrix;
using gcdpat::IntPoly;

// Laplace expansion along the first row.
inline Integer det_by_minors(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Integer term = m(0, c) * det_by_minors(minor);
    if (c % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

// Solves M x = rhs over Q by Gauss-Jordan with rationals.
inline std::vector<mpq_class> rational_solve(const IntMatrix& m, const std::vector<Integer>& rhs) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n] = rhs[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
  return x;
}

// Elements u + v*sqrt(-3).
struct Eisenstein {
  Integer u, v;
  Eisenstein operator*(const Eisenstein& o) const { return {u * o.u - 3 * v * o.v, u * o.v + v * o.u}; }
  Eisenstein operator+(const Eisenstein& o) const { return {u + o.u, v + o.v}; }
};

inline Eisenstein eval_at_sqrt_minus3(const IntPoly& p, int sign) {
  Eisenstein acc{0, 0};
  const Eisenstein x{0, sign};
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + Eisenstein{p.coeffs()[k], 0};
  return acc;
}

// Distinct maps Z/m -> Z/m from integer polynomials of degree <= m
// (x(x-1)...(x-m+1) vanishes mod m, so higher degrees add nothing).
inline std::size_t brute_poly_function_count(unsigned m) {
  std::set<std::vector<unsigned>> maps;
  std::vector<unsigned> c(m + 1, 0);
  for (;;) {
    std::vector<unsigned> f(m);
    for (unsigned n = 0; n < m; ++n) {
      unsigned long acc = 0;
      for (std::size_t k = c.size(); k-- > 0;) acc = (acc * n + c[k]) % m;
      f[n] = static_cast<unsigned>(acc);
    }
    maps.insert(f);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == m) c[k++] = 0;
    if (k == c.size()) break;
  }
  return maps.size();
}

// Remainder of a modulo monic-leading b over F_p (p small, coefficients reduced).
inline std::vector<long> rem_small(std::vector<long> a, const std::vector<long>& b, long p) {
  auto trim = [](std::vector<long>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
  trim(a);
  long inv = 1;
  while ((b.back() * inv) % p != 1) ++inv;
  while (a.size() >= b.size()) {
    const long q = a.back() * inv % p;
    const std::size_t s = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = (((a[s + j] - q * b[j]) % p) + p) % p;
    trim(a);
  }
  return a;
}

// Highest-degree monic polynomial over F_p dividing both, by enumeration.
inline std::vector<long> brute_gcd_mod_p(const IntPoly& A, const IntPoly& B, long p) {
  auto reduce = [&](const IntPoly& P) {
    std::vector<long> v;
    for (const auto& c : P.coeffs()) v.push_back(gcdpat::mod_floor(c, Integer(p)).get_si());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  const auto a = reduce(A), b = reduce(B);
  const std::size_t top = std::min(a.size(), b.size()) - 1;
  for (std::size_t deg = top + 1; deg-- > 0;) {
    std::vector<long> cand(deg + 1, 0);
    cand[deg] = 1;
    for (;;) {
      if (rem_small(a, cand, p).empty() && rem_small(b, cand, p).empty()) return cand;
      std::size_t k = 0;
      while (k < deg && ++cand[k] == p) cand[k++] = 0;
      if (k == deg) break;
    }
  }
  return {1};
}

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline IntPoly random_poly(std::mt19937_64& rng, unsigned degree, long bound, bool monic) {
  std::vector<Integer> c(degree + 1);
  for (unsigned k = 0; k < degree; ++k) c[k] = draw(rng, -bound, bound);
  long lead = monic ? 1 : 0;
  while (lead == 0) lead = draw(rng, -bound, bound);
  c[degree] = lead;
  return IntPoly(std::move(c));
}

}  // namespace testsupport
