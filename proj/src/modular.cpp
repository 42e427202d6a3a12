#include "gcdpat/modular.hpp"

#include <algorithm>

#include "gcdpat/error.hpp"
#include "gcdpat/sylvester.hpp"

namespace gcdpat {

namespace {

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
}

void require_monic(const IntPoly& P, const char* name) {
  if (!P.is_monic()) throw Error(ErrorCode::NotMonic, std::string(name) + " must be monic");
}

// Polynomials over F_p as coefficient vectors, lowest degree first, no
// trailing zeros.
using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly to_mod(const IntPoly& P, const Integer& p) {
  ModPoly out(P.coeffs().begin(), P.coeffs().end());
  for (auto& c : out) c = mod_floor(c, p);
  trim(out);
  return out;
}

ModPoly rem_mod(ModPoly a, const ModPoly& b, const Integer& p) {
  Integer inv;
  inverse_mod(b.back(), p, inv);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Integer q = mod_floor(a.back() * inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod_floor(a[shift + j] - q * b[j], p);
    trim(a);
  }
  return a;
}

}  // namespace

PrimePower PrimePower::make(const Integer& p, unsigned k) {
  require_prime(p);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "prime power exponent must be >= 1");
  return PrimePower{p, k, pow_of(p, k)};
}

std::vector<Integer> roots_mod_p(const IntPoly& P, const Integer& p, unsigned long scan_cap) {
  require_prime(p);
  if (p > scan_cap) throw Error(ErrorCode::ScanCapExceeded, "prime " + to_string(p) + " above the root scan cap");
  if (P.divisible_by(p)) throw Error(ErrorCode::ZeroModP, "polynomial vanishes identically modulo " + to_string(p));
  const std::uint64_t q = to_u64(p);
  std::vector<std::uint64_t> c;
  for (const auto& coef : P.coeffs()) c.push_back(to_u64(mod_floor(coef, p)));
  std::vector<Integer> roots;
  for (std::uint64_t rho = 0; rho < q; ++rho) {
    unsigned __int128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * rho + *it) % q;
    if (acc == 0) roots.push_back(from_u64(rho));
  }
  return roots;
}

bool is_split_simple_mod_p(const IntPoly& P, const Integer& p) {
  require_monic(P, "polynomial");
  return roots_mod_p(P, p).size() == *P.degree();
}

Integer hensel_lift_root(const IntPoly& P, const Integer& rho, const Integer& p, unsigned omega) {
  require_prime(p);
  if (omega < 1) throw Error(ErrorCode::InvalidArgument, "omega must be >= 1");
  const Integer r0 = mod_floor(rho, p);
  if (!divides(p, P.eval(r0))) throw Error(ErrorCode::NotARoot, to_string(rho) + " is not a root modulo " + to_string(p));
  // omega = 1 needs no lift step, so the root need not be simple.
  if (omega == 1) return r0;
  Integer inv;
  if (!inverse_mod(P.derivative().eval(r0), p, inv)) {
    throw Error(ErrorCode::NotSimpleRoot, to_string(rho) + " is a multiple root modulo " + to_string(p));
  }
  Integer r = r0;
  Integer pk = p;  // r is a root modulo pk
  for (unsigned k = 1; k < omega; ++k) {
    // r + h p^k is a root mod p^{k+1} for h = -(P(r)/p^k) / P'(rho) mod p.
    const Integer h = mod_floor(-div_exact(P.eval(r), pk) * inv, p);
    r += h * pk;
    pk *= p;
  }
  r = mod_floor(r, pk);
  if (!divides(pk, P.eval(r)) || mod_floor(r - r0, p) != 0) {
    throw Error(ErrorCode::Internal, "Hensel lift postcondition failed");
  }
  return r;
}

SplitFactorization lift_factorization(const IntPoly& P, const Integer& p, unsigned omega) {
  if (!is_split_simple_mod_p(P, p)) {
    throw Error(ErrorCode::NotSplitSimple, format_poly(P) + " is not split with simple roots modulo " + to_string(p));
  }
  SplitFactorization f{P, PrimePower::make(p, omega), {}};
  for (const auto& rho : roots_mod_p(P, p)) f.roots.push_back(hensel_lift_root(P, rho, p, omega));
  IntPoly product = IntPoly::constant(1);
  for (const auto& r : f.roots) product = product * IntPoly::linear_root(r);
  if (!(product - P).divisible_by(f.pp.modulus)) {
    throw Error(ErrorCode::Internal, "lifted factorization does not reproduce the polynomial");
  }
  return f;
}

IntPoly poly_gcd_mod_p(const IntPoly& A, const IntPoly& B, const Integer& p) {
  require_prime(p);
  require_monic(A, "A");
  require_monic(B, "B");
  ModPoly a = to_mod(A, p);
  ModPoly b = to_mod(B, p);
  while (!b.empty()) {
    ModPoly r = rem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  Integer inv;
  inverse_mod(a.back(), p, inv);
  for (auto& c : a) c = mod_floor(c * inv, p);
  return IntPoly(std::move(a));
}

ResModPReport check_resmodp(const IntPoly& A, const IntPoly& B, const Integer& p) {
  const Integer delta = resultant(A, B);
  if (delta == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
  ResModPReport r;
  r.deg_D = *poly_gcd_mod_p(A, B, p).degree();
  r.omega_p = valuation(delta, p);
  r.holds = r.deg_D <= r.omega_p;
  return r;
}

}  // namespace gcdpat
