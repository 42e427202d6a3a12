#include <doctest.h>

#include <algorithm>
#include <random>

#include "gcdpat/error.hpp"
#include "gcdpat/modular.hpp"
#include "gcdpat/sylvester.hpp"
#include "support/oracles.hpp"

using namespace gcdpat;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::vector<Integer> sorted(std::vector<Integer> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("roots_mod_p") {
  CHECK(roots_mod_p(parse_poly("x^2+3"), 2) == std::vector<Integer>{1});
  CHECK(roots_mod_p(parse_poly("x^2-9x+16"), 2) == std::vector<Integer>{0, 1});
  CHECK(roots_mod_p(parse_poly("x^2+3x+9"), 2).empty());
  CHECK(code_of([] { roots_mod_p(parse_poly("3x^2+6"), 3); }) == ErrorCode::ZeroModP);
  CHECK(code_of([] { roots_mod_p(parse_poly("x"), 4); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { roots_mod_p(parse_poly("x"), 1000003); }) == ErrorCode::ScanCapExceeded);
}

TEST_CASE("is_split_simple_mod_p") {
  CHECK(is_split_simple_mod_p(parse_poly("x^2-7x+12"), 2));
  CHECK_FALSE(is_split_simple_mod_p(parse_poly("x^2+27"), 3));
  CHECK_FALSE(is_split_simple_mod_p(parse_poly("x^2+3"), 2));
  CHECK(code_of([] { is_split_simple_mod_p(parse_poly("2x^2+1"), 3); }) == ErrorCode::NotMonic);
}

TEST_CASE("hensel_lift_root") {
  CHECK(hensel_lift_root(parse_poly("x^2-9x+16"), 0, 2, 2) == 0);
  CHECK(hensel_lift_root(parse_poly("x^2-9x+16"), 1, 2, 2) == 1);
  CHECK(hensel_lift_root(parse_poly("x^2+3"), 1, 2, 1) == 1);
  CHECK(hensel_lift_root(parse_poly("x^2+3x+9"), 1, 13, 1) == 1);
  // x^2 + 1 has the 5-adic root ...2 mod 5; 7 is a root mod 25 (49 + 1 = 50).
  CHECK(hensel_lift_root(parse_poly("x^2+1"), 2, 5, 2) == 7);
  CHECK(code_of([] { hensel_lift_root(parse_poly("x^2+3"), 1, 2, 3); }) == ErrorCode::NotSimpleRoot);
  CHECK(code_of([] { hensel_lift_root(parse_poly("x^2+3"), 0, 2, 3); }) == ErrorCode::NotARoot);
}

TEST_CASE("lift_factorization") {
  const SplitFactorization f = lift_factorization(parse_poly("x^2-7x+12"), 2, 3);
  CHECK(sorted(f.roots) == std::vector<Integer>{3, 4});
  CHECK(f.pp.modulus == 8);
  CHECK(sorted(lift_factorization(parse_poly("x^2-9x+16"), 2, 2).roots) == std::vector<Integer>{0, 1});
  CHECK(sorted(lift_factorization(parse_poly("x^2-32x+135"), 3, 2).roots) == std::vector<Integer>{0, 5});
  CHECK(code_of([] { lift_factorization(parse_poly("x^2+27"), 3, 2); }) == ErrorCode::NotSplitSimple);
}

TEST_CASE("property: Hensel lifts are roots, unique, and factor the polynomial") {
  std::mt19937_64 rng(23);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int trial = 0; trial < 100; ++trial) {
    const long p = primes[testsupport::draw(rng, 0, 14)];
    const unsigned deg = testsupport::draw(rng, 1, std::min<long>(4, p));
    // Distinct residues mod p, perturbed by p * noise to keep the split shape.
    std::vector<long> base;
    while (base.size() < deg) {
      const long r = testsupport::draw(rng, 0, p - 1);
      if (std::find(base.begin(), base.end(), r) == base.end()) base.push_back(r);
    }
    IntPoly P = IntPoly::constant(1);
    for (long r : base) P = P * IntPoly::linear_root(r + p * testsupport::draw(rng, -3, 3));
    if (deg > 1) P = P + Integer(p) * testsupport::random_poly(rng, deg - 1, 5, false);
    const unsigned omega = testsupport::draw(rng, 1, 7);
    const Integer mod = pow_of(Integer(p), omega);
    for (const auto& rho : roots_mod_p(P, p)) {
      const Integer r = hensel_lift_root(P, rho, p, omega);
      CHECK(divides(mod, P.eval(r)));
      CHECK(mod_floor(r - rho, p) == 0);
      // Lifting to omega+1 then reducing gives the same residue.
      CHECK(mod_floor(hensel_lift_root(P, rho, p, omega + 1), mod) == r);
    }
    const SplitFactorization f = lift_factorization(P, p, omega);
    IntPoly prod = IntPoly::constant(1);
    for (const auto& r : f.roots) prod = prod * IntPoly::linear_root(r);
    CHECK((prod - P).divisible_by(mod));
  }
}

TEST_CASE("poly_gcd_mod_p") {
  CHECK(poly_gcd_mod_p(parse_poly("x^2-9x+16"), parse_poly("x^2-7x+12"), 2) == parse_poly("x^2+x"));
  CHECK(poly_gcd_mod_p(parse_poly("x"), parse_poly("x-1"), 5) == IntPoly{1});
  // A = x^2 + x, B = x^2 modulo 3: the only common factor is x.
  const IntPoly A = parse_poly("x^2-32x+135"), B = parse_poly("x^2+3x+9");
  const auto brute = testsupport::brute_gcd_mod_p(A, B, 3);
  CHECK(brute == std::vector<long>{0, 1});
  CHECK(poly_gcd_mod_p(A, B, 3) == parse_poly("x"));
  CHECK(code_of([] { poly_gcd_mod_p(parse_poly("2x+1"), parse_poly("x"), 3); }) == ErrorCode::NotMonic);
}

TEST_CASE("property: poly_gcd_mod_p agrees with enumeration") {
  std::mt19937_64 rng(29);
  const long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 150; ++trial) {
    const long p = primes[testsupport::draw(rng, 0, 3)];
    const IntPoly A = testsupport::random_poly(rng, testsupport::draw(rng, 1, 4), 15, true);
    const IntPoly B = testsupport::random_poly(rng, testsupport::draw(rng, 1, 4), 15, true);
    const IntPoly D = poly_gcd_mod_p(A, B, p);
    std::vector<long> got;
    for (const auto& c : D.coeffs()) got.push_back(c.get_si());
    CHECK(got == testsupport::brute_gcd_mod_p(A, B, p));
  }
}

TEST_CASE("check_resmodp") {
  const ResModPReport r1 = check_resmodp(parse_poly("x^2-9x+16"), parse_poly("x^2-7x+12"), 2);
  CHECK(r1.deg_D == 2);
  CHECK(r1.omega_p == 3);
  CHECK(r1.holds);
  const ResModPReport r2 = check_resmodp(parse_poly("x"), parse_poly("x-1"), 3);
  CHECK(r2.deg_D == 0);
  CHECK(r2.omega_p == 0);
  CHECK(r2.holds);
  const ResModPReport r3 = check_resmodp(parse_poly("x^2-32x+135"), parse_poly("x^2+3x+9"), 7);
  CHECK(r3.deg_D == 2);
  CHECK(r3.omega_p == 3);
  CHECK(r3.holds);
  CHECK(code_of([] { check_resmodp(parse_poly("x^2-1"), parse_poly("x-1"), 2); }) == ErrorCode::NotCoprime);
}

TEST_CASE("property: deg gcd mod p never exceeds nu_p(resultant)") {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 120) {
    const IntPoly A = testsupport::random_poly(rng, testsupport::draw(rng, 1, 4), 15, true);
    const IntPoly B = testsupport::random_poly(rng, testsupport::draw(rng, 1, 4), 15, true);
    if (resultant(A, B) == 0) continue;
    ++tested;
    for (long p = 2; p <= 50; ++p) {
      if (!is_prime(p)) continue;
      CHECK(check_resmodp(A, B, p).holds);
    }
  }
}
