#include "gcdpat/sylvester.hpp"

#include <vector>

#include "gcdpat/error.hpp"

namespace gcdpat {

namespace {

void require_nonconstant(const IntPoly& A, const IntPoly& B) {
  if (A.is_constant() || B.is_constant()) {
    throw Error(ErrorCode::DegreeTooSmall, "resultant needs deg A >= 1 and deg B >= 1");
  }
}

void check_identity(const IntPoly& A, const IntPoly& B, const BezoutCertificate& cert) {
  if (A * cert.U + B * cert.V != IntPoly::constant(cert.value)) {
    throw Error(ErrorCode::Internal, "Bezout identity check failed");
  }
}

}  // namespace

SylvesterMatrix sylvester_matrix(const IntPoly& A, const IntPoly& B) {
  require_nonconstant(A, B);
  const std::size_t d = *A.degree();
  const std::size_t e = *B.degree();
  SylvesterMatrix s{IntMatrix(d + e, d + e), d, e};
  for (std::size_t j = 0; j < e; ++j) {
    for (std::size_t k = 0; k <= d; ++k) s.entries(j + k, j) = A.coeff(d - k);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k <= e; ++k) s.entries(j + k, e + j) = B.coeff(e - k);
  }
  return s;
}

Integer resultant(const IntPoly& A, const IntPoly& B) {
  return bareiss_determinant(sylvester_matrix(A, B).entries);
}

BezoutCertificate bezout_certificate(const IntPoly& A, const IntPoly& B) {
  const SylvesterMatrix s = sylvester_matrix(A, B);
  const std::size_t n = s.d + s.e;
  std::vector<Integer> unit(n);
  unit[n - 1] = 1;
  ScaledSolution sol = bareiss_solve_scaled(s.entries, unit);
  if (sol.det == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero: A and B share a factor");

  // W1 = S* E lists U then V, each from the highest power down.
  std::vector<Integer> u(s.e), v(s.d);
  for (std::size_t j = 0; j < s.e; ++j) u[s.e - 1 - j] = sol.scaled[j];
  for (std::size_t j = 0; j < s.d; ++j) v[s.d - 1 - j] = sol.scaled[s.e + j];
  BezoutCertificate cert{IntPoly(std::move(u)), IntPoly(std::move(v)), sol.det};
  if (cert.value < 0) {
    cert.U = -cert.U;
    cert.V = -cert.V;
    cert.value = -cert.value;
  }
  check_identity(A, B, cert);
  return cert;
}

BezoutCertificate minimal_delta(const IntPoly& A, const IntPoly& B) {
  BezoutCertificate cert = bezout_certificate(A, B);
  const Integer g = gcd_of(cert.U.content(), cert.V.content());
  BezoutCertificate reduced{cert.U.divide_exact(g), cert.V.divide_exact(g), div_exact(cert.value, g)};
  check_identity(A, B, reduced);
  return reduced;
}

Integer delta_lattice_oracle(const IntPoly& A, const IntPoly& B) {
  require_nonconstant(A, B);
  const std::size_t d = *A.degree();
  const std::size_t e = *B.degree();
  const std::size_t n = d + e;
  // Column c holds the coefficient of x^{n-1-c}, so the constant term is last.
  IntMatrix rows(n, n);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t k = 0; k <= d; ++k) rows(i, n - 1 - (k + i)) = A.coeff(k);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k <= e; ++k) rows(e + j, n - 1 - (k + j)) = B.coeff(k);
  }
  const IntMatrix h = hermite_normal_form(std::move(rows));
  const Integer& pivot = h(n - 1, n - 1);
  if (pivot == 0) throw Error(ErrorCode::NotCoprime, "lattice is not full rank: A and B share a factor");
  return pivot;
}

bool delta_minimality_certified(const IntPoly& A, const IntPoly& B) {
  auto unit_lead = [](const IntPoly& p) { return !p.is_zero() && abs(p.leading()) == 1; };
  return unit_lead(A) || unit_lead(B);
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  if (!fits_u64(p)) throw Error(ErrorCode::InvalidArgument, "primality check limited to 64-bit values");
  const std::uint64_t n = to_u64(p);
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Factorization factorize_abs_delta(const Integer& delta_abs, unsigned long trial_bound) {
  if (delta_abs < 1) throw Error(ErrorCode::InvalidArgument, "factorization needs a positive integer");
  Factorization out;
  Integer rest = delta_abs;
  auto strip = [&](unsigned long f) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f);
      ++count;
    }
    if (count > 0) out[Integer(f)] = count;
  };
  strip(2);
  for (unsigned long f = 3; f <= trial_bound; f += 2) {
    if (rest == 1) break;
    if (Integer(f) * f > rest) break;
    strip(f);
  }
  if (rest == 1) return out;

  const Integer bound = Integer(trial_bound) + 1;
  const bool below_square = rest < bound * bound;
  const bool proven_prime = below_square || (fits_u64(rest) && mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0);
  if (!proven_prime) {
    throw Error(ErrorCode::FactorizationIncomplete,
                "cofactor " + to_string(rest) + " left after trial division up to " + std::to_string(trial_bound));
  }
  out[rest] += 1;
  return out;
}

ResultantReport resultant_report(const IntPoly& A, const IntPoly& B) {
  ResultantReport r;
  r.delta_signed = resultant(A, B);
  r.delta_abs = abs(r.delta_signed);
  if (r.delta_signed != 0) {
    r.factorization = factorize_abs_delta(r.delta_abs);
    r.certificate = bezout_certificate(A, B);
  }
  return r;
}

}  // namespace gcdpat
