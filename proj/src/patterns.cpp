#include "gcdpat/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gcdpat/error.hpp"

namespace gcdpat {

namespace {

// gcd(A(n), B(n), modulus), using machine words when the modulus allows.
class GcdModEvaluator {
 public:
  GcdModEvaluator(const IntPoly& A, const IntPoly& B, const Integer& modulus) : modulus_(modulus) {
    small_ = modulus < (Integer(1) << 32);
    if (small_) {
      m_ = to_u64(modulus);
      for (const auto& c : A.coeffs()) a_.push_back(to_u64(mod_floor(c, modulus)));
      for (const auto& c : B.coeffs()) b_.push_back(to_u64(mod_floor(c, modulus)));
    } else {
      A_ = A.reduce_mod(modulus);
      B_ = B.reduce_mod(modulus);
    }
  }

  // n is taken modulo the modulus first.
  Integer at(const Integer& n) const {
    if (small_) return from_u64(at_small(to_u64(mod_floor(n, modulus_))));
    const Integer x = mod_floor(n, modulus_);
    return gcd_of(gcd_of(mod_floor(A_.eval(x), modulus_), mod_floor(B_.eval(x), modulus_)), modulus_);
  }

  bool small() const { return small_; }

  // Requires small() and n < modulus.
  std::uint64_t at_small(std::uint64_t n) const {
    const std::uint64_t va = horner(a_, n);
    const std::uint64_t vb = horner(b_, n);
    return std::gcd(std::gcd(va, vb), m_);
  }

 private:
  std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t n) const {
    std::uint64_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * n + *it) % m_;
    return acc;
  }

  Integer modulus_;
  bool small_ = false;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> a_, b_;
  IntPoly A_, B_;
};

unsigned long require_scan(const Integer& count, unsigned long cap, const std::string& what) {
  if (count > cap) {
    throw Error(ErrorCode::ScanCapExceeded, what + " needs " + to_string(count) + " evaluations, cap is " +
                                                std::to_string(cap));
  }
  return count.get_ui();
}

void require_monic_coprime(const IntPoly& A, const IntPoly& B, ErrorCode code) {
  if (!A.is_monic() || !B.is_monic()) throw Error(code, "A and B must be monic");
  if (resultant(A, B) == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
}


}  // namespace

const Integer& Pattern::at(const Integer& n) const {
  const Integer idx = mod_floor(n, Integer(static_cast<unsigned long>(values.size())));
  return values[idx.get_ui()];
}

Integer Pattern::max_entry() const { return *std::max_element(values.begin(), values.end()); }

Integer gcd_value(const IntPoly& A, const IntPoly& B, const Integer& n) {
  const Integer a = A.eval(n);
  const Integer b = B.eval(n);
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::BothZero, "A and B both vanish at " + to_string(n));
  }
  return gcd_of(a, b);
}

Integer p_part(const Integer& N, const Integer& p) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "p_part needs N >= 1");
  return pow_of(p, valuation(N, p));
}

Pattern extract_pattern(const IntPoly& A, const IntPoly& B, const Integer& p, unsigned omega,
                        unsigned long scan_cap) {
  const Integer modulus = pow_of(p, omega);
  const unsigned long count = require_scan(modulus, scan_cap, "pattern for p=" + to_string(p));
  const GcdModEvaluator eval(A, B, modulus);
  std::vector<Integer> values(count);
  for (unsigned long n = 0; n < count; ++n) {
    values[n] = eval.small() ? from_u64(eval.at_small(n)) : eval.at(Integer(n));
  }
  unsigned long period = 1;
  for (unsigned m = 0; m <= omega; ++m, period *= p.get_ui()) {
    bool repeats = true;
    for (unsigned long i = period; i < count && repeats; ++i) repeats = values[i] == values[i % period];
    if (repeats) {
      values.resize(period);
      return Pattern{p, m, std::move(values)};
    }
  }
  throw Error(ErrorCode::Internal, "no period found");
}

GcdProfile build_profile(const IntPoly& A, const IntPoly& B, const ProfileOptions& options) {
  GcdProfile prof;
  prof.A = A;
  prof.B = B;
  prof.resultant_report = resultant_report(A, B);
  const Integer& delta_abs = prof.resultant_report.delta_abs;
  if (delta_abs == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero: A and B share a factor");

  prof.delta_certificate = minimal_delta(A, B);
  prof.delta = prof.delta_certificate.value;
  prof.delta_lattice = delta_lattice_oracle(A, B);
  prof.delta_minimality_certified = delta_minimality_certified(A, B);
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    prof.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  add("delta_routes_agree", prof.delta == prof.delta_lattice,
      "content route " + to_string(prof.delta) + ", lattice route " + to_string(prof.delta_lattice));
  add("delta_divides_resultant", divides(prof.delta, delta_abs));

  // G(n) divides delta, so scanning p^{nu_p(delta)} residues suffices.
  prof.global_period = 1;
  std::vector<Integer> products{Integer(1)};
  for (const auto& [p, omega] : prof.resultant_report.factorization) {
    (void)omega;
    Pattern pat = extract_pattern(A, B, p, valuation(prof.delta, p), options.scan_cap);
    prof.global_period *= static_cast<unsigned long>(pat.length());
    const std::set<Integer> entries(pat.values.begin(), pat.values.end());
    std::vector<Integer> next;
    for (const auto& x : products) {
      for (const auto& y : entries) next.push_back(x * y);
    }
    products = std::move(next);
    prof.patterns.emplace(p, std::move(pat));
  }
  std::sort(products.begin(), products.end());
  prof.value_set = std::move(products);
  add("period_divides_resultant", divides(prof.global_period, delta_abs));

  // One full period: product formula and realized value set.
  const unsigned long period = require_scan(prof.global_period, options.scan_cap, "global period scan");
  const GcdModEvaluator direct(A, B, prof.delta);
  std::vector<std::pair<const Pattern*, unsigned long>> parts;
  for (const auto& [p, pat] : prof.patterns) parts.emplace_back(&pat, static_cast<unsigned long>(pat.length()));
  const std::uint64_t delta_small = direct.small() ? to_u64(prof.delta) : 0;
  bool product_ok = true;
  std::set<Integer> seen;
  for (unsigned long n = 0; n < period; ++n) {
    const Integer g = direct.small() ? from_u64(direct.at_small(n % delta_small)) : direct.at(Integer(n));
    seen.insert(g);
    Integer rebuilt = 1;
    for (const auto& [pat, len] : parts) rebuilt *= pat->values[n % len];
    if (g != rebuilt) product_ok = false;
  }
  add("pattern_product", product_ok, "n in [0, " + to_string(prof.global_period) + ")");
  add("value_set_scan", std::vector<Integer>(seen.begin(), seen.end()) == prof.value_set);
  bool divides_all = std::all_of(prof.value_set.begin(), prof.value_set.end(),
                                 [&](const Integer& v) { return divides(v, prof.delta); });
  add("values_divide_delta", divides_all);
  return prof;
}

Integer reconstruct_g(const GcdProfile& profile, const Integer& n) {
  Integer g = 1;
  for (const auto& [p, pat] : profile.patterns) g *= pat.at(n);
  return g;
}

ConstraintReport verify_constraint(const IntPoly& A, const IntPoly& B,
                                   const std::vector<std::pair<Integer, Integer>>& pairs) {
  if (!A.is_monic() || !B.is_monic()) throw Error(ErrorCode::PrereqViolated, "A and B must be monic");
  const Integer delta = resultant(A, B);
  if (delta == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
  if (pairs.empty() || pairs.size() > *A.degree() + *B.degree()) {
    throw Error(ErrorCode::PrereqViolated, "need 1 <= l <= deg A + deg B");
  }
  ConstraintReport r{Integer(1), abs(delta), false};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [n, q] = pairs[i];
    if (q < 1 || !divides(q, gcd_value(A, B, n))) {
      throw Error(ErrorCode::PrereqViolated, to_string(q) + " does not divide G(" + to_string(n) + ")");
    }
    r.lhs *= q;
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Integer diff = abs(pairs[j].first - n);
      if (diff == 0) throw Error(ErrorCode::PrereqViolated, "the n_i must be pairwise distinct");
      r.rhs *= diff;
    }
  }
  r.holds = divides(r.lhs, r.rhs);
  return r;
}

GapReport valuation_gap_check(const IntPoly& A, const IntPoly& B, const Integer& n1, const Integer& n2,
                              const Integer& p) {
  if (!A.is_monic() || !B.is_monic()) throw Error(ErrorCode::PrereqViolated, "A and B must be monic");
  if (n1 == n2) throw Error(ErrorCode::PrereqViolated, "n1 and n2 must differ");
  const Integer delta = resultant(A, B);
  if (delta == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
  GapReport r;
  r.omega1 = valuation(gcd_value(A, B, n1), p);
  r.omega2 = valuation(gcd_value(A, B, n2), p);
  r.nu_resultant = valuation(delta, p);
  r.nu_difference = valuation(n2 - n1, p);
  r.holds = static_cast<long>(r.nu_difference) >=
            static_cast<long>(r.omega1) + static_cast<long>(r.omega2) - static_cast<long>(r.nu_resultant);
  return r;
}

bool validate_valpresone(const Pattern& pattern, unsigned omega_p) {
  if (omega_p != 1) throw Error(ErrorCode::WrongValuation, "shape check applies only when nu_p = 1");
  if (pattern.length() != pattern.p) return false;
  const auto hits = std::count(pattern.values.begin(), pattern.values.end(), pattern.p);
  const auto ones = std::count(pattern.values.begin(), pattern.values.end(), Integer(1));
  return hits == 1 && static_cast<std::size_t>(ones) == pattern.length() - 1;
}

Deg1Pattern deg1_pattern(const IntPoly& A, const IntPoly& B, const Integer& p) {
  if (A.degree() != std::optional<std::size_t>(1)) {
    throw Error(ErrorCode::InvalidArgument, "deg1_pattern needs deg A = 1");
  }
  const Integer delta = resultant(A, B);
  if (delta == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
  Deg1Pattern out;
  out.omega = valuation(delta, p);
  const Integer& a0 = A.coeff(0);
  const Integer& a1 = A.leading();
  if (gcd_of(a0, a1) != 1 || !B.is_monic()) {
    out.pattern = extract_pattern(A, B, p, out.omega);
    out.fell_back = true;
    return out;
  }
  const Integer modulus = pow_of(p, out.omega);
  const unsigned long count = require_scan(modulus, kDefaultScanCap, "deg1 pattern");
  Integer inv;
  if (!inverse_mod(a1, modulus, inv) && modulus != 1) {
    throw Error(ErrorCode::Internal, "leading coefficient not invertible modulo p^omega");
  }
  const Integer anchor = mod_floor(-a0 * inv, modulus);
  out.anchor = anchor;
  out.pattern.p = p;
  out.pattern.mu = out.omega;
  out.pattern.values.resize(count);
  for (unsigned long n = 0; n < count; ++n) out.pattern.values[n] = gcd_of(Integer(n) - anchor, modulus);
  return out;
}

Integer simpleroots_gcd(const SplitFactorization& fA, const SplitFactorization& fB, const Integer& n) {
  if (!(fA.pp == fB.pp)) throw Error(ErrorCode::ModulusMismatch, "factorizations use different moduli");
  const Integer& p = fA.pp.p;
  auto find_class = [&](const SplitFactorization& f) -> const Integer* {
    for (const auto& r : f.roots) {
      if (divides(p, n - r)) return &r;
    }
    return nullptr;
  };
  const Integer* r = find_class(fA);
  const Integer* s = find_class(fB);
  if (r == nullptr || s == nullptr) return 1;
  return gcd_of(gcd_of(n - *r, *r - *s), fA.pp.modulus);
}

DeltaValuationReport delta_valuation_split(const IntPoly& A, const IntPoly& B, const Integer& p) {
  require_monic_coprime(A, B, ErrorCode::NotMonic);
  if (!is_split_simple_mod_p(A, p) || !is_split_simple_mod_p(B, p)) {
    throw Error(ErrorCode::NotSplitSimple, "A or B is not split with simple roots modulo " + to_string(p));
  }
  const unsigned nu_res = valuation(resultant(A, B), p);
  DeltaValuationReport r;
  for (unsigned k = 1; k <= nu_res; ++k) {
    const SplitFactorization fa = lift_factorization(A, p, k);
    const SplitFactorization fb = lift_factorization(B, p, k);
    bool common = false;
    for (const auto& ri : fa.roots) {
      for (const auto& sj : fb.roots) common = common || ri == sj;
    }
    if (!common) break;
    r.mu = k;
  }
  r.nu_p_delta = valuation(minimal_delta(A, B).value, p);
  const Pattern pat = extract_pattern(A, B, p, nu_res);
  r.pattern_length = pat.length();
  r.pattern_max = pat.max_entry();
  const Integer pmu = pow_of(p, r.mu);
  r.holds = r.mu == r.nu_p_delta && Integer(static_cast<unsigned long>(r.pattern_length)) == pmu &&
            r.pattern_max == pmu;
  return r;
}

XpowReport xpow_plus_one_analysis(unsigned long a, unsigned long b, unsigned long window) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidArgument, "exponents must be positive");
  XpowReport r;
  r.a = a;
  r.b = b;
  const IntPoly one = IntPoly::constant(1);
  const IntPoly A = IntPoly::monomial(1, a) + one;
  const IntPoly B = IntPoly::monomial(1, b) + one;
  const unsigned long g = std::gcd(a, b);
  // x^g + 1 divides both exactly when a/g and b/g are odd.
  const bool shared = (a / g) % 2 == 1 && (b / g) % 2 == 1;
  const bool zero_res = resultant(A, B) == 0;
  if (shared != zero_res) throw Error(ErrorCode::Internal, "parity rule disagrees with the resultant");
  r.coprime = !shared;
  if (shared) {
    r.common_factor = IntPoly::monomial(1, g) + one;
    return r;
  }
  r.pattern = {Integer(1), Integer(2)};
  bool ok = true;
  for (unsigned long n = 0; n < window && ok; ++n) {
    ok = gcd_value(A, B, Integer(n)) == r.pattern[n % 2];
  }
  r.pattern_verified = ok;
  const BezoutCertificate cert = minimal_delta(A, B);
  if (cert.value == 2) r.two_certificate = cert;
  return r;
}

Integer count_poly_functions(unsigned long m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const Integer mm(m);
  Integer product = 1;
  Integer factorial = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    if (k > 0) factorial *= k;
    product *= div_exact(mm, gcd_of(mm, factorial));
  }
  return product;
}

std::size_t count_gcd_tuples(unsigned long m) {
  if (m == 0 || m > 8) throw Error(ErrorCode::InvalidArgument, "count_gcd_tuples supports 1 <= m <= 8");
  // Every polynomial map mod m is sum_k c_k x(x-1)...(x-k+1) with
  // 0 <= c_k < m / gcd(m, k!), and distinct choices give distinct maps.
  std::vector<unsigned long> range(m + 1);
  std::vector<std::vector<unsigned long>> falling(m + 1, std::vector<unsigned long>(m));
  unsigned long fact = 1;
  for (unsigned long k = 0; k <= m; ++k) {
    if (k > 0) fact = fact * k % m;  // gcd(m, k!) = gcd(m, k! mod m)
    range[k] = m / std::gcd(m, fact);
    for (unsigned long n = 0; n < m; ++n) {
      unsigned long v = 1;
      for (unsigned long i = 0; i < k; ++i) v = v * ((n + m - i) % m) % m;
      falling[k][n] = v;
    }
  }
  std::set<std::vector<unsigned long>> tuples;
  std::vector<unsigned long> c(m + 1, 0);
  for (;;) {
    std::vector<unsigned long> tuple(m);
    for (unsigned long n = 0; n < m; ++n) {
      unsigned long f = 0;
      for (unsigned long k = 0; k <= m; ++k) f = (f + c[k] * falling[k][n]) % m;
      tuple[n] = std::gcd(f, m);  // gcd(0, m) = m
    }
    tuples.insert(std::move(tuple));
    std::size_t k = 0;
    while (k <= m && ++c[k] == range[k]) c[k++] = 0;
    if (k > m) break;
  }
  return tuples.size();
}

std::optional<std::size_t> rotation_offset(const std::vector<Integer>& values, const std::vector<Integer>& target) {
  const std::size_t len = values.size();
  if (len != target.size()) return std::nullopt;
  for (std::size_t k = 0; k < len; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < len && match; ++i) match = values[i] == target[(i + k) % len];
    if (match) return k;
  }
  return std::nullopt;
}

bool pattern_equivalent(const std::vector<Integer>& values, const std::vector<Integer>& target, Equivalence eq) {
  if (values.size() != target.size()) return false;
  switch (eq) {
    case Equivalence::Exact:
      return values == target;
    case Equivalence::Rotation:
      return rotation_offset(values, target).has_value();
    case Equivalence::Permutation: {
      std::vector<Integer> a = values, b = target;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
  }
  return false;
}

}  // namespace gcdpat
