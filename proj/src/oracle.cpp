#include "gcdpat/oracle.hpp"

#include <algorithm>
#include <set>

#include "gcdpat/error.hpp"
#include "gcdpat/sylvester.hpp"

namespace gcdpat::oracle {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer from_u128(u128 v) {
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(v);
  return (from_u64(hi) << 64) + from_u64(lo);
}

// Evaluates exactly, in 128-bit words when sum |c_k| * N^deg stays below 2^125
// for every |n| <= N, otherwise as a plain sum of powers over GMP integers.
class ExactEvaluator {
 public:
  ExactEvaluator(const IntPoly& P, const Integer& max_abs_n) : poly_(P) {
    Integer bound = 0;
    bool fits = true;
    for (const auto& c : P.coeffs()) {
      bound += abs(c);
      fits = fits && c.fits_slong_p();
    }
    const Integer n = max_abs_n > 1 ? max_abs_n : Integer(1);
    const std::size_t deg = P.degree().value_or(0);
    fast_ = fits && bound * pow_of(n, deg) < (Integer(1) << 125) && max_abs_n.fits_slong_p();
    if (fast_) {
      for (const auto& c : P.coeffs()) coeffs_.push_back(c.get_si());
    }
  }

  bool fast() const { return fast_; }

  i128 eval_fast(long n) const {
    i128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

  Integer eval_slow(const Integer& n) const {
    Integer sum = 0;
    Integer power = 1;
    for (const auto& c : poly_.coeffs()) {
      sum += c * power;
      power *= n;
    }
    return sum;
  }

 private:
  IntPoly poly_;
  bool fast_ = false;
  std::vector<long> coeffs_;
};

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

std::vector<IntPoly> monic_polys(unsigned degree, long bound) {
  std::vector<IntPoly> out;
  std::vector<long> c(degree, -bound);
  for (;;) {
    std::vector<Integer> coeffs;
    for (long v : c) coeffs.emplace_back(v);
    coeffs.emplace_back(1);
    out.emplace_back(std::move(coeffs));
    std::size_t k = 0;
    while (k < degree && c[k] == bound) c[k++] = -bound;
    if (k == degree) break;
    ++c[k];
  }
  return out;
}

}  // namespace

SequenceWindow brute_g_window(const IntPoly& A, const IntPoly& B, const Integer& start, std::uint64_t len) {
  SequenceWindow w{start, {}};
  w.values.reserve(len);
  const Integer last = start + from_u64(len);
  const Integer reach = abs(start) > abs(last) ? Integer(abs(start)) : Integer(abs(last));
  const ExactEvaluator ea(A, reach);
  const ExactEvaluator eb(B, reach);
  const bool fast = ea.fast() && eb.fast();
  for (std::uint64_t i = 0; i < len; ++i) {
    const Integer n = start + from_u64(i);
    Integer g;
    bool both_zero = false;
    if (fast) {
      const long x = n.get_si();
      const u128 a = magnitude(ea.eval_fast(x));
      const u128 b = magnitude(eb.eval_fast(x));
      both_zero = a == 0 && b == 0;
      g = from_u128(gcd128(a, b));
    } else {
      const Integer a = ea.eval_slow(n);
      const Integer b = eb.eval_slow(n);
      both_zero = a == 0 && b == 0;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    if (both_zero) throw Error(ErrorCode::BothZero, "A and B both vanish at " + to_string(n));
    w.values.push_back(std::move(g));
  }
  return w;
}

Integer brute_minimal_period(const SequenceWindow& window, const Integer& delta_abs) {
  if (delta_abs < 1) throw Error(ErrorCode::InvalidArgument, "period search needs |resultant| >= 1");
  const std::size_t len = window.values.size();
  if (Integer(static_cast<unsigned long>(len)) < 2 * delta_abs) {
    throw Error(ErrorCode::WindowTooShort, "window must hold at least 2 * |resultant| values");
  }
  const unsigned long n = delta_abs.get_ui();
  for (unsigned long t = 1; t <= n; ++t) {
    if (n % t != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + t < len && periodic; ++i) periodic = window.values[i] == window.values[i + t];
    if (periodic) return t;
  }
  throw Error(ErrorCode::Internal, "resultant is not a period of the window");
}

std::vector<Integer> brute_value_set(const IntPoly& A, const IntPoly& B, unsigned long scan_cap) {
  const Integer span = abs(resultant(A, B));
  if (span == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
  if (span > scan_cap) throw Error(ErrorCode::ScanCapExceeded, "|resultant| exceeds the scan cap");
  const SequenceWindow w = brute_g_window(A, B, 0, span.get_ui());
  const std::set<Integer> distinct(w.values.begin(), w.values.end());
  return {distinct.begin(), distinct.end()};
}

SearchResult search_realizing_pair(const Integer& p, const std::vector<Integer>& target, Equivalence eq,
                                   unsigned degree_bound, long coeff_bound, unsigned long scan_cap) {
  if (target.empty()) throw Error(ErrorCode::InvalidArgument, "empty target pattern");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
  Integer target_max = 0;
  for (const auto& v : target) {
    if (v < 1 || pow_of(p, valuation(v, p)) != v) {
      throw Error(ErrorCode::InvalidArgument, "target entries must be powers of p");
    }
    if (v > target_max) target_max = v;
  }
  const unsigned need = valuation(target_max, p);

  std::vector<std::vector<IntPoly>> by_degree(degree_bound + 1);
  for (unsigned d = 1; d <= degree_bound; ++d) by_degree[d] = monic_polys(d, coeff_bound);

  SearchResult result;
  for (unsigned da = 1; da <= degree_bound; ++da) {
    for (unsigned db = da; db <= degree_bound; ++db) {
      const auto& as = by_degree[da];
      const auto& bs = by_degree[db];
      for (std::size_t i = 0; i < as.size(); ++i) {
        for (std::size_t j = (da == db ? i + 1 : 0); j < bs.size(); ++j) {
          ++result.pairs_examined;
          const Integer delta = resultant(as[i], bs[j]);
          if (delta == 0) continue;
          const unsigned nu = valuation(delta, p);
          if (nu < need) continue;
          const Integer span = pow_of(p, nu);
          if (span > scan_cap) {
            ++result.pairs_skipped;
            continue;
          }
          // p-parts of G(n) have period dividing p^nu.
          const SequenceWindow w = brute_g_window(as[i], bs[j], 0, span.get_ui());
          std::vector<Integer> parts;
          parts.reserve(w.values.size());
          for (const auto& g : w.values) parts.push_back(pow_of(p, valuation(g, p)));
          std::size_t period = 1;
          while (period < parts.size()) {
            bool ok = true;
            for (std::size_t k = period; k < parts.size() && ok; ++k) ok = parts[k] == parts[k - period];
            if (ok) break;
            period *= p.get_ui();
          }
          parts.resize(period);
          if (pattern_equivalent(parts, target, eq)) {
            result.pair = std::make_pair(as[i], bs[j]);
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace gcdpat::oracle
