#include "gcdpat/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gcdpat/error.hpp"
#include "gcdpat/modular.hpp"
#include "gcdpat/oracle.hpp"
#include "gcdpat/sylvester.hpp"

namespace gcdpat {

namespace {

class CheckList {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void skip(std::string name, std::string why) {
    checks_.push_back({std::move(name), CheckStatus::Skipped, std::move(why)});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

// Uniform enough for test sampling and identical on every platform.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

std::vector<Check> verify_suite(const IntPoly& A, const IntPoly& B, const VerifyOptions& options) {
  CheckList out;
  const ResultantReport rep = resultant_report(A, B);
  if (rep.delta_abs == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero: A and B share a factor");
  const Integer& delta_abs = rep.delta_abs;
  const bool monic = A.is_monic() && B.is_monic();

  const BezoutCertificate cert = minimal_delta(A, B);
  const Integer lattice = delta_lattice_oracle(A, B);
  out.add("delta_routes_agree", cert.value == lattice,
          "content " + to_string(cert.value) + ", lattice " + to_string(lattice));
  out.add("delta_divides_resultant", divides(cert.value, delta_abs));

  const long w = options.window;
  const oracle::SequenceWindow win = oracle::brute_g_window(A, B, Integer(-w), static_cast<std::uint64_t>(2 * w + 1));
  out.add("g_divides_resultant", std::all_of(win.values.begin(), win.values.end(),
                                             [&](const Integer& g) { return divides(g, delta_abs); }),
          "n in [-" + std::to_string(w) + ", " + std::to_string(w) + "]");
  out.add("g_divides_delta", std::all_of(win.values.begin(), win.values.end(),
                                         [&](const Integer& g) { return divides(g, cert.value); }));

  std::optional<GcdProfile> profile;
  try {
    profile = build_profile(A, B, ProfileOptions{options.scan_cap});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ScanCapExceeded) throw;
    out.skip("pattern_product", e.what());
  }
  if (profile) {
    for (const auto& c : profile->checks) {
      if (c.name == "delta_routes_agree" || c.name == "delta_divides_resultant") continue;
      out.add("profile_" + c.name, c.holds(), c.detail);
    }
    // Pattern reconstruction against direct gcds, one period plus the window.
    const std::uint64_t period = profile->global_period.get_ui();
    const oracle::SequenceWindow full = oracle::brute_g_window(A, B, 0, period);
    bool ok = true;
    for (std::uint64_t i = 0; i < period && ok; ++i) ok = full.values[i] == reconstruct_g(*profile, from_u64(i));
    for (std::size_t i = 0; i < win.values.size() && ok; ++i) {
      ok = win.values[i] == reconstruct_g(*profile, win.start + static_cast<unsigned long>(i));
    }
    out.add("pattern_product", ok, "oracle window of " + std::to_string(period) + " values plus [-w, w]");

    bool minimal = true;
    for (const auto& [p, pat] : profile->patterns) {
      const Integer pp = pat.p;
      for (std::size_t len = 1; len < pat.length(); len *= pp.get_ui()) {
        bool repeats = true;
        for (std::size_t i = len; i < pat.length() && repeats; ++i) repeats = pat.values[i] == pat.values[i % len];
        if (repeats) minimal = false;
      }
    }
    out.add("pattern_minimality", minimal);

    if (delta_abs * 2 <= options.scan_cap) {
      const oracle::SequenceWindow twice = oracle::brute_g_window(A, B, 0, 2 * delta_abs.get_ui());
      const Integer period_oracle = oracle::brute_minimal_period(twice, delta_abs);
      out.add("global_period_oracle", period_oracle == profile->global_period,
              "oracle " + to_string(period_oracle) + ", patterns " + to_string(profile->global_period));
      out.add("value_set_oracle", oracle::brute_value_set(A, B, options.scan_cap) == profile->value_set);
    } else {
      out.skip("global_period_oracle", "2 * |resultant| above the scan cap");
    }
  }

  if (!monic) {
    out.skip("resmodp", "A and B must be monic");
    out.skip("valpresone", "A and B must be monic");
    out.skip("valpresultant", "A and B must be monic");
    return out.take();
  }

  bool resmodp_ok = true;
  std::string resmodp_detail;
  for (const auto& [p, omega] : rep.factorization) {
    if (!fits_u64(p)) continue;
    const ResModPReport r = check_resmodp(A, B, p);
    resmodp_ok = resmodp_ok && r.holds;
    resmodp_detail += "p=" + to_string(p) + ":" + std::to_string(r.deg_D) + "<=" + std::to_string(r.omega_p) + " ";
  }
  out.add("resmodp", resmodp_ok, resmodp_detail);

  bool any_one = false;
  bool shape_ok = true;
  for (const auto& [p, omega] : rep.factorization) {
    if (omega != 1 || p > options.scan_cap) continue;
    any_one = true;
    shape_ok = shape_ok && validate_valpresone(extract_pattern(A, B, p, 1, options.scan_cap), 1);
  }
  if (any_one) out.add("valpresone", shape_ok);
  else out.skip("valpresone", "no prime with valuation one within the scan cap");

  std::mt19937_64 rng(options.seed);
  const long max_l = static_cast<long>(*A.degree() + *B.degree());
  bool tuples_ok = true;
  for (unsigned s = 0; s < options.samples; ++s) {
    const long l = std::min(draw(rng, 1, max_l), 2 * w + 1);
    std::set<long> ns;
    while (static_cast<long>(ns.size()) < l) ns.insert(draw(rng, -w, w));
    std::vector<std::pair<Integer, Integer>> pairs;
    for (long n : ns) pairs.emplace_back(Integer(n), win.values[static_cast<std::size_t>(n + w)]);
    tuples_ok = tuples_ok && verify_constraint(A, B, pairs).holds;
  }
  out.add("valpresultant", tuples_ok, std::to_string(options.samples) + " sampled tuples");
  return out.take();
}

}  // namespace gcdpat
