#include "gcdpat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "gcdpat/error.hpp"
#include "gcdpat/oracle.hpp"
#include "gcdpat/patterns.hpp"
#include "gcdpat/sylvester.hpp"
#include "gcdpat/verify.hpp"

namespace gcdpat::cli {

namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<Integer>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].get_str();
  }
  return out;
}

std::string format_pattern(const Pattern& pat) {
  return "[" + join(pat.values, ",") + "]_" + std::to_string(pat.length());
}

std::string format_factorization(const Factorization& f) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : f) {
    if (!out.empty()) out += " * ";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string_view status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw CLI::ValidationError(what, "not an integer: " + text);
  }
  return v;
}

std::vector<Integer> parse_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(parse_integer(item, "--pattern"));
  }
  return out;
}

json profile_json(const GcdProfile& prof) {
  json j;
  j["A"] = format_poly(prof.A);
  j["B"] = format_poly(prof.B);
  j["resultant"] = prof.resultant_report.delta_signed.get_str();
  j["delta"] = prof.delta.get_str();
  j["factorization"] = json::array();
  for (const auto& [p, e] : prof.resultant_report.factorization) {
    j["factorization"].push_back({{"p", p.get_str()}, {"omega", e}});
  }
  j["patterns"] = json::array();
  for (const auto& [p, pat] : prof.patterns) {
    json values = json::array();
    for (const auto& v : pat.values) values.push_back(v.get_str());
    j["patterns"].push_back({{"p", p.get_str()}, {"length", std::to_string(pat.length())}, {"values", values}});
  }
  j["global_period"] = prof.global_period.get_str();
  j["value_set"] = json::array();
  for (const auto& v : prof.value_set) j["value_set"].push_back(v.get_str());
  j["checks"] = json::array();
  for (const auto& c : prof.checks) {
    if (c.status == CheckStatus::Skipped) continue;
    j["checks"].push_back({{"name", c.name}, {"holds", c.holds()}});
  }
  return j;
}

void print_profile(const GcdProfile& prof, std::ostream& out) {
  out << "A = " << format_poly(prof.A) << "\n";
  out << "B = " << format_poly(prof.B) << "\n";
  out << "resultant = " << prof.resultant_report.delta_signed << "\n";
  out << "factorization = " << format_factorization(prof.resultant_report.factorization) << "\n";
  out << "delta = " << prof.delta << " (lattice route " << prof.delta_lattice
      << (prof.delta_minimality_certified ? ", minimal" : ", minimal among degree-bounded cofactors") << ")\n";
  for (const auto& [p, pat] : prof.patterns) out << "pattern p=" << p << ": " << format_pattern(pat) << "\n";
  out << "global period = " << prof.global_period << "\n";
  out << "value set = {" << join(prof.value_set, ", ") << "}\n";
  for (const auto& c : prof.checks) out << status_word(c.status) << " " << c.name << "\n";
}

struct Inputs {
  std::string a_text;
  std::string b_text;
  IntPoly A() const { return parse_poly(a_text); }
  IntPoly B() const { return parse_poly(b_text); }
};

void add_pair(CLI::App* cmd, Inputs& in) {
  cmd->add_option("A", in.a_text, "first polynomial, e.g. \"x^3-5x^2+10x-12\"")->required();
  cmd->add_option("B", in.b_text, "second polynomial")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gcd of polynomial values: resultants, patterns, Bezout constants", "gcdpat"};
  app.require_subcommand(1);

  Inputs in;
  bool as_json = false;
  unsigned long window = kDefaultScanCap;
  auto* analyze = app.add_subcommand("analyze", "full profile of G(n) = gcd(A(n), B(n))");
  add_pair(analyze, in);
  analyze->add_flag("--json", as_json, "emit the JSON report");
  analyze->add_option("--window", window, "cap on evaluations per scan")->check(CLI::PositiveNumber);

  auto* res = app.add_subcommand("resultant", "resultant and its factorization");
  add_pair(res, in);
  auto* bez = app.add_subcommand("bezout", "integer Bezout certificate A U + B V = |resultant|");
  add_pair(bez, in);
  auto* del = app.add_subcommand("delta", "minimal Bezout constant");
  add_pair(del, in);

  std::string prime_text;
  auto* pat = app.add_subcommand("pattern", "pattern of the p-parts of G(n)");
  add_pair(pat, in);
  pat->add_option("--prime", prime_text, "prime p")->required();

  std::string from_text = "0", to_text = "30";
  auto* gv = app.add_subcommand("gvalues", "G(n) for n in [from, to]");
  add_pair(gv, in);
  gv->add_option("--from", from_text, "first n");
  gv->add_option("--to", to_text, "last n");

  VerifyOptions vopts;
  auto* ver = app.add_subcommand("verify", "run the property suite on one pair");
  add_pair(ver, in);
  ver->add_option("--samples", vopts.samples, "sampled tuples for the product constraint");
  ver->add_option("--seed", vopts.seed, "random seed");

  std::string target_text, equiv_text = "exact";
  unsigned deg_bound = 2;
  long coeff_bound = 10;
  auto* search = app.add_subcommand("search", "find monic polynomials realizing a pattern");
  search->add_option("--prime", prime_text, "prime p")->required();
  search->add_option("--pattern", target_text, "comma separated p-powers, e.g. 5,1,1,1,1")->required();
  search->add_option("--equiv", equiv_text, "exact | rotation | permutation")
      ->check(CLI::IsMember({"exact", "rotation", "permutation"}));
  search->add_option("--deg-bound", deg_bound, "maximal degree");
  search->add_option("--coeff-bound", coeff_bound, "maximal |coefficient|");

  unsigned long ea = 1, eb = 2;
  auto* ex = app.add_subcommand("exercise", "x^a + 1 against x^b + 1");
  ex->add_option("--a", ea, "exponent a")->required()->check(CLI::PositiveNumber);
  ex->add_option("--b", eb, "exponent b")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (analyze->parsed()) {
      const GcdProfile prof = build_profile(in.A(), in.B(), ProfileOptions{window});
      if (as_json) out << profile_json(prof).dump(2) << "\n";
      else print_profile(prof, out);
    } else if (res->parsed()) {
      const ResultantReport r = resultant_report(in.A(), in.B());
      out << "resultant = " << r.delta_signed << "\n";
      if (r.delta_signed != 0) out << "factorization = " << format_factorization(r.factorization) << "\n";
    } else if (bez->parsed()) {
      const BezoutCertificate c = bezout_certificate(in.A(), in.B());
      out << "U = " << format_poly(c.U) << "\nV = " << format_poly(c.V) << "\nvalue = " << c.value << "\n";
    } else if (del->parsed()) {
      const IntPoly A = in.A(), B = in.B();
      const Integer delta_signed = resultant(A, B);
      const BezoutCertificate c = minimal_delta(A, B);
      const Integer lattice = delta_lattice_oracle(A, B);
      out << "resultant = " << delta_signed << "\n";
      out << "delta = " << c.value << "\n";
      out << "U = " << format_poly(c.U) << "\nV = " << format_poly(c.V) << "\n";
      out << "lattice delta = " << lattice << (lattice == c.value ? " (agrees)" : " (DISAGREES)") << "\n";
      if (!delta_minimality_certified(A, B)) out << "note: minimal among degree-bounded cofactors only\n";
      if (lattice != c.value) return kDomainError;
    } else if (pat->parsed()) {
      const IntPoly A = in.A(), B = in.B();
      const Integer p = parse_integer(prime_text, "--prime");
      if (!is_prime(p)) throw Error(ErrorCode::NotPrime, prime_text + " is not prime");
      const Integer delta = resultant(A, B);
      if (delta == 0) throw Error(ErrorCode::NotCoprime, "resultant is zero");
      const unsigned omega = valuation(delta, p);
      const Pattern pattern = extract_pattern(A, B, p, omega);
      out << "omega = " << omega << "\npattern = " << format_pattern(pattern) << "\n";
    } else if (gv->parsed()) {
      const Integer from = parse_integer(from_text, "--from");
      const Integer to = parse_integer(to_text, "--to");
      if (to < from) throw CLI::ValidationError("--to", "must not be below --from");
      const Integer count = to - from + 1;
      if (count > kDefaultScanCap) throw Error(ErrorCode::ScanCapExceeded, "range too long");
      const oracle::SequenceWindow w = oracle::brute_g_window(in.A(), in.B(), from, count.get_ui());
      out << join(w.values, " ") << "\n";
    } else if (ver->parsed()) {
      const std::vector<Check> checks = verify_suite(in.A(), in.B(), vopts);
      bool ok = true;
      for (const auto& c : checks) {
        out << status_word(c.status) << " " << c.name;
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << "\n";
        ok = ok && c.holds();
      }
      if (!ok) return kDomainError;
    } else if (search->parsed()) {
      const Integer p = parse_integer(prime_text, "--prime");
      const Equivalence eq = equiv_text == "rotation"      ? Equivalence::Rotation
                             : equiv_text == "permutation" ? Equivalence::Permutation
                                                           : Equivalence::Exact;
      const oracle::SearchResult r =
          oracle::search_realizing_pair(p, parse_list(target_text), eq, deg_bound, coeff_bound);
      if (r.pair) out << "A = " << format_poly(r.pair->first) << "\nB = " << format_poly(r.pair->second) << "\n";
      else out << "none\n";
      out << "pairs examined = " << r.pairs_examined << ", skipped = " << r.pairs_skipped << "\n";
    } else if (ex->parsed()) {
      const XpowReport r = xpow_plus_one_analysis(ea, eb);
      out << "A = " << format_poly(IntPoly::monomial(1, ea) + IntPoly::constant(1)) << "\n";
      out << "B = " << format_poly(IntPoly::monomial(1, eb) + IntPoly::constant(1)) << "\n";
      if (r.coprime) {
        out << "coprime, pattern [" << join(r.pattern, ",") << "] " << (r.pattern_verified ? "verified" : "NOT verified")
            << "\n";
        if (r.two_certificate) {
          out << "2 = A*(" << format_poly(r.two_certificate->U) << ") + B*(" << format_poly(r.two_certificate->V)
              << ")\n";
        }
      } else {
        out << "not coprime, common factor " << format_poly(*r.common_factor) << "\n";
      }
      out << "gcd(x^" << ea << "-1, x^" << eb << "-1) = " << format_poly(cyclotomic_style_gcd(ea, eb)) << "\n";
    }
  } catch (const ParseError& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace gcdpat::cli
