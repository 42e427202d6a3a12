#include <doctest.h>

#include <sstream>

#include "gcdpat/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = gcdpat::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli analyze") {
  const Run r = run({"analyze", "x^3-5x^2+10x-12", "x^2+3"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "global period = 156"));
  CHECK(contains(r.out, "pattern p=2: [1,2,1,4]_4"));
  CHECK(contains(r.out, "pattern p=3: [3,1,1]_3"));
  CHECK(contains(r.out, "pattern p=13: [1,1,1,1,1,1,1,13,1,1,1,1,1]_13"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("cli analyze --json is deterministic") {
  const Run a = run({"analyze", "x^2-32x+135", "x^2+3x+9", "--json"});
  const Run b = run({"analyze", "x^2-32x+135", "x^2+3x+9", "--json"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"resultant\": \"40131\""));
  CHECK(contains(a.out, "\"global_period\": \"5733\""));
  CHECK(contains(a.out, "\"delta\": \"5733\""));
  // Primes ascending.
  CHECK(a.out.find("\"p\": \"3\"") < a.out.find("\"p\": \"7\""));
  CHECK(a.out.find("\"p\": \"7\"") < a.out.find("\"p\": \"13\""));
}

TEST_CASE("cli delta, gvalues, pattern") {
  const Run d = run({"delta", "x^2+4", "x^2-4"});
  CHECK(d.status == 0);
  CHECK(contains(d.out, "resultant = 64"));
  CHECK(contains(d.out, "delta = 8"));
  CHECK(contains(d.out, "(agrees)"));

  const Run g = run({"gvalues", "x", "x-1", "--from", "0", "--to", "4"});
  CHECK(g.status == 0);
  CHECK(g.out == "1 1 1 1 1\n");

  const Run p = run({"pattern", "x^2+27", "x^2-18x+108", "--prime", "3"});
  CHECK(p.status == 0);
  CHECK(contains(p.out, "[27,1,1,9,1,1,9,1,1]_9"));
}

TEST_CASE("cli exercise") {
  const Run a = run({"exercise", "--a", "1", "--b", "2"});
  CHECK(a.status == 0);
  CHECK(contains(a.out, "coprime, pattern [1,2] verified"));
  const Run b = run({"exercise", "--a", "3", "--b", "5"});
  CHECK(contains(b.out, "common factor x+1"));
  const Run c = run({"exercise", "--a", "6", "--b", "4"});
  CHECK(contains(c.out, "gcd(x^6-1, x^4-1) = x^2-1"));
}

TEST_CASE("cli verify and search") {
  const Run v = run({"verify", "x^2-9x+16", "x^2-7x+12", "--seed", "3"});
  CHECK(v.status == 0);
  CHECK_FALSE(contains(v.out, "FAIL"));
  const Run s = run({"search", "--prime", "5", "--pattern", "25,1,1,1,1", "--equiv", "exact", "--deg-bound", "1",
                     "--coeff-bound", "4"});
  CHECK(s.status == 0);
  CHECK(contains(s.out, "none"));
}

TEST_CASE("cli exit codes") {
  CHECK(run({"bezout", "x^2-1", "x-1"}).status == 1);
  CHECK(run({"analyze", "x^2-1", "x-1"}).status == 1);
  CHECK(run({"pattern", "x^2+3", "x", "--prime", "4"}).status == 1);
  const Run bad = run({"analyze", "x^2+", "x"});
  CHECK(bad.status == 2);
  CHECK(contains(bad.err, "parse_error"));
  CHECK(run({"pattern", "x", "x-1"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
}
