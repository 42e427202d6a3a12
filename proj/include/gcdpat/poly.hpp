#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcdpat/integer.hpp"

namespace gcdpat {

// Dense univariate polynomial over Z. coeffs()[k] is the coefficient of x^k;
// the top entry is never zero and the zero polynomial has no entries.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);
  // x - root
  static IntPoly linear_root(const Integer& root);

  std::span<const Integer> coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of x^k, zero beyond the degree.
  Integer coeff(std::size_t k) const;
  const Integer& leading() const;

  Integer eval(const Integer& n) const;
  IntPoly derivative() const;
  // gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // Every coefficient divided by c; throws unless c divides the content.
  IntPoly divide_exact(const Integer& c) const;
  // Coefficients reduced into [0, m).
  IntPoly reduce_mod(const Integer& m) const;
  // True when every coefficient is divisible by m.
  bool divisible_by(const Integer& m) const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

struct DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a monic divisor, exact over Z.
DivMod divmod_monic(const IntPoly& dividend, const IntPoly& divisor);

// Grammar: poly := [sign] term (('+'|'-') term)*,
// term := [integer]['*']['x'['^' nonneg-integer]]; whitespace is ignored.
IntPoly parse_poly(std::string_view text);

// Descending powers, zero terms omitted, "0" for the zero polynomial.
std::string format_poly(const IntPoly& p);

// x^gcd(a,b) - 1, obtained by running polynomial Euclid on x^a - 1, x^b - 1.
IntPoly cyclotomic_style_gcd(unsigned long a, unsigned long b);

}  // namespace gcdpat
