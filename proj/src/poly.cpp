#include "gcdpat/poly.hpp"

#include <algorithm>
#include <cctype>

#include "gcdpat/error.hpp"

namespace gcdpat {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& root) {
  return IntPoly(std::vector<Integer>{-root, Integer(1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::eval(const Integer& n) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd_of(g, c);
  return g;
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> v(a.coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * a.coeffs_[k];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const Integer& c) const {
  if (c == 0 || !divisible_by(c)) {
    throw Error(ErrorCode::InvalidArgument, "divisor " + to_string(c) + " does not divide every coefficient");
  }
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = div_exact(coeffs_[k], c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reduce_mod(const Integer& m) const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = mod_floor(coeffs_[k], m);
  return IntPoly(std::move(v));
}

bool IntPoly::divisible_by(const Integer& m) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Integer& c) { return divides(m, c); });
}

DivMod divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw Error(ErrorCode::NotMonic, "divisor must be monic");
  const std::size_t dd = *divisor.degree();
  std::vector<Integer> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  if (rem.size() <= dd) return {IntPoly{}, dividend};
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Integer q = rem[k];
    if (q == 0) continue;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeff(j);
  }
  rem.resize(dd);
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    std::vector<Integer> acc;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    add_term(acc, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      ++pos_;
      add_term(acc, c == '-');
    }
    return IntPoly(std::move(acc));
  }

 private:
  void add_term(std::vector<Integer>& acc, bool negative) {
    skip_ws();
    const std::size_t start = pos_;
    Integer coeff = 1;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      have_number = true;
      skip_ws();
    }
    bool star = false;
    if (!at_end() && peek() == '*') {
      if (!have_number) throw ParseError(pos_, "'*' without a coefficient");
      star = true;
      ++pos_;
      skip_ws();
    }
    std::size_t power = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError(pos_, "expected exponent");
        }
        const std::size_t exp_pos = pos_;
        const std::string digits = read_digits();
        if (digits.size() > 6) throw ParseError(exp_pos, "exponent too large");
        power = std::stoul(digits);
      }
    } else if (star) {
      throw ParseError(pos_, "expected 'x' after '*'");
    } else if (!have_number) {
      throw ParseError(start, "expected a term");
    }
    if (acc.size() <= power) acc.resize(power + 1);
    if (negative) acc[power] -= coeff;
    else acc[power] += coeff;
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || std::isspace(static_cast<unsigned char>(peek())))) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(peek());
      else if (!digit_follows_ws()) break;
      ++pos_;
    }
    return out;
  }

  // Whitespace inside a digit run is ignored like everywhere else.
  bool digit_follows_ws() const {
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Integer& c = cs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    const Integer mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

IntPoly cyclotomic_style_gcd(unsigned long a, unsigned long b) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidArgument, "exponents must be positive");
  const IntPoly one = IntPoly::constant(1);
  IntPoly f = IntPoly::monomial(1, a) - one;
  IntPoly g = IntPoly::monomial(1, b) - one;
  unsigned long ea = a;
  unsigned long eb = b;
  // Each remainder is x^(ea mod eb) - 1, so the loop tracks integer Euclid.
  while (!g.is_zero()) {
    IntPoly r = divmod_monic(f, g).remainder;
    const unsigned long er = ea % eb;
    const IntPoly expected = er == 0 ? IntPoly{} : IntPoly::monomial(1, er) - one;
    if (r != expected) throw Error(ErrorCode::Internal, "remainder does not mirror integer Euclid");
    f = std::move(g);
    g = std::move(r);
    ea = eb;
    eb = er;
  }
  return f;
}

}  // namespace gcdpat
