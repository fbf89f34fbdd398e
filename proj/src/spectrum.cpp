#include "motzeta/spectrum.hpp"

#include <cctype>

namespace motzeta {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

bool digit(char c) { return c >= '0' && c <= '9'; }

// Common denominator of all exponents of the given spectra.
unsigned long exponent_denominator(const Spectrum& a, const Spectrum& b) {
  Integer den = 1;
  for (const Spectrum* s : {&a, &b})
    for (const auto& [e, c] : s->terms()) {
      Integer g;
      mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
      den = g;
    }
  if (!den.fits_sint_p()) throw DomainError("spectrum exponent denominators too large");
  return den.get_ui();
}

LaurentMotive to_laurent(const Spectrum& s, unsigned long den) {
  LaurentMotive out;
  for (const auto& [e, c] : s.terms()) {
    const Rational scaled = e * Rational(static_cast<long>(den));
    const Integer num = scaled.get_num();
    if (!num.fits_sint_p()) throw DomainError("spectrum exponent out of range");
    out += LaurentMotive::monomial(c, static_cast<int>(num.get_si()));
  }
  return out;
}

Spectrum from_laurent_scaled(const LaurentMotive& a, unsigned long den) {
  Spectrum out;
  for (const auto& [e, c] : a.terms())
    out += Spectrum::monomial(c, Rational(e, static_cast<long>(den)));
  return out;
}

}  // namespace

Spectrum::Spectrum(long constant) {
  if (constant != 0) terms_.emplace(Rational(0), Integer(constant));
}

Spectrum Spectrum::monomial(const Integer& coeff, const Rational& exponent) {
  Spectrum s;
  Rational e = exponent;
  e.canonicalize();
  s.add_term(e, coeff);
  return s;
}

Spectrum Spectrum::from_laurent(const LaurentMotive& a) { return from_laurent_scaled(a, 1); }

Integer Spectrum::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Spectrum::add_term(const Rational& exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Spectrum& Spectrum::operator+=(const Spectrum& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Spectrum Spectrum::operator-() const {
  Spectrum out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Spectrum operator*(const Spectrum& a, const Spectrum& b) {
  Spectrum out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

std::optional<Spectrum> Spectrum::divide_exact(const Spectrum& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero spectrum");
  const unsigned long den = exponent_denominator(*this, divisor);
  auto q = to_laurent(*this, den).divide_exact(to_laurent(divisor, den));
  if (!q) return std::nullopt;
  return from_laurent_scaled(*q, den);
}

std::string Spectrum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e == 1) continue;
    if (e.get_den() == 1)
      out += "^" + e.get_num().get_str();
    else
      out += "^(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
  }
  return out;
}

Spectrum Spectrum::parse(std::string_view text) {
  const std::string s = strip(text);
  auto fail = [&](const std::string& why) {
    return ParseError("spectrum '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty input");
  Spectrum out;
  std::size_t pos = 0;
  bool first = true;
  auto read_int = [&](std::size_t& p) {
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    const std::size_t dstart = p;
    while (p < s.size() && digit(s[p])) ++p;
    if (p == dstart) throw fail("expected integer at offset " + std::to_string(start));
    std::string digits = s.substr(start, p - start);
    if (digits.front() == '+') digits.erase(0, 1);
    return Integer(digits);
  };
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    Integer coeff = 1;
    bool has_coeff = false;
    if (pos < s.size() && digit(s[pos])) {
      coeff = read_int(pos);
      has_coeff = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || s[pos] != 't') throw fail("expected 't' after '*'");
      }
    }
    Rational exponent = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        if (pos < s.size() && s[pos] == '(') {
          ++pos;
          Integer num = read_int(pos);
          Integer den = 1;
          if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = read_int(pos);
          }
          if (pos >= s.size() || s[pos] != ')') throw fail("missing ')'");
          ++pos;
          if (den == 0) throw fail("zero exponent denominator");
          exponent = Rational(num, den);
          exponent.canonicalize();
        } else {
          exponent = Rational(read_int(pos));
        }
      }
    } else if (!has_coeff) {
      throw fail("empty term at offset " + std::to_string(pos));
    }
    out.add_term(exponent, negative ? Integer(-coeff) : coeff);
  }
  return out;
}

}  // namespace motzeta
