#include "motzeta/laurent.hpp"

#include <cctype>

namespace motzeta {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Removes one pair of enclosing parentheses if they match each other.
std::string_view unwrap(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return s;
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

LaurentMotive::LaurentMotive(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentMotive::LaurentMotive(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentMotive LaurentMotive::monomial(const Integer& coeff, int exponent) {
  LaurentMotive m;
  m.add_term(exponent, coeff);
  return m;
}

Integer LaurentMotive::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentMotive::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero Laurent motive");
  return terms_.begin()->first;
}

int LaurentMotive::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of zero Laurent motive");
  return terms_.rbegin()->first;
}

void LaurentMotive::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentMotive& LaurentMotive::operator+=(const LaurentMotive& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentMotive& LaurentMotive::operator-=(const LaurentMotive& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentMotive operator*(const LaurentMotive& a, const LaurentMotive& b) {
  LaurentMotive out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentMotive& LaurentMotive::operator*=(const LaurentMotive& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentMotive LaurentMotive::operator-() const {
  LaurentMotive out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentMotive LaurentMotive::pow(unsigned exponent) const {
  LaurentMotive result(1);
  LaurentMotive base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentMotive LaurentMotive::shifted(int k) const {
  LaurentMotive out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::optional<LaurentMotive> LaurentMotive::divide_exact(const LaurentMotive& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero Laurent motive");
  if (is_zero()) return LaurentMotive();
  const int lowest_quotient = min_exponent() - divisor.min_exponent();
  const int dmax = divisor.max_exponent();
  const Integer& dlead = divisor.terms_.rbegin()->second;
  LaurentMotive quotient;
  LaurentMotive rem = *this;
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - dmax;
    if (e < lowest_quotient) return std::nullopt;
    const Integer& lead = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), dlead.get_mpz_t())) return std::nullopt;
    Integer c = lead / dlead;
    quotient.add_term(e, c);
    rem -= monomial(c, e) * divisor;
  }
  return quotient;
}

Rational LaurentMotive::specialize(const Rational& q) const {
  if (q == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw DomainError("cannot specialize a negative power of L at 0");
  Rational value = 0;
  for (const auto& [e, c] : terms_) value += Rational(c) * rpow(q, e);
  return value;
}

std::string LaurentMotive::to_string(char symbol) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += symbol;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentMotive LaurentMotive::parse(std::string_view text, char symbol) {
  const std::string s = strip_spaces(text);
  auto fail = [&](const std::string& why) {
    return ParseError("Laurent motive '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty input");
  LaurentMotive out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    Integer coeff = 1;
    const bool has_coeff = pos > start;
    if (has_coeff) coeff = Integer(s.substr(start, pos - start));
    int exponent = 0;
    bool has_symbol = false;
    if (has_coeff && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != symbol) throw fail("expected symbol after '*'");
    }
    if (pos < s.size() && s[pos] == symbol) {
      has_symbol = true;
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == dstart) throw fail("missing exponent");
        if (pos - dstart > 7) throw fail("exponent out of range");
        exponent = std::stoi(s.substr(estart, pos - estart));
      }
    }
    if (!has_coeff && !has_symbol) throw fail("empty term at offset " + std::to_string(start));
    out.add_term(exponent, negative ? Integer(-coeff) : coeff);
  }
  return out;
}

RationalMotive::RationalMotive(LaurentMotive num, LaurentMotive den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalMotive::normalize() {
  if (den_.is_zero()) throw DomainError("rational motive with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentMotive(1);
    return;
  }
  if (den_ == LaurentMotive(1)) return;
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = LaurentMotive(1);
    return;
  }
  // Fold monomial factors of the denominator into the numerator.
  if (int shift = den_.min_exponent(); shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (den_.terms().rbegin()->second < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

RationalMotive& RationalMotive::operator+=(const RationalMotive& rhs) {
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else if (rhs.is_laurent()) {
    num_ += rhs.num_ * den_;
  } else if (is_laurent()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
  } else if (auto ratio = den_.divide_exact(rhs.den_)) {
    num_ += rhs.num_ * *ratio;
  } else if (auto ratio2 = rhs.den_.divide_exact(den_)) {
    num_ = num_ * *ratio2 + rhs.num_;
    den_ = rhs.den_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalMotive& RationalMotive::operator-=(const RationalMotive& rhs) { return *this += -rhs; }

RationalMotive& RationalMotive::operator*=(const RationalMotive& rhs) {
  LaurentMotive a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  // Cross-cancel exact divisions before multiplying out.
  if (auto q = a.divide_exact(d)) {
    a = std::move(*q);
    d = LaurentMotive(1);
  }
  if (auto q = c.divide_exact(b)) {
    c = std::move(*q);
    b = LaurentMotive(1);
  }
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RationalMotive& RationalMotive::operator/=(const RationalMotive& rhs) {
  if (rhs.is_zero()) throw DomainError("division by the zero rational motive");
  return *this *= RationalMotive(rhs.den_, rhs.num_);
}

bool operator==(const RationalMotive& a, const RationalMotive& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalMotive::specialize(const Rational& q) const {
  Rational d = den_.specialize(q);
  if (d == 0)
    throw DomainError("denominator " + den_.to_string() + " vanishes at L = " + q.get_str());
  return num_.specialize(q) / d;
}

std::string RationalMotive::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalMotive RationalMotive::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    if (s[i] == '/' && depth == 0) {
      auto num = LaurentMotive::parse(unwrap(std::string_view(s).substr(0, i)));
      auto den = LaurentMotive::parse(unwrap(std::string_view(s).substr(i + 1)));
      if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
      return RationalMotive(std::move(num), std::move(den));
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
  return RationalMotive(LaurentMotive::parse(unwrap(s)));
}

}  // namespace motzeta
