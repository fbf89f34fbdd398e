#include "motzeta/series.hpp"

#include <cctype>
#include <functional>

namespace motzeta {

namespace {

struct LaurentLess {
  bool operator()(const LaurentMotive& a, const LaurentMotive& b) const {
    return a.terms() < b.terms();
  }
};

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

std::string t_monomial(const MultiIndex& n) {
  std::string out;
  for (int i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "T";
    if (n.size() > 1) out += std::to_string(i + 1);
    if (n[i] != 1) out += "^" + std::to_string(n[i]);
  }
  return out;
}

// Parses "T^2", "T1^2*T3", ... into a multi-index of arity ell.
MultiIndex parse_t_monomial(std::string_view s, int ell) {
  MultiIndex n = MultiIndex::zeros(ell);
  std::size_t pos = 0;
  auto fail = [&](const char* why) {
    return ParseError("T-monomial '" + std::string(s) + "': " + why);
  };
  while (pos < s.size()) {
    if (s[pos] != 'T') throw fail("expected 'T'");
    ++pos;
    int var = 1;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) var = std::stoi(std::string(s.substr(start, pos - start)));
    else if (ell != 1) throw fail("variable index required when l > 1");
    if (var < 1 || var > ell) throw fail("variable index out of range");
    int exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      if (pos < s.size() && s[pos] == '-') ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw fail("missing exponent");
      exponent = std::stoi(std::string(s.substr(start, pos - start)));
    }
    n[var - 1] += exponent;
    if (pos < s.size()) {
      if (s[pos] != '*') throw fail("expected '*'");
      ++pos;
    }
  }
  return n;
}

std::size_t matching_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced parentheses in '" + s + "'");
}

}  // namespace

MultiIndex SeriesTerm::factor_degree() const {
  MultiIndex total = MultiIndex::zeros(shift.size());
  for (const auto& f : factors) total += f.N;
  return total;
}

RationalSeries::RationalSeries(int ell) : ell_(ell) {
  if (ell < 1) throw DomainError("rational series needs at least one variable");
}

void RationalSeries::add_term(SeriesTerm term) {
  if (term.shift.size() != ell_) throw DomainError("term shift arity mismatch");
  for (const auto& f : term.factors) {
    if (f.N.size() != ell_) throw DomainError("factor arity mismatch");
    if (f.nu < 1) throw DomainError("factor needs nu >= 1");
    if (f.N.is_zero() || !f.N.nonnegative())
      throw DomainError("factor exponent N must be nonzero and nonnegative");
  }
  if (term.coeff.is_zero()) return;
  terms_.push_back(std::move(term));
}

RationalSeries RationalSeries::monomial(int ell, RationalMotive coeff, MultiIndex shift) {
  RationalSeries s(ell);
  s.add_term(SeriesTerm{std::move(coeff), std::move(shift), {}});
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
  if (rhs.ell_ != ell_) throw DomainError("series variable counts differ");
  for (const auto& t : rhs.terms_) terms_.push_back(t);
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  if (a.ell_ != b.ell_) throw DomainError("series variable counts differ");
  RationalSeries out(a.ell_);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      SeriesTerm t{ta.coeff * tb.coeff, ta.shift + tb.shift, ta.factors};
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.add_term(std::move(t));
    }
  return out;
}

RationalSeries RationalSeries::scaled(const RationalMotive& factor) const {
  RationalSeries out(ell_);
  for (const auto& t : terms_) out.add_term(SeriesTerm{t.coeff * factor, t.shift, t.factors});
  return out;
}

RationalSeries RationalSeries::shifted(const MultiIndex& shift) const {
  if (shift.size() != ell_) throw DomainError("shift arity mismatch");
  RationalSeries out(ell_);
  for (const auto& t : terms_) out.add_term(SeriesTerm{t.coeff, t.shift + shift, t.factors});
  return out;
}

RationalSeries RationalSeries::times_polynomial(
    const std::vector<std::pair<RationalMotive, MultiIndex>>& poly) const {
  RationalSeries out(ell_);
  for (const auto& t : terms_)
    for (const auto& [c, s] : poly) out.add_term(SeriesTerm{t.coeff * c, t.shift + s, t.factors});
  return out;
}

RationalSeries RationalSeries::with_factors(const std::vector<SeriesFactor>& extra) const {
  RationalSeries out(ell_);
  for (const auto& t : terms_) {
    SeriesTerm copy = t;
    copy.factors.insert(copy.factors.end(), extra.begin(), extra.end());
    out.add_term(std::move(copy));
  }
  return out;
}

std::string RationalSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) out += " + ";
    out += "(" + t.coeff.to_string() + ")";
    if (!t.shift.is_zero()) out += "*" + t_monomial(t.shift);
    if (!t.factors.empty()) {
      out += " / (";
      for (const auto& f : t.factors)
        out += "(1 - L^-" + std::to_string(f.nu) + "*" + t_monomial(f.N) + ")";
      out += ")";
    }
  }
  return out;
}

RationalSeries RationalSeries::parse(std::string_view text, int ell) {
  const std::string s = strip_spaces(text);
  RationalSeries out(ell);
  if (s == "0") return out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    return ParseError("series '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    if (pos > 0) {
      if (s[pos] != '+') throw fail("expected '+' between terms");
      ++pos;
    }
    if (pos >= s.size() || s[pos] != '(') throw fail("term must start with '(coeff)'");
    std::size_t close = matching_paren(s, pos);
    SeriesTerm term{RationalMotive::parse(s.substr(pos + 1, close - pos - 1)),
                    MultiIndex::zeros(ell),
                    {}};
    pos = close + 1;
    if (pos < s.size() && s[pos] == '*') {
      std::size_t end = s.find_first_of("/+", pos + 1);
      if (end == std::string::npos) end = s.size();
      term.shift = parse_t_monomial(std::string_view(s).substr(pos + 1, end - pos - 1), ell);
      pos = end;
    }
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      if (pos >= s.size() || s[pos] != '(') throw fail("expected '(' after '/'");
      std::size_t outer = matching_paren(s, pos);
      std::size_t p = pos + 1;
      while (p < outer) {
        if (s[p] != '(') throw fail("expected factor '(1 - L^-v*T^N)'");
        std::size_t fc = matching_paren(s, p);
        std::string body = s.substr(p + 1, fc - p - 1);
        const std::string prefix = "1-L^-";
        if (body.compare(0, prefix.size(), prefix) != 0) throw fail("bad factor '" + body + "'");
        std::size_t star = body.find('*');
        if (star == std::string::npos) throw fail("bad factor '" + body + "'");
        SeriesFactor f;
        f.nu = std::stoi(body.substr(prefix.size(), star - prefix.size()));
        f.N = parse_t_monomial(std::string_view(body).substr(star + 1), ell);
        term.factors.push_back(std::move(f));
        p = fc + 1;
      }
      pos = outer + 1;
    }
    out.add_term(std::move(term));
  }
  return out;
}

TruncatedSeries<RationalMotive> expand(const RationalSeries& series, int order) {
  if (order < 0) throw DomainError("expansion order must be >= 0");
  const int ell = series.ell();
  // Numerators summed per coefficient denominator, per index.
  std::map<LaurentMotive, std::map<MultiIndex, LaurentMotive>, LaurentLess> grouped;
  for (const auto& term : series.terms()) {
    const int budget = order - term.shift.total();
    if (budget < 0) continue;
    std::map<MultiIndex, LaurentMotive> product{{MultiIndex::zeros(ell), LaurentMotive(1)}};
    for (const auto& f : term.factors) {
      std::map<MultiIndex, LaurentMotive> next;
      for (const auto& [rel, c] : product) {
        MultiIndex idx = rel;
        for (int k = 0; idx.total() <= budget; ++k) {
          next[idx] += c.shifted(-f.nu * k);
          idx += f.N;
        }
      }
      product = std::move(next);
    }
    auto& bucket = grouped[term.coeff.denominator()];
    for (const auto& [rel, c] : product) bucket[term.shift + rel] += term.coeff.numerator() * c;
  }
  TruncatedSeries<RationalMotive> out(ell, order);
  std::map<MultiIndex, RationalMotive> negative;
  for (const auto& [den, bucket] : grouped)
    for (const auto& [idx, num] : bucket) {
      if (num.is_zero()) continue;
      RationalMotive value(num, den);
      if (idx.nonnegative()) {
        out.add(idx, value);
      } else {
        negative[idx] += value;
      }
    }
  for (const auto& [idx, value] : negative)
    if (!value.is_zero())
      throw DomainError("expansion has a nonzero coefficient at T^" + idx.to_string());
  return out;
}

RationalMotive limit_at_infinity(const RationalSeries& series, const std::vector<int>& alpha) {
  const int ell = series.ell();
  if (static_cast<int>(alpha.size()) != ell) throw DomainError("alpha arity mismatch");
  for (int a : alpha)
    if (a < 1) throw DomainError("alpha must be strictly positive");
  RationalMotive limit;
  for (std::size_t i = 0; i < series.terms().size(); ++i) {
    const auto& term = series.terms()[i];
    const MultiIndex degree = term.factor_degree();
    if (!term.shift.dominated_by(degree))
      throw DomainError("limit at infinity undefined: term " + std::to_string(i + 1) +
                        " has shift " + term.shift.to_string() + " exceeding factor degree " +
                        degree.to_string());
    if (term.shift.dot(alpha) < degree.dot(alpha)) continue;
    int nu_total = 0;
    for (const auto& f : term.factors) nu_total += f.nu;
    RationalMotive contribution = term.coeff * RationalMotive(LaurentMotive::L(nu_total));
    if (term.factors.size() % 2 == 1) contribution = -contribution;
    limit += contribution;
  }
  return limit;
}

RationalMotive limit_at_infinity(const RationalSeries& series) {
  const int ell = series.ell();
  std::vector<int> ones(static_cast<std::size_t>(ell), 1);
  RationalMotive first = limit_at_infinity(series, ones);
  if (ell == 1) return first;
  std::vector<int> ramp(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) ramp[static_cast<std::size_t>(i)] = i + 1;
  RationalMotive second = limit_at_infinity(series, ramp);
  if (!(first == second))
    throw DomainError("limit at infinity depends on the substitution T_i -> S^alpha_i");
  return first;
}

bool series_equal(const RationalSeries& a, const RationalSeries& b, int order) {
  if (a.ell() != b.ell()) throw DomainError("series variable counts differ");
  return expand(a, order) == expand(b, order);
}

TruncatedSeries<Rational> specialize(const TruncatedSeries<RationalMotive>& s, const Rational& q) {
  return s.transformed([&](const RationalMotive& c) -> Rational { return c.specialize(q); });
}

std::string to_string(const TruncatedSeries<Rational>& s) {
  if (s.coeffs().empty()) return "0";
  std::string out;
  for (const auto& [n, c] : s.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    std::string mono = t_monomial(n);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

std::string to_string(const TruncatedSeries<RationalMotive>& s) {
  if (s.coeffs().empty()) return "0";
  std::string out;
  for (const auto& [n, c] : s.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    std::string mono = t_monomial(n);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

}  // namespace motzeta
