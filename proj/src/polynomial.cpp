#include "motzeta/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace motzeta {

namespace {

int degree_of(const Polynomial::Exponents& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

Polynomial::Exponents padded(const Polynomial::Exponents& e, int n) {
  Polynomial::Exponents out = e;
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

// Recursive-descent parser over the whitespace-free input.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : original_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Polynomial run() {
    if (s_.empty()) throw error("empty polynomial");
    Polynomial p = expr();
    if (pos_ != s_.size()) throw error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  ParseError error(const std::string& why) const {
    return ParseError("polynomial '" + std::string(original_) + "': " + why + " at offset " +
                      std::to_string(pos_));
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek('+') || peek('-')) {
      const bool minus = s_[pos_++] == '-';
      Polynomial t = term();
      if (minus) acc -= t;
      else acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) throw error("expected non-negative integer exponent");
      base = base.pow(static_cast<unsigned>(bounded(start, kMaxExponent, "exponent")));
    }
    return base;
  }

  static constexpr int kMaxExponent = 4096;
  static constexpr int kMaxVariable = 1024;

  // Digits from start to pos_, rejected above limit before conversion.
  int bounded(std::size_t start, int limit, const char* what) {
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 9 || std::stoi(digits) > limit)
      throw error(std::string(what) + " above " + std::to_string(limit));
    return std::stoi(digits);
  }

  Polynomial primary() {
    if (peek('(')) {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw error("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek('x')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) throw error("variable needs an index (x1, x2, ...)");
      const int index = bounded(start, kMaxVariable, "variable index");
      if (index < 1) throw error("variable indices start at 1");
      return Polynomial::variable(index);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw error("expected a number, variable or '('");
    return Polynomial::constant(Integer(s_.substr(start, pos_ - start)));
  }

  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::constant(const Integer& c, int nvars) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
  if (index < 1) throw DomainError("variable indices start at 1");
  Polynomial p(std::max(index, nvars));
  Exponents e(static_cast<std::size_t>(p.nvars_), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return degree_of(t.first) == d; });
}

Polynomial Polynomial::with_nvars(int n) const {
  if (n < nvars_) throw DomainError("with_nvars cannot drop variables");
  Polynomial out(n);
  for (const auto& [e, c] : terms_) out.terms_.emplace(padded(e, n), c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  const int n = std::max(nvars_, rhs.nvars_);
  if (n != nvars_) *this = with_nvars(n);
  for (const auto& [e, c] : rhs.terms_) add_term(padded(e, n), c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.nvars_, b.nvars_);
  Polynomial out(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e = padded(ea, n);
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.nvars_, b.nvars_);
  return a.with_nvars(n).terms_ == b.with_nvars(n).terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1, nvars_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 1) throw DomainError("variable indices start at 1");
  Polynomial out(nvars_);
  const auto i = static_cast<std::size_t>(index - 1);
  for (const auto& [e, c] : terms_) {
    if (i >= e.size() || e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& substitutes) const {
  if (static_cast<int>(substitutes.size()) < nvars_)
    throw DomainError("compose needs one substitute per variable");
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * substitutes[i].pow(static_cast<unsigned>(e[i]));
    out += term;
  }
  return out;
}

Integer Polynomial::evaluate(const std::vector<Integer>& point) const {
  if (static_cast<int>(point.size()) < nvars_) throw DomainError("evaluation point too short");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) v *= ipow(point[i], static_cast<unsigned long>(e[i]));
    total += v;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = degree_of(a.first), db = degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, coeff] : ordered) {
    Integer c = coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += c.get_str();
    else if (c == 1) out += mono;
    else out += c.get_str() + "*" + mono;
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).run(); }

PolySystem::PolySystem(int nvars, std::vector<Polynomial> polys) : nvars_(nvars) {
  if (polys.empty()) throw DomainError("a polynomial system needs at least one polynomial");
  for (auto& p : polys) {
    if (p.is_zero()) throw DomainError("polynomials in a system must be nonzero");
    if (p.nvars() > nvars)
      throw DomainError("polynomial uses x" + std::to_string(p.nvars()) + " but the ambient space has " +
                        std::to_string(nvars) + " variables");
    polys_.push_back(p.with_nvars(nvars));
    degrees_.push_back(p.total_degree());
    homogeneous_.push_back(p.is_homogeneous());
  }
}

PolySystem PolySystem::parse(std::string_view text, int nvars) {
  std::vector<Polynomial> polys;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      polys.push_back(Polynomial::parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  int used = 0;
  for (const auto& p : polys) used = std::max(used, p.nvars());
  if (nvars == 0) nvars = used;
  if (nvars < 1) throw DomainError("system has no variables; pass the ambient dimension");
  return PolySystem(nvars, std::move(polys));
}

bool PolySystem::all_homogeneous() const {
  return std::all_of(homogeneous_.begin(), homogeneous_.end(), [](bool h) { return h; });
}

std::string PolySystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (i) out += ", ";
    out += polys_[i].to_string();
  }
  return out;
}

std::vector<std::vector<int>> row_subsets(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    for (int i = next; i <= m; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Polynomial matrix_minor(int m, int r, const std::vector<int>& rows) {
  if (static_cast<int>(rows.size()) != r) throw DomainError("minor needs r rows");
  const int nvars = m * r;
  // Leibniz expansion over column permutations.
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cols[static_cast<std::size_t>(j)] = j;
  Polynomial det(nvars);
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (cols[static_cast<std::size_t>(a)] > cols[static_cast<std::size_t>(b)]) ++inversions;
    Polynomial term = Polynomial::constant(inversions % 2 ? -1 : 1, nvars);
    for (int a = 0; a < r; ++a) {
      const int row = rows[static_cast<std::size_t>(a)];
      const int col = cols[static_cast<std::size_t>(a)];
      term = term * Polynomial::variable((row - 1) * r + col + 1, nvars);
    }
    det += term;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return det;
}

std::vector<Polynomial> plucker_coordinates(int m, int r) {
  std::vector<Polynomial> out;
  for (const auto& rows : row_subsets(m, r)) out.push_back(matrix_minor(m, r, rows));
  return out;
}

std::vector<Polynomial> dual_plucker_coordinates(int m, int r) {
  std::vector<Polynomial> out;
  for (const auto& s : row_subsets(m, m - r)) {
    std::vector<int> complement;
    for (int i = 1; i <= m; ++i)
      if (std::find(s.begin(), s.end(), i) == s.end()) complement.push_back(i);
    std::vector<int> order = s;
    order.insert(order.end(), complement.begin(), complement.end());
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        if (order[a] > order[b]) ++inversions;
    Polynomial minor = matrix_minor(m, r, complement);
    out.push_back(inversions % 2 ? -minor : minor);
  }
  return out;
}

}  // namespace motzeta
