#include "colorlink/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "colorlink/determinant.hpp"

namespace colorlink {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : e) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ULL;
    return h;
  }
};

Exponents padded(const Exponents& e, int nvars) {
  Exponents out = e;
  out.resize(static_cast<std::size_t>(nvars), 0);
  return out;
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

std::string monomial_text(const Exponents& e, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty() && !latex) out += '*';
    if (latex) {
      out += "t_{" + std::to_string(i) + "}";
      if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
    } else {
      out += "t" + std::to_string(i);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

std::string render(const LaurentPoly::TermMap& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(e, latex);
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str();
      if (!latex) out += '*';
      out += mono;
    }
  }
  return out;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  // one pass: degree difference plus the first differing coordinate
  const std::size_t common = std::min(a.size(), b.size());
  long diff = 0;
  int first = 0;
  for (std::size_t i = 0; i < common; ++i) {
    diff += a[i] - b[i];
    if (first == 0 && a[i] != b[i]) first = a[i] > b[i] ? 1 : -1;
  }
  for (std::size_t i = common; i < a.size(); ++i) {
    diff += a[i];
    if (first == 0 && a[i] != 0) first = a[i] > 0 ? 1 : -1;
  }
  for (std::size_t i = common; i < b.size(); ++i) {
    diff -= b[i];
    if (first == 0 && b[i] != 0) first = b[i] < 0 ? 1 : -1;
  }
  if (diff != 0) return diff > 0;
  return first > 0;
}

LaurentPoly::LaurentPoly(int constant) {
  if (constant != 0) terms_.emplace(Exponents{}, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant, int nvars) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), constant);
}

LaurentPoly LaurentPoly::variable(int index, int nvars, int power) {
  Exponents e(static_cast<std::size_t>(std::max(nvars, index + 1)), 0);
  e[static_cast<std::size_t>(index)] = power;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, const BigInt& coefficient) {
  LaurentPoly p;
  p.nvars_ = static_cast<int>(exponents.size());
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

void LaurentPoly::widen_in_place(int nvars) {
  if (nvars <= nvars_) return;
  TermMap widened;
  for (auto& [e, c] : terms_) widened.emplace(padded(e, nvars), std::move(c));
  terms_ = std::move(widened);
  nvars_ = nvars;
}

LaurentPoly LaurentPoly::widened(int nvars) const {
  LaurentPoly p = *this;
  p.widen_in_place(nvars);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Exponents LaurentPoly::min_exponents() const {
  Exponents out(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = first ? e[i] : std::min(out[i], e[i]);
    first = false;
  }
  return out;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents out(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = first ? e[i] : std::max(out[i], e[i]);
    first = false;
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  const int width = std::max(nvars_, static_cast<int>(shift.size()));
  LaurentPoly out;
  out.nvars_ = width;
  const Exponents s = padded(shift, width);
  for (const auto& [e, c] : terms_) {
    Exponents moved = padded(e, width);
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += s[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(moved), c);  // translation keeps the order
  }
  return out;
}

LaurentPoly LaurentPoly::inverted() const { return power_substituted(-1); }

LaurentPoly LaurentPoly::power_substituted(int factor) const {
  LaurentPoly out;
  out.nvars_ = nvars_;
  for (const auto& [e, c] : terms_) {
    Exponents scaled = e;
    for (int& x : scaled) x *= factor;
    out.add_term(scaled, c);
  }
  return out;
}

std::complex<double> LaurentPoly::evaluate(const std::vector<std::complex<double>>& point) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.convert_to<double>();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluation point has too few coordinates");
      term *= std::pow(point[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  const int width = std::max(nvars_, other.nvars_);
  widen_in_place(width);
  for (const auto& [e, c] : other.terms_) {
    if (static_cast<int>(e.size()) == width) add_term(e, c);
    else add_term(padded(e, width), c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  const int width = std::max(nvars_, other.nvars_);
  widen_in_place(width);
  for (const auto& [e, c] : other.terms_) {
    if (static_cast<int>(e.size()) == width) add_term(e, -c);
    else add_term(padded(e, width), -c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.nvars_ = std::max(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() * b.terms_.size() < 16) {
    const auto width = static_cast<std::size_t>(out.nvars_);
    Exponents e(width);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < width; ++i) e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
        out.add_term(e, ca * cb);
      }
    return out;
  }

  // hash the partial products, then sort the distinct monomials once
  const auto width = static_cast<std::size_t>(out.nvars_);
  std::unordered_map<Exponents, BigInt, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponents e(width);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
      BigInt product = ca * cb;
      auto [it, inserted] = acc.try_emplace(e, std::move(product));
      if (!inserted) it->second += product;
    }
  std::vector<std::pair<Exponents, BigInt>> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (c != 0) terms.emplace_back(key, std::move(c));
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return GrlexGreater{}(x.first, y.first); });
  for (auto& [key, c] : terms) out.terms_.emplace_hint(out.terms_.end(), std::move(key), std::move(c));
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  const int width = std::max(a.nvars_, b.nvars_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->second != ib->second) return false;
    if (padded(ia->first, width) != padded(ib->first, width)) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const { return render(terms_, false); }
std::string LaurentPoly::to_latex() const { return render(terms_, true); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly sum(BigInt(0), nvars_);
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip();
    }
    while (true) {
      LaurentPoly term = parse_term();
      sum += negative ? -term : term;
      skip();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      skip();
    }
    return sum;
  }

 private:
  LaurentPoly parse_term() {
    LaurentPoly product(BigInt(1), nvars_);
    while (true) {
      skip();
      product *= parse_factor();
      skip();
      if (peek() != '*') return product;
      get();
    }
  }

  LaurentPoly parse_factor() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) return LaurentPoly(BigInt(digits()), nvars_);
    if (peek() != 't') fail("expected coefficient or variable");
    get();
    const std::string index = digits();
    const int var = std::stoi(index);
    if (var >= nvars_) fail("variable index out of range");
    int power = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      const bool paren = peek() == '(';
      if (paren) get();
      bool negative = false;
      if (peek() == '-') {
        get();
        negative = true;
      }
      power = std::stoi(digits());
      if (negative) power = -power;
      if (paren) {
        if (peek() != ')') fail("expected ')'");
        get();
      }
    }
    return LaurentPoly::variable(var, nvars_, power);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const int width = std::max(dividend.nvars(), divisor.nvars());
  if (dividend.is_zero()) return LaurentPoly(BigInt(0), width);

  // Reduce to ordinary polynomials: the divisor is made free of monomial
  // factors, so divisibility in the Laurent ring matches the polynomial ring.
  const LaurentPoly num = dividend.widened(width);
  const LaurentPoly den = divisor.widened(width);
  Exponents num_shift = num.min_exponents();
  Exponents den_shift = den.min_exponents();
  for (int& x : num_shift) x = -x;
  for (int& x : den_shift) x = -x;
  LaurentPoly remainder = num.shifted(num_shift);
  const LaurentPoly q = den.shifted(den_shift);

  const auto& [lead_exp, lead_coef] = *q.terms().begin();
  LaurentPoly quotient(BigInt(0), width);
  while (!remainder.is_zero()) {
    const auto& [r_exp, r_coef] = *remainder.terms().begin();
    if (!divides(lead_exp, r_exp) || r_coef % lead_coef != 0)
      throw NotDivisible(dividend.to_string() + " is not divisible by " + divisor.to_string());
    Exponents e(r_exp.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = r_exp[i] - lead_exp[i];
    const LaurentPoly step = LaurentPoly::monomial(std::move(e), r_coef / lead_coef);
    quotient += step;
    remainder -= step * q;
  }
  Exponents back(static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = den_shift[i] - num_shift[i];
  return quotient.shifted(back);
}

long long exact_div(long long dividend, long long divisor) {
  if (divisor == 0) throw std::invalid_argument("division by zero");
  if (dividend % divisor != 0) throw NotDivisible("integer division is not exact");
  return dividend / divisor;
}

LaurentPoly twist_factor(int index, int nvars) {
  return LaurentPoly::variable(index, nvars) - LaurentPoly::variable(index, nvars, -1);
}

PotentialFunction reduce_potential(LaurentPoly numerator, std::vector<int> denominator) {
  const int width = std::max(numerator.nvars(), static_cast<int>(denominator.size()));
  denominator.resize(static_cast<std::size_t>(width), 0);
  if (numerator.is_zero()) return {LaurentPoly(BigInt(0), width), std::vector<int>(denominator.size(), 0)};
  numerator = numerator.widened(width);
  for (std::size_t i = 0; i < denominator.size(); ++i) {
    if (denominator[i] < 0) throw std::invalid_argument("negative denominator exponent");
    const LaurentPoly factor = twist_factor(static_cast<int>(i), width);
    while (denominator[i] > 0) {
      try {
        numerator = exact_div(numerator, factor);
      } catch (const NotDivisible&) {
        break;
      }
      --denominator[i];
    }
  }
  return {std::move(numerator), std::move(denominator)};
}

std::string PotentialFunction::to_string() const {
  std::string den;
  for (std::size_t i = 0; i < denominator.size(); ++i) {
    if (denominator[i] == 0) continue;
    if (!den.empty()) den += "*";
    den += "(t" + std::to_string(i) + " - t" + std::to_string(i) + "^-1)";
    if (denominator[i] != 1) den += "^" + std::to_string(denominator[i]);
  }
  if (den.empty()) return numerator.to_string();
  return "(" + numerator.to_string() + ")/(" + den + ")";
}

std::string PotentialFunction::to_latex() const {
  std::string den;
  for (std::size_t i = 0; i < denominator.size(); ++i) {
    if (denominator[i] == 0) continue;
    den += "(t_{" + std::to_string(i) + "} - t_{" + std::to_string(i) + "}^{-1})";
    if (denominator[i] != 1) den += "^{" + std::to_string(denominator[i]) + "}";
  }
  if (den.empty()) return numerator.to_latex();
  return "\\frac{" + numerator.to_latex() + "}{" + den + "}";
}

LaurentPoly bareiss_det(const PolyMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = matrix.rows();
  int width = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) width = std::max(width, matrix(i, j).nvars());

  PolyMatrix scaled(n, n);
  Exponents restore(static_cast<std::size_t>(width), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Exponents row_min(static_cast<std::size_t>(width), 0);
    bool any = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      const LaurentPoly entry = matrix(i, j).widened(width);
      if (entry.is_zero()) continue;
      const Exponents m = entry.min_exponents();
      for (std::size_t v = 0; v < row_min.size(); ++v) row_min[v] = any ? std::min(row_min[v], m[v]) : m[v];
      any = true;
    }
    if (!any) return LaurentPoly(BigInt(0), width);
    Exponents shift = row_min;
    for (int& x : shift) x = -x;
    for (Eigen::Index j = 0; j < n; ++j) scaled(i, j) = matrix(i, j).widened(width).shifted(shift);
    for (std::size_t v = 0; v < restore.size(); ++v) restore[v] += row_min[v];
  }
  const LaurentPoly det = fraction_free_det(scaled);
  return det.is_zero() ? LaurentPoly(BigInt(0), width) : det.shifted(restore);
}

}  // namespace colorlink
