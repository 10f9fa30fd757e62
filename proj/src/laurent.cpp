#include "qca/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qca/error.hpp"

namespace qca {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly f;
  if (coeff != 0) f.terms_.emplace_back(exponent, coeff);
  return f;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly f;
  for (auto& [e, c] : terms) {
    if (!f.terms_.empty() && f.terms_.back().first == e) {
      f.terms_.back().second += c;
      if (f.terms_.back().second == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.emplace_back(e, std::move(c));
    }
  }
  return f;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

std::optional<int> LaurentPoly::as_v_power() const {
  if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
  return std::nullopt;
}

bool LaurentPoly::in_v_zv() const { return terms_.empty() || terms_.front().first >= 1; }

bool LaurentPoly::in_zv() const { return terms_.empty() || terms_.front().first >= 0; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f = *this;
  for (auto& t : f.terms_) t.first += k;
  return f;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : mpz_class(-b->second));
      ++b;
    } else {
      mpz_class c = a->second;
      if (sign > 0) c += b->second; else c -= b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& t : f.terms_) t.second = -t.second;
  return f;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_addmul(dense[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  LaurentPoly f;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) f.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
  }
  return f;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

std::string format_combination(const std::vector<std::pair<LaurentPoly, std::string>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, body] : terms) {
    if (c.is_zero()) continue;
    bool negative = false;
    std::string coeff;
    if (c.size() == 1) {
      const auto& [k, a] = c.terms()[0];
      negative = a < 0;
      mpz_class mag = abs(a);
      if (mag != 1) coeff = mag.get_str();
      if (k != 0) {
        if (!coeff.empty()) coeff += "*";
        coeff += (k == 1) ? std::string("v") : "v^" + std::to_string(k);
      }
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (!coeff.empty()) os << coeff << " ";
    os << body;
  }
  return first ? "0" : os.str();
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_++] == '-') ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("laurent polynomial '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  LaurentPoly::Term term(int sign) {
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'v') fail("expected 'v' after '*'");
      }
    }
    int exponent = 0;
    if (peek() == 'v') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        int esign = 1;
        if (peek() == '-' || peek() == '+') esign = (s_[pos_++] == '-') ? -1 : 1;
        std::string d = digits();
        if (d.empty()) fail("expected exponent");
        long e = std::stol(d);
        if (e > std::numeric_limits<int>::max()) fail("exponent out of range");
        exponent = esign * static_cast<int>(e);
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'v'");
    }
    return {exponent, sign * coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).run(); }

LaurentPoly bar(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) terms.emplace_back(-it->first, it->second);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly positive_part(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : f.terms())
    if (t.first >= 1) terms.push_back(t);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly substitute_power(const LaurentPoly& f, int k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [e, c] : f.terms()) terms.emplace_back(k * e, c);
  return LaurentPoly::from_terms(std::move(terms));
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (f.is_zero()) return LaurentPoly{};
  if (auto k = g.as_v_power()) return f.shifted(-*k);
  const int floor = f.min_exponent() - g.min_exponent();
  const auto& [gtop, gcoeff] = g.terms().back();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const auto& [rtop, rcoeff] = rem.terms().back();
    const int shift = rtop - gtop;
    if (shift < floor) return std::nullopt;
    if (!mpz_divisible_p(rcoeff.get_mpz_t(), gcoeff.get_mpz_t())) return std::nullopt;
    mpz_class q = rcoeff / gcoeff;
    rem -= LaurentPoly::monomial(q, shift) * g;
    quotient.emplace_back(shift, std::move(q));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly gaussian_binomial(int r, int s) {
  if (r < 0 || s < 0 || s > r) {
    throw std::invalid_argument("gaussian_binomial: need r >= s >= 0, got r=" + std::to_string(r) +
                                " s=" + std::to_string(s));
  }
  const LaurentPoly one(1);
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (int i = 0; i < s; ++i) {
    num *= LaurentPoly::v_power(r - i) - one;
    den *= LaurentPoly::v_power(s - i) - one;
  }
  auto q = divide_exact(num, den);
  if (!q) throw std::logic_error("gaussian_binomial: defining ratio left a remainder");
  return *q;
}

}  // namespace qca
