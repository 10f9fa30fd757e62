#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qca {

/// Exact element of Z[v, v^-1].
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal. Coefficients are
/// GMP integers.
class LaurentPoly {
public:
  using Term = std::pair<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const mpz_class& coeff, int exponent);
  static LaurentPoly v_power(int exponent) { return monomial(1, exponent); }
  /// Accepts unsorted terms with repeats and zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const;
  int max_exponent() const;
  mpz_class coeff(int exponent) const;

  /// Returns k when the polynomial is exactly v^k.
  std::optional<int> as_v_power() const;
  /// True iff every exponent is >= 1.
  bool in_v_zv() const;
  /// True iff every exponent is >= 0.
  bool in_zv() const;

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  void add_scaled(const LaurentPoly& other, int sign);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// f(v) -> f(v^-1).
LaurentPoly bar(const LaurentPoly& f);

/// Sub-sum of terms with exponent >= 1. When f + bar(f) == 0 this is the
/// unique p in vZ[v] with p - bar(p) == f.
LaurentPoly positive_part(const LaurentPoly& f);

/// Replaces every exponent e by k*e (the substitution t := v^k).
LaurentPoly substitute_power(const LaurentPoly& f, int k);

/// Exact quotient f / g in Z[v, v^-1], or nullopt when g does not divide f.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Gaussian binomial [r choose s]_t as a polynomial in t, computed from the
/// defining ratio by exact division. Throws std::invalid_argument if s > r
/// or either is negative.
LaurentPoly gaussian_binomial(int r, int s);

/// Renders sum c_i * body_i as "v^4 X^(1,1) - 2 X^(0,0) + (v^-1 + v) X^(1,0)".
/// Monomial coefficients are inlined, longer ones parenthesized; "0" when empty.
std::string format_combination(const std::vector<std::pair<LaurentPoly, std::string>>& terms);

}  // namespace qca
