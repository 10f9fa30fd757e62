#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "qca/laurent.hpp"
#include "qca/lattice.hpp"

namespace qca {

using FormPtr = std::shared_ptr<const SkewForm>;

/// Element of the based quantum torus T(Lambda): a finite sum of
/// coefficient * X^e with X^e X^f = v^{Lambda(e,f)} X^{e+f}.
class TorusElement {
public:
  using TermMap = std::map<Lattice, LaurentPoly>;

  explicit TorusElement(FormPtr form) : form_(std::move(form)) {}

  static TorusElement monomial(FormPtr form, Lattice e, LaurentPoly coeff = LaurentPoly(1));
  static TorusElement one(FormPtr form);

  const FormPtr& form() const { return form_; }
  std::size_t dim() const { return static_cast<std::size_t>(form_->dim()); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Lattice& e) const;

  void add_term(const Lattice& e, const LaurentPoly& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement operator-() const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }

  /// Scalar multiplication; the coefficient ring is central.
  friend TorusElement operator*(const LaurentPoly& c, const TorusElement& x);

  /// Equal iff same form (by value) and identical term sets.
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  /// "v^4 X^(1,1) + X^(-1,1) + (v^-1 - v) X^(0,0)"; terms in lexicographic exponent order.
  std::string to_string() const;

private:
  FormPtr form_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const TorusElement& x);

/// Throws ContextMismatch unless both elements live over the same form.
void require_same_context(const TorusElement& a, const TorusElement& b);

/// Twisted product. Dispatches to the OpenMP kernel for large operands.
TorusElement torus_mul(const TorusElement& x, const TorusElement& y);
/// Single-threaded reference product.
TorusElement torus_mul_serial(const TorusElement& x, const TorusElement& y);
/// OpenMP product: terms of x are split across threads, partial sums merged.
TorusElement torus_mul_parallel(const TorusElement& x, const TorusElement& y);

inline TorusElement operator*(const TorusElement& x, const TorusElement& y) { return torus_mul(x, y); }

/// x^p for p >= 0.
TorusElement power(const TorusElement& x, int p);

/// Coefficients conjugated v -> v^-1, monomials fixed. Anti-multiplicative.
TorusElement bar(const TorusElement& x);

/// Term that is largest under the order. Throws std::domain_error on zero.
std::pair<Lattice, LaurentPoly> leading_monomial(const TorusElement& x, const WeightOrder& ord);

enum class Side { Left, Right };

inline constexpr long kDefaultDivisionCap = 1'000'000;

/// Exact quotient r with r*q == p (Side::Right) or q*r == p (Side::Left), by
/// repeated cancellation of leading terms. Throws NotDivisible when the cap
/// is exhausted or a remainder provably cannot be cancelled.
TorusElement torus_divide(const TorusElement& p, const TorusElement& q, Side side, const WeightOrder& ord,
                          long cap = kDefaultDivisionCap);

/// True iff x*y == v^{2t} y*x.
bool verify_quasi_commute(const TorusElement& x, const TorusElement& y, int t);

}  // namespace qca
