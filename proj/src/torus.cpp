#include "qca/torus.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "qca/error.hpp"

namespace qca {

namespace {

// Below this many term pairs the thread fan-out costs more than it saves.
constexpr std::size_t kParallelThreshold = 4096;

void accumulate(TorusElement::TermMap& acc, const Lattice& e, LaurentPoly c) {
  auto [it, inserted] = acc.try_emplace(e, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void merge_into(TorusElement::TermMap& acc, TorusElement::TermMap&& part) {
  for (auto& [e, c] : part) accumulate(acc, e, std::move(c));
}

}  // namespace

TorusElement TorusElement::monomial(FormPtr form, Lattice e, LaurentPoly coeff) {
  if (e.size() != static_cast<std::size_t>(form->dim())) throw std::invalid_argument("monomial: dimension mismatch");
  TorusElement x(std::move(form));
  if (!coeff.is_zero()) x.terms_.emplace(std::move(e), std::move(coeff));
  return x;
}

TorusElement TorusElement::one(FormPtr form) {
  const auto m = static_cast<std::size_t>(form->dim());
  return monomial(std::move(form), Lattice(m));
}

LaurentPoly TorusElement::coeff(const Lattice& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TorusElement::add_term(const Lattice& e, const LaurentPoly& c) {
  if (e.size() != dim()) throw std::invalid_argument("add_term: dimension mismatch");
  if (!c.is_zero()) accumulate(terms_, e, c);
}

void require_same_context(const TorusElement& a, const TorusElement& b) {
  if (a.form() != b.form() && !(*a.form() == *b.form()))
    throw ContextMismatch("torus elements belong to different quantum tori");
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same_context(*this, o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same_context(*this, o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement x = *this;
  for (auto& [e, c] : x.terms_) c = -c;
  return x;
}

TorusElement operator*(const LaurentPoly& c, const TorusElement& x) {
  TorusElement out(x.form_);
  if (c.is_zero()) return out;
  for (const auto& [e, d] : x.terms_) out.terms_.emplace(e, c * d);
  return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  if (a.form_ != b.form_ && !(*a.form_ == *b.form_)) return false;
  return a.terms_ == b.terms_;
}

std::string TorusElement::to_string() const {
  std::vector<std::pair<LaurentPoly, std::string>> parts;
  for (const auto& [e, c] : terms_) parts.emplace_back(c, "X^" + e.to_string());
  return format_combination(parts);
}

std::ostream& operator<<(std::ostream& os, const TorusElement& x) { return os << x.to_string(); }

TorusElement torus_mul_serial(const TorusElement& x, const TorusElement& y) {
  require_same_context(x, y);
  const SkewForm& form = *x.form();
  TorusElement::TermMap acc;
  for (const auto& [e, c] : x.terms()) {
    const auto row = form.row_image(e);
    for (const auto& [f, d] : y.terms()) {
      const auto twist = dot(row, f);
      accumulate(acc, e + f, (c * d).shifted(static_cast<int>(twist)));
    }
  }
  TorusElement out(x.form());
  for (auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

TorusElement torus_mul_parallel(const TorusElement& x, const TorusElement& y) {
  require_same_context(x, y);
  const SkewForm& form = *x.form();
  const std::vector<std::pair<Lattice, LaurentPoly>> left(x.terms().begin(), x.terms().end());
  const long count = static_cast<long>(left.size());
  TorusElement::TermMap acc;

#pragma omp parallel
  {
    TorusElement::TermMap local;
#pragma omp for schedule(static)
    for (long i = 0; i < count; ++i) {
      const auto& [e, c] = left[static_cast<std::size_t>(i)];
      const auto row = form.row_image(e);
      for (const auto& [f, d] : y.terms()) {
        accumulate(local, e + f, (c * d).shifted(static_cast<int>(dot(row, f))));
      }
    }
#pragma omp critical(qca_torus_merge)
    merge_into(acc, std::move(local));
  }

  TorusElement out(x.form());
  for (auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

TorusElement torus_mul(const TorusElement& x, const TorusElement& y) {
  if (x.size() * y.size() >= kParallelThreshold && omp_get_max_threads() > 1 && !omp_in_parallel())
    return torus_mul_parallel(x, y);
  return torus_mul_serial(x, y);
}

TorusElement power(const TorusElement& x, int p) {
  if (p < 0) throw std::invalid_argument("power: negative exponent");
  TorusElement out = TorusElement::one(x.form());
  for (int i = 0; i < p; ++i) out = out * x;
  return out;
}

TorusElement bar(const TorusElement& x) {
  TorusElement out(x.form());
  for (const auto& [e, c] : x.terms()) out.add_term(e, bar(c));
  return out;
}

std::pair<Lattice, LaurentPoly> leading_monomial(const TorusElement& x, const WeightOrder& ord) {
  if (x.is_zero()) throw std::domain_error("leading_monomial of zero element");
  auto best = x.terms().begin();
  for (auto it = std::next(best); it != x.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return *best;
}

namespace {

Lattice trailing_exponent(const TorusElement& x, const WeightOrder& ord) {
  auto low = x.terms().begin();
  for (auto it = std::next(low); it != x.terms().end(); ++it)
    if (ord.less(it->first, low->first)) low = it;
  return low->first;
}

}  // namespace

TorusElement torus_divide(const TorusElement& p, const TorusElement& q, Side side, const WeightOrder& ord,
                          long cap) {
  require_same_context(p, q);
  if (q.is_zero()) throw std::domain_error("torus_divide: division by zero");
  TorusElement quotient(p.form());
  if (p.is_zero()) return quotient;

  const SkewForm& form = *p.form();
  const auto [h, lead_q] = leading_monomial(q, ord);
  // The quotient's smallest term times the divisor's smallest term is the
  // dividend's smallest term, so no quotient term can sit below this floor.
  const Lattice floor = trailing_exponent(p, ord) - trailing_exponent(q, ord);

  TorusElement rem = p;
  for (long step = 0; !rem.is_zero(); ++step) {
    if (step >= cap) throw NotDivisible("not divisible within cap (" + std::to_string(cap) + " steps)");
    const auto [g, c] = leading_monomial(rem, ord);
    const Lattice u = g - h;
    if (ord.less(u, floor)) throw NotDivisible("not divisible: irreducible remainder " + rem.to_string());
    const auto twist = side == Side::Right ? form(u, h) : form(h, u);
    auto coeff = divide_exact(c, lead_q.shifted(static_cast<int>(twist)));
    if (!coeff) throw NotDivisible("not divisible: leading coefficient " + c.to_string());
    const auto term = TorusElement::monomial(p.form(), u, *coeff);
    rem -= side == Side::Right ? term * q : q * term;
    quotient += term;
  }
  return quotient;
}

bool verify_quasi_commute(const TorusElement& x, const TorusElement& y, int t) {
  return x * y == LaurentPoly::v_power(2 * t) * (y * x);
}

}  // namespace qca
