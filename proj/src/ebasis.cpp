#include "qca/ebasis.hpp"

#include <stdexcept>

#include "qca/error.hpp"

namespace qca {

std::string to_string(const EExpansion& x) {
  std::vector<std::pair<LaurentPoly, std::string>> parts;
  for (const auto& [a, c] : x) parts.emplace_back(c, "E" + a.to_string());
  return format_combination(parts);
}

EBasis::EBasis(QuantumSeed seed) : seed_(std::move(seed)) {
  const auto rep = seed_validate(seed_);
  if (!rep.valid) throw Error("invalid seed: " + rep.violations.front());
  if (!rep.order_compatible) throw Error("seed order is not compatible with B");
  form_ = seed_.form();
  order_ = seed_weight_order(seed_);
  for (int k = 0; k < n(); ++k) {
    const auto wb = order_.weight(seed_.column(k));
    if (wb <= 0) throw Error("weight fails w.b_" + std::to_string(k + 1) + " > 0");
  }
  for (int k = 0; k < n(); ++k) {
    Lattice e = plus_part(seed_.column(k));
    e[k] -= 1;
    e_prime_.push_back(e);
  }
}

Lattice EBasis::e_prime(int k) const {
  if (k < 0 || k >= n()) throw std::out_of_range("e_prime: index out of range");
  return e_prime_[k];
}

TorusElement EBasis::monomial(const Lattice& e, const LaurentPoly& c) const { return TorusElement::monomial(form_, e, c); }

TorusElement EBasis::x_prime(int k) const {
  const Lattice e = e_prime(k);
  return monomial(e) + monomial(e - seed_.column(k));
}

TorusElement EBasis::x_prime_power(int k, int p) const {
  {
    std::lock_guard lock(mu_);
    auto it = powers_.find({k, p});
    if (it != powers_.end()) return it->second;
  }
  TorusElement out = p == 0 ? TorusElement::one(form_) : x_prime_power(k, p - 1) * x_prime(k);
  std::lock_guard lock(mu_);
  return powers_.try_emplace({k, p}, std::move(out)).first->second;
}

std::vector<Lattice> EBasis::lead_factors(const Lattice& a) const {
  if (a.size() != static_cast<std::size_t>(m())) throw std::invalid_argument("label has wrong dimension");
  std::vector<Lattice> f;
  f.push_back(a.tail(n()) + plus_part(a.head(n())));
  for (int k : seed_.order)
    for (int i = 0; i < -a[k]; ++i) f.push_back(e_prime_[k]);
  return f;
}

Lattice EBasis::lead(const Lattice& a) const {
  Lattice t(static_cast<std::size_t>(m()));
  for (const auto& f : lead_factors(a)) t += f;
  return t;
}

int EBasis::nu(const Lattice& a) const {
  const auto f = lead_factors(a);
  std::int64_t sigma = 0;
  Lattice prefix = f.front();
  for (std::size_t j = 1; j < f.size(); ++j) {
    sigma += (*form_)(prefix, f[j]);
    prefix += f[j];
  }
  return static_cast<int>(-sigma);
}

Lattice EBasis::lead_inverse(const Lattice& t) const {
  if (t.size() != static_cast<std::size_t>(m())) throw std::invalid_argument("lead_inverse: wrong dimension");
  Lattice a(static_cast<std::size_t>(m()));
  std::vector<int> q(static_cast<std::size_t>(n()), 0);
  // Row j of lead(a) only sees q_k for k before j, since [b_jk]_+ = 0 otherwise.
  for (int j : seed_.order) {
    int x = t[j];
    for (int k = 0; k < n(); ++k)
      if (k != j) x -= q[k] * std::max(seed_.b(j, k), 0);
    a[j] = x;
    q[j] = std::max(-x, 0);
  }
  for (int i = n(); i < m(); ++i) {
    int x = t[i];
    for (int k = 0; k < n(); ++k) x -= q[k] * std::max(seed_.b(i, k), 0);
    a[i] = x;
  }
  return a;
}

TorusElement EBasis::standard_monomial(const Lattice& a) const {
  TorusElement x = monomial(a.tail(n()) + plus_part(a.head(n())));
  for (int k : seed_.order)
    if (a[k] < 0) x = x * x_prime_power(k, -a[k]);
  return x;
}

TorusElement EBasis::element(const Lattice& a) const {
  {
    std::lock_guard lock(mu_);
    auto it = elements_.find(a);
    if (it != elements_.end()) return it->second;
  }
  TorusElement x = LaurentPoly::v_power(nu(a)) * standard_monomial(a);
  std::lock_guard lock(mu_);
  return elements_.try_emplace(a, std::move(x)).first->second;
}

EExpansion EBasis::expand(const TorusElement& x, long cap) const {
  if (!(*x.form() == *form_)) throw ContextMismatch("expand: element is not in this seed's torus");
  EExpansion out;
  TorusElement rem = x;
  for (long step = 0; !rem.is_zero(); ++step) {
    if (step >= cap) throw NotDivisible("E-expansion did not terminate within cap (" + std::to_string(cap) + " steps)");
    const auto [g, c] = leading_monomial(rem, order_);
    const Lattice a = lead_inverse(g);
    rem -= c * element(a);
    auto [it, inserted] = out.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

TorusElement EBasis::assemble(const EExpansion& coeffs) const {
  TorusElement x(form_);
  for (const auto& [a, c] : coeffs) x += c * element(a);
  return x;
}

EExpansion EBasis::r_row(const Lattice& a) const {
  {
    std::lock_guard lock(mu_);
    auto it = r_rows_.find(a);
    if (it != r_rows_.end()) return it->second;
  }
  EExpansion row = expand(bar(element(a)));
  auto self = row.find(a);
  if (self == row.end() || !self->second.is_one())
    throw Error("bar(E" + a.to_string() + ") does not contain E" + a.to_string() + " with coefficient 1");
  row.erase(self);
  std::lock_guard lock(mu_);
  return r_rows_.try_emplace(a, std::move(row)).first->second;
}

int normal_order_shift(const SkewForm& form, const Lattice& g) {
  std::int64_t s = 0;
  const int m = form.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) s += static_cast<std::int64_t>(g[i]) * g[j] * form.matrix()(i, j);
  return static_cast<int>(-s);
}

}  // namespace qca
