#include "qca/mutation.hpp"

#include <stdexcept>

#include "qca/error.hpp"

namespace qca {

namespace {

QuantumSeed mutated_seed(const QuantumSeed& s, int ell) {
  QuantumSeed t = seed_mutate(s, ell);
  t.order = {ell};
  for (int k : s.order)
    if (k != ell) t.order.push_back(k);
  return t;
}

}  // namespace

MutationPair::MutationPair(QuantumSeed s) {
  initial_ = std::make_shared<const EBasis>(std::move(s));
  ell_ = initial_->seed().order.back();
  mutated_ = std::make_shared<const EBasis>(mutated_seed(initial_->seed(), ell_));
}

TorusElement MutationPair::mutated_monomial(const Lattice& g, const LaurentPoly& c) const {
  if (g.size() != static_cast<std::size_t>(initial_->m())) throw std::invalid_argument("mutated_monomial: wrong dimension");
  if (g[ell_] < 0) throw Error("X'_" + std::to_string(ell_ + 1) + " is not invertible in the torus");
  const int shift = normal_order_shift(*mutated_->form(), g);
  const auto& form = initial_->form();
  // Ordered product X_1^{g_1} ... (X'_l)^{g_l} ... X_m^{g_m}, with the
  // ordinary generators on each side of l merged into one monomial.
  Lattice before(g.size());
  Lattice after(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) (static_cast<int>(i) < ell_ ? before : after)[i] = g[i];
  after[ell_] = 0;
  const auto left = TorusElement::monomial(form, before, LaurentPoly::v_power(shift - normal_order_shift(*form, before)) * c);
  const auto right = TorusElement::monomial(form, after, LaurentPoly::v_power(-normal_order_shift(*form, after)));
  return left * initial_->x_prime_power(ell_, g[ell_]) * right;
}

TorusElement MutationPair::transport(const TorusElement& y) const {
  if (!(*y.form() == *mutated_->form())) throw ContextMismatch("transport: element is not in the mutated torus");
  TorusElement out(initial_->form());
  for (const auto& [g, c] : y.terms()) out += mutated_monomial(g, c);
  return out;
}

TorusElement MutationPair::x_double_prime(int k) const {
  if (k == ell_) return initial_->monomial(Lattice::unit(static_cast<std::size_t>(initial_->m()), ell_));
  return transport(mutated_->x_prime(k));
}

Lattice MutationPair::phi_minus_e(int k) const {
  if (k < 0 || k >= initial_->n() || k == ell_) throw std::out_of_range("phi_minus_e: index must differ from the mutation index");
  const auto n = static_cast<std::size_t>(initial_->n());
  const Lattice bk = initial_->seed().column(k);
  const Lattice bk_new = mutated_->seed().column(k);
  Lattice out = plus_part(-bk_new).tail(n) - plus_part(-bk).tail(n);
  out[k] -= 1;
  out[ell_] -= bk[ell_];
  return out;
}

TorusElement MutationPair::x_double_prime_formula(int k) const {
  const int b = initial_->seed().b(ell_, k);
  const int d = initial_->seed().d[ell_];
  TorusElement x = initial_->element(phi_minus_e(k));
  const Lattice bl = initial_->seed().column(ell_);
  const Lattice base = e_double_prime(k);
  for (int s = 1; s <= b; ++s) {
    const LaurentPoly coeff = substitute_power(gaussian_binomial(b, s), 2 * d).shifted(s * s * d);
    x -= coeff * initial_->element(base - s * bl);
  }
  return x;
}

TorusElement MutationPair::x_double_prime_power(int k, int p) const {
  {
    std::lock_guard lock(mu_);
    auto it = powers_.find({k, p});
    if (it != powers_.end()) return it->second;
  }
  TorusElement out = p == 0 ? TorusElement::one(initial_->form()) : x_double_prime_power(k, p - 1) * x_double_prime(k);
  std::lock_guard lock(mu_);
  return powers_.try_emplace({k, p}, std::move(out)).first->second;
}

TorusElement MutationPair::eprime_element(const Lattice& a) const {
  {
    std::lock_guard lock(mu_);
    auto it = elements_.find(a);
    if (it != elements_.end()) return it->second;
  }
  const auto n = static_cast<std::size_t>(initial_->n());
  TorusElement x = mutated_monomial(a.tail(n) + plus_part(a.head(n)), LaurentPoly::v_power(mutated_->nu(a)));
  for (int k : mutated_->seed().order)
    if (a[k] < 0) x = x * x_double_prime_power(k, -a[k]);
  std::lock_guard lock(mu_);
  return elements_.try_emplace(a, std::move(x)).first->second;
}

CConditions check_c_conditions(const MutationPair& pair, const Lattice& a) {
  CConditions out;
  out.expansion = pair.initial().expand(pair.eprime_element(a));
  int units = 0;
  bool rest_ok = true;
  for (const auto& [key, c] : out.expansion) {
    if (c.is_one()) {
      ++units;
      out.unit = key;
    } else if (!c.in_v_zv()) {
      rest_ok = false;
    }
  }
  if (units != 1) out.unit.reset();
  out.ok = units == 1 && rest_ok;
  return out;
}

}  // namespace qca
