#include "qca/worked/kronecker.hpp"

#include <stdexcept>

namespace qca {

QuantumSeed a11_seed() {
  QuantumSeed s;
  s.m = 2;
  s.n = 2;
  s.btilde = IntMatrix::from_rows({{0, -2}, {2, 0}});
  s.lambda = IntMatrix::from_rows({{0, -1}, {1, 0}});
  s.d = {2, 2};
  s.order = {0, 1};
  return s;
}

Kronecker::Kronecker(int horizon)
    : horizon_(horizon), basis_(std::make_shared<const EBasis>(a11_seed())), table_(basis_) {
  vars_.emplace(1, basis_->monomial(Lattice{1, 0}));
  vars_.emplace(2, basis_->monomial(Lattice{0, 1}));
}

TorusElement Kronecker::cluster_var(int m) {
  if (m < 1 - horizon_ || m > 2 + horizon_)
    throw std::out_of_range("cluster variable X_" + std::to_string(m) + " is beyond the horizon " +
                            std::to_string(horizon_));
  std::lock_guard lock(mu_);
  if (auto it = vars_.find(m); it != vars_.end()) return it->second;
  const auto& ord = basis_->weight_order();
  const TorusElement one = TorusElement::one(basis_->form());
  const LaurentPoly v2 = LaurentPoly::v_power(2);
  // X_{k+1} X_{k-1} = v^2 X_k^2 + 1
  if (m > 2) {
    for (int k = vars_.rbegin()->first; k < m; ++k) {
      const TorusElement& x = vars_.at(k);
      vars_.emplace(k + 1, torus_divide(v2 * (x * x) + one, vars_.at(k - 1), Side::Right, ord));
    }
  } else {
    for (int k = vars_.begin()->first; k > m; --k) {
      const TorusElement& x = vars_.at(k);
      vars_.emplace(k - 1, torus_divide(v2 * (x * x) + one, vars_.at(k + 1), Side::Left, ord));
    }
  }
  return vars_.at(m);
}

TorusElement Kronecker::x_delta() {
  return LaurentPoly::v_power(1) * (cluster_var(3) * cluster_var(0)) -
         LaurentPoly::v_power(3) * (cluster_var(2) * cluster_var(1));
}

TorusElement Kronecker::chebyshev(int r) {
  if (r < -1) throw std::invalid_argument("chebyshev: r must be >= -1");
  if (r == -1) return TorusElement(basis_->form());
  if (r == 0) return TorusElement::one(basis_->form());
  {
    std::lock_guard lock(mu_);
    if (auto it = cheb_.find(r); it != cheb_.end()) return it->second;
  }
  TorusElement s = x_delta() * chebyshev(r - 1) - chebyshev(r - 2);
  std::lock_guard lock(mu_);
  cheb_.emplace(r, s);
  return s;
}

Lattice Kronecker::alpha(int m) {
  if (m <= 1) return Lattice{m, m - 1};
  return Lattice{2 - m, 3 - m};
}

namespace {

TorusElement v_times(int k, const TorusElement& x) { return LaurentPoly::v_power(k) * x; }

std::string label(const Lattice& a) { return "a=" + a.to_string(); }

}  // namespace

Report verify_kronecker_base(Kronecker& k) {
  Report rep;
  const Lattice a{-1, -1};
  const TableRow row = k.table().row(a);
  const EExpansion expected{{Lattice{1, 1}, -LaurentPoly::v_power(4)}};
  EExpansion full = row.p;
  full.emplace(a, LaurentPoly(1));
  rep.record("C(-1,-1) = E(-1,-1) - v^4 E(1,1)", row.p == expected, "got C = " + to_string(full));
  rep.record("C(-1,-1) = X_delta", row.c == k.x_delta(), "C = " + row.c.to_string());
  return rep;
}

Report verify_chebyshev_basis(Kronecker& k, int rmax) {
  Report rep;
  for (int r = -1; r <= rmax; ++r) {
    const TorusElement s = k.chebyshev(r);
    const TorusElement product = v_times(r, k.cluster_var(r + 2) * k.cluster_var(0)) -
                                 v_times(r + 2, k.cluster_var(r + 1) * k.cluster_var(1));
    rep.record("S_r = v^r X_{r+2} X_0 - v^{r+2} X_{r+1} X_1", s == product, "r=" + std::to_string(r));
    rep.record("S_r bar-invariant", bar(s) == s, "r=" + std::to_string(r));
  }
  for (int r = 1; r <= rmax; ++r) {
    const TorusElement c = k.table().compute_C(Lattice{-r, -r});
    rep.record("C(-r,-r) = S_r(X_delta)", c == k.chebyshev(r), "r=" + std::to_string(r));
  }
  return rep;
}

Report verify_cluster_labels(Kronecker& k, int m_lo, int m_hi, int a_max) {
  Report rep;
  for (int m = m_lo; m <= m_hi; ++m) {
    const TorusElement xm = k.cluster_var(m);
    const TorusElement xm1 = k.cluster_var(m + 1);
    for (int a1 = 0; a1 <= a_max; ++a1) {
      for (int a2 = 0; a2 <= a_max; ++a2) {
        const Lattice a = a1 * Kronecker::alpha(m) + a2 * Kronecker::alpha(m + 1);
        const TorusElement mono = v_times(a1 * a2, power(xm, a1) * power(xm1, a2));
        const std::string at = "m=" + std::to_string(m) + " (a1,a2)=(" + std::to_string(a1) + "," +
                               std::to_string(a2) + ") label " + a.to_string();
        rep.record("cluster monomial = C_{a1 alpha(m) + a2 alpha(m+1)}", k.table().compute_C(a) == mono, at);
      }
    }
  }
  return rep;
}

Report verify_ea_x0_cases(Kronecker& k, int window) {
  Report rep;
  const EBasis& basis = k.basis();
  const TorusElement x0 = k.cluster_var(0);
  auto E = [&](int a1, int a2) { return basis.element(Lattice{a1, a2}); };
  auto vp = [](int e) { return LaurentPoly::v_power(e); };
  for (const Lattice& a : box({-window, -window}, {window, window})) {
    const int a1 = a[0];
    const int a2 = a[1];
    const TorusElement lhs = v_times(-a1, basis.element(a) * x0) - E(a1, a2 - 1);
    TorusElement rhs(basis.form());
    if (a2 <= 0) {
      // zero
    } else if (a1 >= 0) {
      rhs = vp(2 * a2) * E(a1 + 2, a2 - 1);
    } else if (a1 == -1) {
      rhs = vp(2 * a2) * E(1, a2 - 1) + vp(2 * (a2 + 2)) * E(1, a2 + 1);
    } else {
      rhs = vp(2 * a2) * E(a1 + 2, a2 - 1) + (vp(2 * (a2 - a1 - 1)) + vp(2 * (a2 - a1 + 1))) * E(a1 + 2, a2 + 1) +
            vp(2 * (a2 - 2 * a1)) * E(a1 + 2, a2 + 3);
    }
    rep.record("v^{-a1} E_a X_0 - E_(a1,a2-1) case formula", lhs == rhs, label(a));
    bool positive = true;
    for (const auto& [key, c] : basis.expand(lhs)) positive = positive && c.in_v_zv();
    rep.record("v^{-a1} E_a X_0 - E_(a1,a2-1) in vA+", positive, label(a));
  }
  return rep;
}

Report verify_kronecker_relations(Kronecker& k, int window) {
  Report rep;
  const TorusElement one = TorusElement::one(k.basis().form());
  const int lo = 1 - k.horizon();
  const int hi = 2 + k.horizon();
  for (int m = lo; m < hi; ++m)
    rep.record("X_{m+1} X_m = v^2 X_m X_{m+1}", verify_quasi_commute(k.cluster_var(m + 1), k.cluster_var(m), 1),
               "m=" + std::to_string(m));
  for (int m = lo + 1; m < hi; ++m) {
    const TorusElement x = k.cluster_var(m);
    rep.record("X_{m+1} X_{m-1} = v^2 X_m^2 + 1",
               k.cluster_var(m + 1) * k.cluster_var(m - 1) == v_times(2, x * x) + one, "m=" + std::to_string(m));
  }
  const TorusElement x0 = k.cluster_var(0);
  const TorusElement x1 = k.cluster_var(1);
  const TorusElement x2 = k.cluster_var(2);
  const TorusElement x3 = k.cluster_var(3);
  for (const Lattice& a : box({-window, -window}, {window, window})) {
    const int p1 = std::max(a[0], 0), n1 = std::max(-a[0], 0);
    const int p2 = std::max(a[1], 0), n2 = std::max(-a[1], 0);
    const TorusElement closed = v_times(a[0] * a[1], power(x3, n1) * power(x1, p1) * power(x2, p2) * power(x0, n2));
    rep.record("E_a = v^{a1 a2} X_3^[-a1]+ X_1^[a1]+ X_2^[a2]+ X_0^[-a2]+", k.basis().element(a) == closed, label(a));
  }
  return rep;
}

Report verify_sharper_order(Kronecker& k) {
  Report rep;
  auto below = [](const Lattice& x, const Lattice& a) {
    return std::max(-x[0], 0) < std::max(-a[0], 0) && std::max(-x[1], 0) < std::max(-a[1], 0);
  };
  for (const Lattice& a : k.table().keys()) {
    for (const auto& [key, c] : k.basis().r_row(a))
      rep.record("r-row support below a (componentwise)", below(key, a), label(a) + " a'=" + key.to_string());
    for (const auto& [key, c] : k.table().row(a).p)
      rep.record("p-row support below a (componentwise)", below(key, a), label(a) + " a'=" + key.to_string());
  }
  return rep;
}

Report verify_kronecker(int rmax, int window) {
  Kronecker k(std::max(Kronecker::kDefaultHorizon, rmax + 2));
  Report rep;
  rep.merge(verify_kronecker_base(k));
  rep.merge(verify_chebyshev_basis(k, rmax));
  rep.merge(verify_cluster_labels(k, -1, 3, 2));
  rep.merge(verify_ea_x0_cases(k, window));
  rep.merge(verify_kronecker_relations(k, window));
  for (const Lattice& a : box({-window, -window}, {window, window})) k.table().row(a);
  rep.merge(verify_sharper_order(k));
  return rep;
}

}  // namespace qca
