#include "qca/worked/rank2.hpp"

#include <omp.h>

#include <stdexcept>

#include "qca/error.hpp"
#include "qca/lusztig.hpp"

namespace qca {

QuantumSeed rank2_principal_seed(int b, int c) {
  if (b < 1 || c < 1) throw std::invalid_argument("rank2_principal_seed: need b, c >= 1");
  return principal_seed(IntMatrix::from_rows({{0, -b}, {c, 0}}), {c, b});
}

Rank2Principal::Rank2Principal(int b, int c)
    : b_(b), c_(c), pair_(rank2_principal_seed(b, c)), x1pp_(pair_.x_double_prime(0)) {
  if (pair_.index() != 1) throw Error("rank 2 principal seed: expected mutation at the second index");
}

TorusElement Rank2Principal::x1() const { return basis().monomial(Lattice{1, 0, 0, 0}); }
TorusElement Rank2Principal::x2() const { return basis().monomial(Lattice{0, 1, 0, 0}); }
TorusElement Rank2Principal::x1p() const { return basis().x_prime(0); }
TorusElement Rank2Principal::x2p() const { return basis().x_prime(1); }
TorusElement Rank2Principal::x1pp() const { return x1pp_; }

TorusElement Rank2Principal::tail_product(const std::array<int, 5>& p) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = tails_.find(p); it != tails_.end()) return it->second;
  }
  for (int e : p)
    if (e < 0) throw std::invalid_argument("crystal monomial: negative exponent");
  const EBasis& B = basis();
  TorusElement out = B.x_prime_power(0, p[0]) * power(x2(), p[1]) * power(x1(), p[2]) * B.x_prime_power(1, p[3]) *
                     power(x1pp_, p[4]);
  std::lock_guard lock(mu_);
  return tails_.try_emplace(p, std::move(out)).first->second;
}

TorusElement Rank2Principal::crystal_M_circ(const CrystalIndex& mm) const {
  return basis().monomial(Lattice{0, 0, mm[0], mm[1]}) * tail_product({mm[2], mm[3], mm[4], mm[5], mm[6]});
}

TorusElement Rank2Principal::crystal_M(const CrystalIndex& mm) const {
  return LaurentPoly::v_power(nu_condition(mm)) * crystal_M_circ(mm);
}

int Rank2Principal::nu_condition(const CrystalIndex& mm) const {
  const std::array<Lattice, 6> g{Lattice{0, 0, mm[0], mm[1]}, Lattice{-1, 0, 0, 0}, Lattice{0, 1, 0, 0},
                                 Lattice{1, 0, 0, 0},          Lattice{0, -1, 0, 1}, Lattice{-1, 0, 1, c_}};
  const std::array<int, 6> k{1, mm[2], mm[3], mm[4], mm[5], mm[6]};
  const SkewForm& form = *basis().form();
  long sigma = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) sigma += static_cast<long>(k[i]) * k[j] * form(g[i], g[j]);
  return static_cast<int>(static_cast<long>(c_) * mm[2] * mm[6] - sigma);
}

int Rank2Principal::nu_explicit(const CrystalIndex& mm) const {
  const auto [m3, m4, m1p, m2, m1, m2p, m1pp] = mm;
  const int b = b_, c = c_;
  return c * (m1p - m1 - (b * c - 1) * m1pp - b * m2p) * m3 + b * (c * m1pp + m2p - m2) * m4 + c * m1 * m1pp +
         b * m2 * m2p + b * c * m2 * m1pp;
}

bool in_I0(const CrystalIndex& mm) { return mm[2] == 0 || mm[4] == 0 || mm[6] == 0; }

Lattice Rank2Principal::pi(const CrystalIndex& mm) const {
  if (!in_I0(mm)) throw std::invalid_argument("pi: index outside I0");
  const auto [m3, m4, m1p, m2, m1, m2p, m1pp] = mm;
  const int mu = std::min(m1, m1pp);
  return Lattice{m1 - m1p - m1pp, m2 - m2p - c_ * (m1pp - mu), m3 + mu, m4 + std::min(m2 + c_ * mu, m2p + c_ * m1pp)};
}

TorusElement Rank2Principal::e_closed(const Lattice& a) const {
  const int p1 = std::max(a[0], 0), n1 = std::max(-a[0], 0);
  const int p2 = std::max(a[1], 0), n2 = std::max(-a[1], 0);
  const int e = -c_ * a[0] * a[2] - b_ * a[1] * a[3] - b_ * c_ * n2 * a[2];
  return LaurentPoly::v_power(e) * (basis().monomial(Lattice{0, 0, a[2], a[3]}) * tail_product({n1, p2, p1, n2, 0}));
}

TorusElement Rank2Principal::eprime_closed(const Lattice& a) const {
  const int p1 = std::max(a[0], 0), n1 = std::max(-a[0], 0);
  const int p2 = std::max(a[1], 0), n2 = std::max(-a[1], 0);
  const int e = b_ * c_ * (n1 * n2 + n1 * a[3] - c_ * n1 * a[2] - p2 * a[2]) - c_ * a[0] * a[2] + b_ * a[1] * a[3];
  return LaurentPoly::v_power(e) * (basis().monomial(Lattice{0, 0, a[2], a[3]}) * tail_product({0, n2, p1, p2, n1}));
}

namespace {

std::string show(const CrystalIndex& mm) {
  std::string s = "m=(";
  for (std::size_t i = 0; i < mm.size(); ++i) s += (i ? "," : "") + std::to_string(mm[i]);
  return s + ")";
}

std::vector<CrystalIndex> crystal_box(int bound) {
  std::vector<CrystalIndex> out;
  for (const Lattice& x : box({-bound, -bound, 0, 0, 0, 0, 0}, {bound, bound, bound, bound, bound, bound, bound})) {
    CrystalIndex mm;
    for (std::size_t i = 0; i < 7; ++i) mm[i] = x[i];
    out.push_back(mm);
  }
  return out;
}

LaurentPoly q_binomial(int r, int s, int step) { return substitute_power(gaussian_binomial(r, s), step); }

// First term of the first applicable identity, in the order used for the
// crystal reduction; nullopt once m'1 m1 = m2 m'2 = m''1 = 0.
std::optional<CrystalIndex> reduce(const CrystalIndex& mm, int c) {
  auto [m3, m4, m1p, m2, m1, m2p, m1pp] = mm;
  if (m1 > 0 && m1pp > 0) return CrystalIndex{m3 + 1, m4 + c, m1p, m2, m1 - 1, m2p, m1pp - 1};
  if (m1 == 0 && m1pp > 0) return CrystalIndex{m3, m4, m1p + 1, m2, 0, m2p + c, m1pp - 1};
  if (m2 > 0 && m2p > 0) return CrystalIndex{m3, m4 + 1, m1p, m2 - 1, m1, m2p - 1, m1pp};
  if (m1p > 0 && m1 > 0) return CrystalIndex{m3, m4, m1p - 1, m2, m1 - 1, m2p, m1pp};
  return std::nullopt;
}

}  // namespace

Report verify_crystal_identities(const Rank2Principal& r, int bound, int nu_samples, std::mt19937_64& rng) {
  Report rep;
  const int b = r.b(), c = r.c();
  const EBasis& B = r.basis();
  const std::string bc = "(b,c)=(" + std::to_string(b) + "," + std::to_string(c) + ")";
  auto mono = [&](const Lattice& e) { return B.monomial(e); };
  auto vp = [](int e) { return LaurentPoly::v_power(e); };

  const QuantumSeed& s2 = r.pair().mutated().seed();
  rep.record("mutated B~ and Lambda", s2.btilde == IntMatrix::from_rows({{0, b}, {-c, 0}, {1, 0}, {c, -1}}) &&
                                          s2.lambda == IntMatrix::from_rows({{0, 0, -c, 0},
                                                                             {0, 0, -b * c, b},
                                                                             {c, b * c, 0, b * c},
                                                                             {0, -b, -b * c, 0}}),
             bc);
  rep.record("X'_1, X'_2 closed form",
             r.x1p() == mono({-1, c, 1, 0}) + mono({-1, 0, 0, 0}) && r.x2p() == mono({0, -1, 0, 1}) + mono({b, -1, 0, 0}),
             bc);

  TorusElement x1pp = r.x1p() * power(r.x2p(), c);
  for (int s = 1; s <= c; ++s) x1pp -= (vp(b * s * s) * q_binomial(c, s, 2 * b)) * mono({b * s - 1, 0, 1, c - s});
  rep.record("X''_1 = X'_1 X'_2^c - q-binomial tail", r.x1pp() == x1pp, bc);
  rep.record("X''_1 by transport = X''_1 by E-expansion", r.x1pp() == r.pair().x_double_prime_formula(0), bc);

  const TorusElement one = TorusElement::one(B.form());
  rep.record("X'_1 X_1 = 1 + v^c X^(0,0,1,0) X_2^c",
             r.x1p() * r.x1() == one + vp(c) * (mono({0, 0, 1, 0}) * power(r.x2(), c)), bc);
  rep.record("X_2 X'_2 = v^-b X^(0,0,0,1) + X_1^b",
             r.x2() * r.x2p() == vp(-b) * mono({0, 0, 0, 1}) + power(r.x1(), b), bc);
  rep.record("X_1 X''_1 = v^-c X^(0,0,1,c) + X'_2^c",
             r.x1() * r.x1pp() == vp(-c) * mono({0, 0, 1, c}) + power(r.x2p(), c), bc);

  const std::array<TorusElement, 5> seq{r.x1p(), r.x2(), r.x1(), r.x2p(), r.x1pp()};
  const std::array<Lattice, 5> lt{Lattice{-1, 0, 0, 0}, Lattice{0, 1, 0, 0}, Lattice{1, 0, 0, 0}, Lattice{0, -1, 0, 1},
                                  Lattice{-1, 0, 1, c}};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    rep.record("adjacent variables commute", seq[i] * seq[i + 1] == seq[i + 1] * seq[i], bc + " pair " + std::to_string(i));
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t f = 2; f < 4; ++f) {
      const Lattice e = Lattice::unit(4, f);
      const int t = static_cast<int>((*B.form())(e, lt[i]));
      rep.record("frozen monomials quasi-commute with the variables", verify_quasi_commute(mono(e), seq[i], t),
                 bc + " variable " + std::to_string(i));
    }

  std::uniform_int_distribution<int> frozen(-3, 3), expo(0, 3);
  for (int i = 0; i < nu_samples; ++i) {
    CrystalIndex mm{frozen(rng), frozen(rng), expo(rng), expo(rng), expo(rng), expo(rng), expo(rng)};
    rep.record("nu explicit = nu from bar-invariance", r.nu_explicit(mm) == r.nu_condition(mm), bc + " " + show(mm));
  }

  for (const Lattice& a : box({-bound, -bound, -bound, -bound}, {bound, bound, bound, bound})) {
    const int p1 = std::max(a[0], 0), n1 = std::max(-a[0], 0);
    const int p2 = std::max(a[1], 0), n2 = std::max(-a[1], 0);
    const CrystalIndex em{a[2], a[3], n1, p2, p1, n2, 0};
    const CrystalIndex epm{a[2], a[3], 0, n2, p1, p2, n1};
    const std::string at = bc + " a=" + a.to_string();
    rep.record("E_a = M_(a3,a4,[-a1]+,[a2]+,[a1]+,[-a2]+,0)", B.element(a) == r.crystal_M(em), at);
    rep.record("E'_a = M_(a3,a4,0,[-a2]+,[a1]+,[a2]+,[-a1]+)", r.pair().eprime_element(a) == r.crystal_M(epm), at);
    rep.record("E_a closed product form", B.element(a) == r.e_closed(a), at);
    rep.record("E'_a closed product form", r.pair().eprime_element(a) == r.eprime_closed(a), at);
    rep.record("pi(E'-index) = phi(a)", r.pi(epm) == phi_rank2_principal(a, b, c), at);
  }

  for (const CrystalIndex& mm : crystal_box(bound)) {
    const auto [m3, m4, m1p, m2, m1, m2p, m1pp] = mm;
    const std::string at = bc + " " + show(mm);
    const TorusElement lhs = r.crystal_M(mm);
    if (m1p > 0 && m1 > 0) {
      const TorusElement rhs = vp(c * m1pp) * r.crystal_M({m3, m4, m1p - 1, m2, m1 - 1, m2p, m1pp}) +
                               vp(c * (m1p + m1 - 1)) * r.crystal_M({m3 + 1, m4, m1p - 1, m2 + c, m1 - 1, m2p, m1pp});
      rep.record("M reduction m'1 m1 > 0", lhs == rhs, at);
    }
    if (m2 > 0 && m2p > 0) {
      const TorusElement rhs = r.crystal_M({m3, m4 + 1, m1p, m2 - 1, m1, m2p - 1, m1pp}) +
                               vp(b * (m2 + m2p - 1)) * r.crystal_M({m3, m4, m1p, m2 - 1, m1 + b, m2p - 1, m1pp});
      rep.record("M reduction m2 m'2 > 0", lhs == rhs, at);
    }
    if (m1 > 0 && m1pp > 0) {
      const TorusElement rhs = vp(c * m1p) * r.crystal_M({m3 + 1, m4 + c, m1p, m2, m1 - 1, m2p, m1pp - 1}) +
                               vp(c * (m1 + m1pp - 1)) * r.crystal_M({m3, m4, m1p, m2, m1 - 1, m2p + c, m1pp - 1});
      rep.record("M reduction m1 m''1 > 0", lhs == rhs, at);
    }
    if (m1 == 0 && m1pp > 0) {
      TorusElement rhs = r.crystal_M({m3, m4, m1p + 1, m2, 0, m2p + c, m1pp - 1});
      for (int s = 1; s <= c; ++s)
        rhs -= (vp(c * m1p + b * s * (m2 + m2p + s)) * q_binomial(c, s, 2 * b)) *
               r.crystal_M({m3 + 1, m4 + c - s, m1p, m2, b * s - 1, m2p, m1pp - 1});
      rep.record("M reduction m1 = 0 < m''1", lhs == rhs, at);
    }
  }
  return rep;
}

Report verify_rank2_crystal(const Rank2Principal& r, int bound, int jobs) {
  Report rep;
  const std::string bc = "(b,c)=(" + std::to_string(r.b()) + "," + std::to_string(r.c()) + ")";
  const std::vector<CrystalIndex> all = crystal_box(bound);
  const long count = static_cast<long>(all.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const CrystalIndex& mm = all[static_cast<std::size_t>(i)];
    const std::string at = bc + " " + show(mm);
    const EExpansion x = r.basis().expand(r.crystal_M(mm));
    if (in_I0(mm)) {
      const Lattice target = r.pi(mm);
      bool ok = true;
      for (const auto& [key, coeff] : x) {
        const LaurentPoly rest = key == target ? coeff - LaurentPoly(1) : coeff;
        ok = ok && (rest.is_zero() || rest.in_v_zv());
      }
      ok = ok && x.count(target) == 1;
      rep.record("M_m - E_pi(m) in vA+ on I0", ok, at + " pi=" + target.to_string() + " M = " + to_string(x), i);
      long units = 0;
      for (const auto& [key, coeff] : x) units += coeff.is_one();
      rep.record("M_m has one coefficient 1, at pi(m)", units == 1 && x.count(target) && x.at(target).is_one(),
                 at + " M = " + to_string(x), i);

      CrystalIndex cur = mm;
      int steps = 0;
      bool same_pi = true;
      while (auto next = reduce(cur, r.c())) {
        same_pi = same_pi && r.pi(*next) == target;
        cur = *next;
        if (++steps > 10000) break;
      }
      rep.record("reduction m -> m^- keeps pi and terminates", same_pi && steps <= 10000, at, i);
      rep.record("reduction ends at M = E_pi(m)", r.crystal_M(cur) == r.basis().element(target), at, i);
    } else {
      bool ok = true;
      for (const auto& [key, coeff] : x) ok = ok && coeff.in_v_zv();
      rep.record("M_m in vA+ off I0", ok, at + " M = " + to_string(x), i);
    }
  }
  return rep;
}

Report verify_rank2_phi(const Rank2Principal& r, int window, int jobs) {
  Report rep;
  const std::string bc = "(b,c)=(" + std::to_string(r.b()) + "," + std::to_string(r.c()) + ")";
  const std::vector<Lattice> as = box({-window, -window, 0, 0}, {window, window, 0, 0});
  const long count = static_cast<long>(as.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const Lattice& a = as[static_cast<std::size_t>(i)];
    const std::string at = bc + " a=" + a.to_string();
    const CConditions cc = check_c_conditions(r.pair(), a);
    rep.record("c-conditions", cc.ok, at + ": E'_a = " + to_string(cc.expansion), i);
    const Lattice phi = phi_rank2_principal(a, r.b(), r.c());
    rep.record("unit exponent = phi(a)", cc.unit && *cc.unit == phi, at + " phi=" + phi.to_string(), i);
  }
  return rep;
}

Report verify_rank2(int b, int c, int window, int bound, std::mt19937_64& rng, int jobs) {
  const Rank2Principal r(b, c);
  Report rep;
  rep.merge(verify_crystal_identities(r, bound, 200, rng));
  rep.merge(verify_rank2_crystal(r, bound, jobs));
  rep.merge(verify_rank2_phi(r, window, jobs));
  rep.merge(compare_bases(r.pair(), box({-window, -window, 0, 0}, {window, window, 0, 0}), jobs));
  return rep;
}

}  // namespace qca
