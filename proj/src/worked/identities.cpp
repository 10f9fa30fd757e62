#include "qca/worked/identities.hpp"

#include <stdexcept>

#include "qca/ebasis.hpp"
#include "qca/mutation.hpp"

namespace qca {

QuantumSeed random_principal_seed(std::mt19937_64& rng, int max_n, int max_entry) {
  if (max_n < 1 || max_entry < 0) throw std::invalid_argument("random_principal_seed: bad bounds");
  std::uniform_int_distribution<int> pick_n(1, max_n), pick_d(1, 2), pick_b(-max_entry, 0);
  const int n = pick_n(rng);
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int& x : d) x = pick_d(rng);
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int di = d[static_cast<std::size_t>(i)], dj = d[static_cast<std::size_t>(j)];
      // redraw until d_i b_ij / d_j is an integer of bounded size; 0 always qualifies
      while (true) {
        const int bij = pick_b(rng);
        if ((di * bij) % dj != 0 || std::abs(di * bij / dj) > max_entry) continue;
        b(i, j) = bij;
        b(j, i) = -di * bij / dj;
        break;
      }
    }
  return principal_seed(b, d);
}

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

std::string seed_tag(const QuantumSeed& s) {
  std::string out = "B=[";
  for (int i = 0; i < s.n; ++i) {
    out += i ? ";" : "";
    for (int j = 0; j < s.n; ++j) out += (j ? "," : "") + std::to_string(s.b(i, j));
  }
  out += "] d=(";
  for (std::size_t i = 0; i < s.d.size(); ++i) out += (i ? "," : "") + std::to_string(s.d[i]);
  return out + ")";
}

LaurentPoly q_binomial(int r, int s, int step) { return substitute_power(gaussian_binomial(r, s), step); }

}  // namespace

Report verify_commutation_relations(const QuantumSeed& s) {
  Report rep;
  const EBasis basis(s);
  const SkewForm& form = *basis.form();
  const std::string tag = seed_tag(s);
  auto vp = [](long e) { return LaurentPoly::v_power(static_cast<int>(e)); };
  auto x = [&](int i) { return basis.monomial(Lattice::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(i))); };

  for (int i = 0; i < s.m; ++i)
    for (int k = 0; k < s.n; ++k) {
      if (i == k) continue;
      const auto lam = form(Lattice::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(i)), basis.e_prime(k));
      rep.record("X_i X'_k = v^{2 Lambda(e_i,e'_k)} X'_k X_i", x(i) * basis.x_prime(k) == vp(2 * lam) * (basis.x_prime(k) * x(i)),
                 tag + " i=" + std::to_string(i + 1) + " k=" + std::to_string(k + 1));
    }
  for (int k = 0; k < s.n; ++k) {
    const Lattice ek = Lattice::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(k));
    const auto lam = form(basis.e_prime(k), ek);
    const int dk = s.d[static_cast<std::size_t>(k)];
    const TorusElement lhs = vp(-lam) * (basis.x_prime(k) * x(k)) - vp(lam) * (x(k) * basis.x_prime(k));
    const TorusElement rhs = (vp(-dk) - vp(dk)) * basis.monomial(plus_part(-s.column(k)));
    rep.record("X'_k X_k commutator", lhs == rhs, tag + " k=" + std::to_string(k + 1));
  }
  for (int j = 0; j < s.n; ++j)
    for (int k = 0; k < s.n; ++k) {
      if (j == k) continue;
      const auto lam = form(basis.e_prime(j), basis.e_prime(k));
      const int bjk = s.b(j, k);
      const int e = s.d[static_cast<std::size_t>(j)] * bjk;
      const int eps = sign(bjk);
      const Lattice expo = -Lattice::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(j)) -
                           Lattice::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(k)) +
                           plus_part(-eps * s.column(j)) + plus_part(eps * s.column(k));
      const TorusElement lhs =
          vp(-lam) * (basis.x_prime(j) * basis.x_prime(k)) - vp(lam) * (basis.x_prime(k) * basis.x_prime(j));
      const TorusElement rhs = (vp(-e) - vp(e)) * basis.monomial(expo);
      rep.record("X'_j X'_k commutator", lhs == rhs, tag + " j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1));
    }
  return rep;
}

Report verify_gaussian_identity(int rmax) {
  Report rep;
  using Poly = std::vector<LaurentPoly>;  // coefficients of X^0, X^1, ...
  for (int r = 0; r <= rmax; ++r) {
    Poly lhs{LaurentPoly(1)};
    for (int p = 1; p <= r; ++p) {
      Poly next(lhs.size() + 1);
      for (std::size_t s = 0; s < lhs.size(); ++s) {
        next[s] += lhs[s];
        next[s + 1] += LaurentPoly::v_power(2 * p - 1) * lhs[s];
      }
      lhs = std::move(next);
    }
    Poly rhs(static_cast<std::size_t>(r) + 1);
    for (int s = 0; s <= r; ++s) rhs[static_cast<std::size_t>(s)] = LaurentPoly::v_power(s * s) * q_binomial(r, s, 2);
    rep.record("Gaussian binomial product identity", lhs == rhs, "r=" + std::to_string(r));
  }
  return rep;
}

Report verify_principal_identities(const QuantumSeed& s) {
  Report rep;
  if (s.m != 2 * s.n) throw std::invalid_argument("verify_principal_identities: not a principal seed");
  for (int k = 0; k < s.n; ++k)
    if (s.order[static_cast<std::size_t>(k)] != k)
      throw std::invalid_argument("verify_principal_identities: needs the natural order");
  const MutationPair pair(s);
  const EBasis& basis = pair.initial();
  const std::string tag = seed_tag(s);
  const auto m = static_cast<std::size_t>(s.m);
  const int n = s.n;
  const int last = n - 1;
  const int dn = s.d[static_cast<std::size_t>(last)];
  auto vp = [](int e) { return LaurentPoly::v_power(e); };
  auto unit = [m](int i) { return Lattice::unit(m, static_cast<std::size_t>(i)); };
  auto x = [&](int i) { return basis.monomial(unit(i)); };
  auto above = [&](int j) {
    Lattice out(m);
    for (int i = j + 1; i < s.m; ++i) out[static_cast<std::size_t>(i)] = s.b(i, j);
    return out;
  };
  auto below = [&](int j) {
    Lattice out(m);
    for (int i = 0; i < j; ++i) out[static_cast<std::size_t>(i)] = s.b(i, j);
    return out;
  };

  for (int j = 0; j < last; ++j) {
    const std::string at = tag + " j=" + std::to_string(j + 1);
    const int bnj = s.b(last, j);
    const int dj = s.d[static_cast<std::size_t>(j)];
    const Lattice shift = above(j) + bnj * (unit(2 * n - 1) - unit(last));
    const TorusElement xpp = pair.x_double_prime(j);
    rep.record("X_j X''_j product", x(j) * xpp == vp(-dj) * basis.monomial(shift) +
                                                     basis.monomial(-below(j)) * basis.x_prime_power(last, bnj),
               at);
    TorusElement formula = basis.x_prime(j) * basis.x_prime_power(last, bnj);
    for (int sidx = 1; sidx <= bnj; ++sidx)
      formula -= (vp(sidx * sidx * dn) * q_binomial(bnj, sidx, 2 * dn)) *
                 basis.monomial(-unit(j) + shift - sidx * s.column(last));
    rep.record("X''_j = X'_j X'_n^{b_nj} - q-binomial tail", xpp == formula, at);
    rep.record("X''_j by transport = X''_j by E-expansion", xpp == pair.x_double_prime_formula(j), at);
    rep.record("X'_j X_j product", basis.x_prime(j) * x(j) == basis.monomial(-below(j)) + vp(dj) * basis.monomial(above(j)),
               at);
  }
  for (int j = 1; j < n; ++j) {
    const int dj = s.d[static_cast<std::size_t>(j)];
    rep.record("X_j X'_j product", x(j) * basis.x_prime(j) == vp(-dj) * basis.monomial(above(j)) + basis.monomial(-below(j)),
               tag + " j=" + std::to_string(j + 1));
  }

  for (int i = 0; i < s.m; ++i) {
    const std::string at = tag + " i=" + std::to_string(i + 1);
    bool ok;
    if (i >= n) {
      ok = pair.eprime_element(unit(i)) == x(i) && pair.eprime_element(-unit(i)) == basis.monomial(-unit(i));
    } else if (i < last) {
      ok = pair.eprime_element(unit(i)) == x(i) && pair.eprime_element(-unit(i)) == pair.x_double_prime(i);
    } else {
      ok = pair.eprime_element(unit(i)) == basis.x_prime(i) && pair.eprime_element(-unit(i)) == x(i);
    }
    rep.record("E'_{+-e_i} values", ok, at);
  }
  return rep;
}

Report verify_identities(int count, int max_n, int max_entry, int rmax, std::mt19937_64& rng) {
  Report rep;
  for (int t = 0; t < count; ++t) {
    const QuantumSeed s = random_principal_seed(rng, max_n, max_entry);
    rep.merge(verify_commutation_relations(s));
    rep.merge(verify_principal_identities(s));
  }
  rep.merge(verify_gaussian_identity(rmax));
  return rep;
}

}  // namespace qca
