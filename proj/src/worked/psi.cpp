#include "qca/worked/psi.hpp"

#include <stdexcept>

#include "qca/mutation.hpp"

namespace qca {

namespace {

void require_natural(const QuantumSeed& s) {
  for (int k = 0; k < s.n; ++k)
    if (s.order[static_cast<std::size_t>(k)] != k) throw std::invalid_argument("psi: the seed must be in natural order");
}

// (x, y) in Z^{2m}
Lattice pair_of(const Lattice& x, const Lattice& y) { return x.concat(y); }

struct PsiData {
  std::size_t m;
  std::size_t n;
  std::vector<Lattice> frozen;   // image of e_{n+k}
  std::vector<Lattice> pos;      // image of e_k
  std::vector<Lattice> neg;      // image of -e_k
};

Lattice apply(const PsiData& p, const Lattice& a) {
  if (a.size() != 2 * p.n) throw std::invalid_argument("psi: label must lie in Z^{2n}");
  Lattice out(2 * p.m);
  for (std::size_t k = 0; k < p.n; ++k) {
    const int t = a[k];
    if (t > 0) out += t * p.pos[k];
    if (t < 0) out += (-t) * p.neg[k];
    out += a[p.n + k] * p.frozen[k];
  }
  return out;
}

PsiData common(const QuantumSeed& s) {
  require_natural(s);
  PsiData p{static_cast<std::size_t>(s.m), static_cast<std::size_t>(s.n), {}, {}, {}};
  for (int k = 0; k < s.n; ++k) {
    const Lattice bk = s.column(k);
    p.frozen.push_back(pair_of(bk.tail(p.n), -bk.head(p.n)));
  }
  return p;
}

}  // namespace

Lattice psi_map(const QuantumSeed& s, const Lattice& a) {
  PsiData p = common(s);
  for (int k = 0; k < s.n; ++k) {
    const Lattice ek = Lattice::unit(p.m, static_cast<std::size_t>(k));
    const Lattice neg_b = plus_part(-s.column(k));
    p.pos.push_back(pair_of(ek, ek));
    p.neg.push_back(pair_of(-ek - neg_b.tail(p.n), -ek + neg_b.head(p.n)));
  }
  return apply(p, a);
}

Lattice psi_prime_map(const QuantumSeed& s, const Lattice& a) {
  PsiData p = common(s);
  const int last = s.n - 1;
  const QuantumSeed mu = seed_mutate(s, last);
  const Lattice bn = s.column(last);
  const Lattice en = Lattice::unit(p.m, static_cast<std::size_t>(last));
  for (int k = 0; k < s.n; ++k) {
    const Lattice ek = Lattice::unit(p.m, static_cast<std::size_t>(k));
    if (k < last) {
      const int bnk = s.b(last, k);
      p.pos.push_back(pair_of(ek, ek));
      p.neg.push_back(pair_of(-ek - plus_part(-mu.column(k)).tail(p.n) - bnk * plus_part(-bn).tail(p.n),
                              -ek + plus_part(-s.column(k)).head(p.n) - bnk * bn.head(p.n) - bnk * en));
    } else {
      p.pos.push_back(pair_of(en - plus_part(-bn).tail(p.n), -en - bn.head(p.n)));
      p.neg.push_back(pair_of(-en, en));
    }
  }
  return apply(p, a);
}

Report verify_psi_embedding(const QuantumSeed& s, const std::vector<Lattice>& samples) {
  require_natural(s);
  Report rep;
  const IntMatrix b = IntMatrix::from_rows([&] {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < s.n; ++i) {
      rows.emplace_back();
      for (int j = 0; j < s.n; ++j) rows.back().push_back(s.b(i, j));
    }
    return rows;
  }());
  const QuantumSeed bullet = principal_seed(b, s.d);
  for (int k = 0; k < s.n; ++k)
    if (bullet.order[static_cast<std::size_t>(k)] != k) throw std::invalid_argument("psi: principal seed order differs");
  const MutationPair small(bullet);
  const MutationPair big(double_seed(s));
  const std::vector<Lattice> cols = bullet_exponents(s);
  const FormPtr big_form = big.initial().form();

  const SkewForm& lam = *big_form;
  bool form_ok = true;
  for (int i = 0; i < bullet.m; ++i)
    for (int j = 0; j < bullet.m; ++j)
      form_ok = form_ok && lam(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]) == bullet.lambda(i, j);
  rep.record("bullet generators carry the principal form", form_ok);

  auto embed = [&](const TorusElement& x) {
    TorusElement out(big_form);
    for (const auto& [e, c] : x.terms()) {
      Lattice image(static_cast<std::size_t>(2 * s.m));
      for (std::size_t i = 0; i < e.size(); ++i) image += e[i] * cols[i];
      out.add_term(image, c);
    }
    return out;
  };

  const auto n = static_cast<std::size_t>(s.n);
  for (const Lattice& a : samples) {
    const std::string at = "a=" + a.to_string();
    const Lattice p = psi_map(s, a);
    const Lattice pp = psi_prime_map(s, a);
    rep.record("E_a (principal) = E_psi(a) (double)", embed(small.initial().element(a)) == big.initial().element(p),
               at + " psi=" + p.to_string());
    rep.record("E'_a (principal) = E'_psi'(a) (double)", embed(small.eprime_element(a)) == big.eprime_element(pp),
               at + " psi'=" + pp.to_string());
    rep.record("psi and psi' keep the exchange part", p.head(n) == a.head(n).concat(Lattice(p.size() - a.size())) &&
                                                          pp.head(n) == p.head(n),
               at);
  }
  return rep;
}

Report verify_psi(const QuantumSeed& s, int count, int window, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-window, window);
  std::vector<Lattice> samples;
  for (int t = 0; t < count; ++t) {
    Lattice a(static_cast<std::size_t>(2 * s.n));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = pick(rng);
    samples.push_back(a);
  }
  return verify_psi_embedding(s, samples);
}

}  // namespace qca
