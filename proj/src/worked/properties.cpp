#include "qca/worked/properties.hpp"

#include <omp.h>

#include <set>

#include "qca/lusztig.hpp"
#include "qca/mutation.hpp"

namespace qca {

std::vector<Lattice> random_labels(const QuantumSeed& s, int count, int window, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-window, window);
  std::vector<Lattice> out;
  for (int t = 0; t < count; ++t) {
    Lattice a(static_cast<std::size_t>(s.m));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = pick(rng);
    out.push_back(a);
  }
  return out;
}

namespace {

LaurentPoly lookup(const EExpansion& x, const Lattice& a) {
  auto it = x.find(a);
  return it == x.end() ? LaurentPoly{} : it->second;
}

}  // namespace

Report verify_basis_properties(const QuantumSeed& s, int count, int window, std::mt19937_64& rng, int jobs) {
  Report rep;
  const EBasis basis(s);
  const auto n = static_cast<std::size_t>(s.n);
  const std::vector<Lattice> labels = random_labels(s, count, window, rng);
  const long total = static_cast<long>(labels.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < total; ++i) {
    const Lattice& a = labels[static_cast<std::size_t>(i)];
    const Lattice& b = labels[static_cast<std::size_t>((i + 1) % total)];
    const std::string at = "a=" + a.to_string();
    try {
      const TorusElement ea = basis.element(a);
      rep.record("expand(E_a) = {a: 1}", basis.expand(ea) == EExpansion{{a, LaurentPoly(1)}}, at, i);

      const EExpansion r = basis.r_row(a);
      bool lower = true;
      for (const auto& [key, c] : r) lower = lower && r_of(key, n) < r_of(a, n);
      rep.record("bar(E_a) - E_a supported on r(a') < r(a)", lower, at, i);
      rep.record("bar(E_a) = E_a + sum r E", bar(ea) == ea + basis.assemble(r), at, i);

      // bar is an involution: r + bar r + sum bar(r_{a,a''}) r_{a'',a'} = 0 for every a'
      std::set<Lattice> targets;
      std::vector<std::pair<LaurentPoly, EExpansion>> mids;
      for (const auto& [key, c] : r) {
        targets.insert(key);
        mids.emplace_back(bar(c), basis.r_row(key));
        for (const auto& [k2, c2] : mids.back().second) targets.insert(k2);
      }
      bool involution = true;
      for (const Lattice& t : targets) {
        LaurentPoly sum = lookup(r, t) + bar(lookup(r, t));
        for (const auto& [coeff, row] : mids) sum += coeff * lookup(row, t);
        involution = involution && sum.is_zero();
      }
      rep.record("r-matrix involution identity", involution, at, i);

      bool filtered = true;
      for (const auto& [key, c] : basis.expand(ea * basis.element(b)))
        filtered = filtered && r_of(key, n) <= r_of(a, n) + r_of(b, n);
      rep.record("E_a E_b stays in the filtration", filtered, at + " b=" + b.to_string(), i);

      const TableRow row = solve_row(basis, a);
      const Report props = verify_C_properties(basis, a, row);
      for (const auto& c : props.checks()) rep.record(c.name, c.ok(), c.first_failure, i);
      const TableRow other = solve_row(basis, a, TieOrder::Descending);
      rep.record("C_a independent of tie order", other.p == row.p && other.c == row.c, at, i);
    } catch (const std::exception& e) {
      rep.record("basis computation", false, at + ": " + e.what(), i);
    }
  }
  return rep;
}

Report verify_order_transposition(const QuantumSeed& s, int count, int window, std::mt19937_64& rng) {
  Report rep;
  const std::vector<Lattice> labels = random_labels(s, count, window, rng);
  const EBasis basis(s);
  for (int p = 0; p + 1 < s.n; ++p) {
    const int j = s.order[static_cast<std::size_t>(p)];
    const int k = s.order[static_cast<std::size_t>(p + 1)];
    if (s.b(j, k) != 0) continue;
    QuantumSeed t = s;
    std::swap(t.order[static_cast<std::size_t>(p)], t.order[static_cast<std::size_t>(p + 1)]);
    t.weight.reset();
    const EBasis swapped(t);
    const std::string at = "swap " + std::to_string(j + 1) + "," + std::to_string(k + 1);
    for (const Lattice& a : labels) {
      rep.record("E_a unchanged by transposition", basis.element(a) == swapped.element(a), at + " a=" + a.to_string());
      rep.record("C_a unchanged by transposition", solve_row(basis, a).c == solve_row(swapped, a).c,
                 at + " a=" + a.to_string());
    }
  }
  return rep;
}

Report verify_frozen_shift(const QuantumSeed& s, int count, int window, std::mt19937_64& rng) {
  Report rep;
  if (s.m == s.n) return rep;
  const MutationPair pair(s);
  const auto n = static_cast<std::size_t>(s.n);
  const std::vector<Lattice> labels = random_labels(s, count, window, rng);
  const std::vector<Lattice> shifts = random_labels(s, count, window, rng);
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const Lattice a = labels[t];
    const Lattice shift = shifts[t].tail(n);
    const CConditions base = check_c_conditions(pair, a);
    const CConditions shifted = check_c_conditions(pair, a + shift);
    EExpansion moved;
    for (const auto& [key, c] : base.expansion) moved.emplace(key + shift, c);
    const std::string at = "a=" + a.to_string() + " shift=" + shift.to_string();
    rep.record("E'-expansion invariant under frozen shift", shifted.expansion == moved, at);
    rep.record("phi(a + a_o) = phi(a) + a_o", base.unit && shifted.unit && *shifted.unit == *base.unit + shift, at);
  }
  return rep;
}

}  // namespace qca
