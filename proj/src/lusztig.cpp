#include "qca/lusztig.hpp"

#include <omp.h>

#include <set>
#include <stdexcept>

#include "qca/error.hpp"

namespace qca {

namespace {

struct Candidate {
  int r;
  Lattice a;
};

LaurentPoly lookup(const EExpansion& x, const Lattice& a) {
  auto it = x.find(a);
  return it == x.end() ? LaurentPoly{} : it->second;
}

}  // namespace

TableRow solve_row(const EBasis& basis, const Lattice& a, TieOrder ties) {
  const auto n = static_cast<std::size_t>(basis.n());
  auto before = [ties](const Candidate& x, const Candidate& y) {
    if (x.r != y.r) return x.r > y.r;
    return ties == TieOrder::Ascending ? x.a < y.a : y.a < x.a;
  };
  std::set<Candidate, decltype(before)> queue(before);
  std::set<Lattice> seen;
  auto enqueue = [&](const EExpansion& row) {
    for (const auto& [key, c] : row)
      if (seen.insert(key).second) queue.insert({r_of(key, n), key});
  };

  const EExpansion r_a = basis.r_row(a);
  enqueue(r_a);
  EExpansion p;
  std::vector<std::pair<Lattice, EExpansion>> active;  // a'' with p != 0, and its r-row

  while (!queue.empty()) {
    const Candidate cur = *queue.begin();
    queue.erase(queue.begin());
    LaurentPoly f = lookup(r_a, cur.a);
    for (const auto& [mid, row] : active) {
      auto it = row.find(cur.a);
      if (it != row.end()) f += bar(p.at(mid)) * it->second;
    }
    if (!(f + bar(f)).is_zero())
      throw Error("recursion for C" + a.to_string() + " at " + cur.a.to_string() + ": right-hand side " + f.to_string() +
                  " is not bar-antisymmetric");
    LaurentPoly value = positive_part(f);
    if (value.is_zero()) continue;
    p.emplace(cur.a, std::move(value));
    EExpansion row = basis.r_row(cur.a);
    enqueue(row);
    active.emplace_back(cur.a, std::move(row));
  }

  TableRow out{p, basis.element(a)};
  for (const auto& [key, c] : p) out.c += c * basis.element(key);
  return out;
}

TableRow TriangularTable::row(const Lattice& a) {
  if (auto hit = find(a)) return *hit;
  TableRow computed = solve_row(*basis_, a);
  {
    std::lock_guard lock(mu_);
    auto [it, inserted] = rows_.try_emplace(a, computed);
    if (!inserted) return it->second;
  }
  if (hook_) hook_(a, computed);
  return computed;
}

std::optional<TableRow> TriangularTable::find(const Lattice& a) const {
  std::lock_guard lock(mu_);
  auto it = rows_.find(a);
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

void TriangularTable::insert(const Lattice& a, TableRow row) {
  std::lock_guard lock(mu_);
  rows_.insert_or_assign(a, std::move(row));
}

std::vector<Lattice> TriangularTable::keys() const {
  std::lock_guard lock(mu_);
  std::vector<Lattice> out;
  for (const auto& [a, row] : rows_) out.push_back(a);
  return out;
}

Report verify_C_properties(const EBasis& basis, const Lattice& a, const TableRow& row) {
  Report rep;
  const auto n = static_cast<std::size_t>(basis.n());
  const std::string at = "a=" + a.to_string();
  rep.record("C bar-invariant", bar(row.c) == row.c, at);
  for (const auto& [key, c] : row.p) {
    rep.record("p in vZ[v]", c.in_v_zv(), at + " p" + key.to_string() + " = " + c.to_string());
    rep.record("p support r(a') < r(a)", r_of(key, n) < r_of(a, n), at + " a'=" + key.to_string());
  }
  TorusElement assembled = basis.element(a);
  for (const auto& [key, c] : row.p) assembled += c * basis.element(key);
  rep.record("C = E_a + sum p E", assembled == row.c, at);
  return rep;
}

bool cluster_monomial_check(TriangularTable& table, const Lattice& a) {
  for (int k = 0; k < table.basis().n(); ++k)
    if (a[k] < 0) throw std::invalid_argument("cluster_monomial_check: a_" + std::to_string(k + 1) + " < 0");
  return table.compute_C(a) == table.basis().monomial(a);
}

Lattice phi_rank2_principal(const Lattice& a, int b, int c) {
  if (a.size() != 4) throw std::invalid_argument("phi_rank2_principal: need a in Z^4");
  if (b < 1 || c < 1) throw std::invalid_argument("phi_rank2_principal: need b, c >= 1");
  const int m1 = std::max(-a[0], 0);
  const int m2 = std::max(-a[1], 0);
  return Lattice{a[0], -c * m1 - a[1], a[2], a[3] + std::min(c * m1, m2)};
}

Report compare_bases(const MutationPair& pair, const std::vector<Lattice>& window, int jobs) {
  Report rep;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long count = static_cast<long>(window.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const Lattice& a = window[static_cast<std::size_t>(i)];
    const std::string at = "a=" + a.to_string();
    try {
      const CConditions cc = check_c_conditions(pair, a);
      rep.record("c-conditions", cc.ok, at + ": E'_a = " + to_string(cc.expansion), i);
      if (!cc.unit) {
        rep.record("C'_a = C_phi(a)", false, at + ": no unique unit coefficient", i);
        continue;
      }
      const TableRow mutated = solve_row(pair.mutated(), a);
      TorusElement c_prime = pair.eprime_element(a);
      for (const auto& [key, coeff] : mutated.p) c_prime += coeff * pair.eprime_element(key);
      const TableRow initial = solve_row(pair.initial(), *cc.unit);
      rep.record("C'_a = C_phi(a)", c_prime == initial.c, at + " phi(a)=" + cc.unit->to_string(), i);
    } catch (const std::exception& e) {
      rep.record("C'_a = C_phi(a)", false, at + ": " + e.what(), i);
    }
  }
  return rep;
}

std::vector<Lattice> box(const std::vector<int>& lo, const std::vector<int>& hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box: bound dimensions differ");
  std::vector<Lattice> out;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return out;
  Lattice cur{std::vector<int>(lo)};
  while (true) {
    out.push_back(cur);
    std::size_t i = lo.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
    if (lo.empty()) return out;
  }
}

}  // namespace qca
