#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qca/ebasis.hpp"
#include "qca/mutation.hpp"
#include "qca/report.hpp"

namespace qca {

/// C_a = E_a + sum p_{a,a'} E_{a'}.
struct TableRow {
  EExpansion p;
  TorusElement c;
};

/// Order in which candidates of equal r-value are processed.
enum class TieOrder { Ascending, Descending };

/// Runs the recursion for one row: candidates come from r-rows and are
/// processed in decreasing r; p_{a,a'} = [r_{a,a'} + sum bar(p_{a,a''}) r_{a'',a'}]_+.
/// Throws Error if a right-hand side is not bar-antisymmetric.
TableRow solve_row(const EBasis& basis, const Lattice& a, TieOrder ties = TieOrder::Ascending);

/// Per-seed memo of computed rows. Concurrent callers may duplicate work;
/// the first stored row wins.
class TriangularTable {
public:
  explicit TriangularTable(std::shared_ptr<const EBasis> basis) : basis_(std::move(basis)) {}

  const EBasis& basis() const { return *basis_; }
  TableRow row(const Lattice& a);
  TorusElement compute_C(const Lattice& a) { return row(a).c; }

  std::optional<TableRow> find(const Lattice& a) const;
  void insert(const Lattice& a, TableRow row);
  std::vector<Lattice> keys() const;

  /// Called after a row is computed here (not when inserted from outside).
  void on_computed(std::function<void(const Lattice&, const TableRow&)> hook) { hook_ = std::move(hook); }

private:
  std::shared_ptr<const EBasis> basis_;
  mutable std::mutex mu_;
  std::map<Lattice, TableRow> rows_;
  std::function<void(const Lattice&, const TableRow&)> hook_;
};

/// bar-invariance, p in vZ[v], r(a') < r(a), and C = E_a + sum p E.
Report verify_C_properties(const EBasis& basis, const Lattice& a, const TableRow& row);

/// For a_k >= 0 (k <= n): C_a is the single monomial X^a. Throws
/// std::invalid_argument if some exchange entry is negative.
bool cluster_monomial_check(TriangularTable& table, const Lattice& a);

/// (a1, -c[-a1]_+ - a2, a3, a4 + min(c[-a1]_+, [-a2]_+)).
Lattice phi_rank2_principal(const Lattice& a, int b, int c);

/// For each a in the window compares C'_a (mutated seed's recursion, carried
/// into the initial torus) with C_{phi(a)}, phi read off the c-conditions.
Report compare_bases(const MutationPair& pair, const std::vector<Lattice>& window, int jobs = 0);

/// Every integer point of prod [lo_i, hi_i].
std::vector<Lattice> box(const std::vector<int>& lo, const std::vector<int>& hi);

}  // namespace qca
