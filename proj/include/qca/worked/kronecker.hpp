#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "qca/ebasis.hpp"
#include "qca/lusztig.hpp"
#include "qca/report.hpp"

namespace qca {

/// m = n = 2, B = [[0,-2],[2,0]], Lambda = [[0,-1],[1,0]], d = (2,2).
QuantumSeed a11_seed();

/// Cluster variables X_m of the Kronecker algebra, reached from X_1, X_2 by
/// exact division in the exchange relation X_{m+1} X_{m-1} = v^2 X_m^2 + 1.
class Kronecker {
public:
  static constexpr int kDefaultHorizon = 8;

  explicit Kronecker(int horizon = kDefaultHorizon);

  std::shared_ptr<const EBasis> basis_ptr() const { return basis_; }
  const EBasis& basis() const { return *basis_; }
  TriangularTable& table() { return table_; }
  int horizon() const { return horizon_; }

  /// Throws std::out_of_range when |m| exceeds the horizon.
  TorusElement cluster_var(int m);
  /// v X_3 X_0 - v^3 X_2 X_1.
  TorusElement x_delta();
  /// S_r(X_delta) for r >= -1.
  TorusElement chebyshev(int r);

  /// alpha(1-r) = (1-r,-r), alpha(2+r) = (-r,1-r) for r >= 0.
  static Lattice alpha(int m);

private:
  int horizon_;
  std::shared_ptr<const EBasis> basis_;
  TriangularTable table_;
  std::mutex mu_;
  std::map<int, TorusElement> vars_;
  std::map<int, TorusElement> cheb_;
};

/// C_(-1,-1) = E_(-1,-1) - v^4 E_(1,1) = X_delta.
Report verify_kronecker_base(Kronecker& k);
/// C_(-r,-r) = S_r(X_delta) for 1 <= r <= rmax, the product form of S_r for
/// -1 <= r <= rmax, and bar-invariance of S_r.
Report verify_chebyshev_basis(Kronecker& k, int rmax);
/// C_{a1 alpha(m) + a2 alpha(m+1)} = v^{a1 a2} X_m^{a1} X_{m+1}^{a2}.
Report verify_cluster_labels(Kronecker& k, int m_lo, int m_hi, int a_max);
/// The four case formulas for v^{-a1} E_a X_0 - E_(a1,a2-1), a in [-w,w]^2.
Report verify_ea_x0_cases(Kronecker& k, int window);
/// Commutation and exchange relations, and the closed form of E_a.
Report verify_kronecker_relations(Kronecker& k, int window);
/// Supports of computed C-rows respect the componentwise order.
Report verify_sharper_order(Kronecker& k);

/// Everything above.
Report verify_kronecker(int rmax, int window = 3);

}  // namespace qca
