#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qca/seed.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Coefficients c_a of an element written as sum c_a E_a. No zero entries.
using EExpansion = std::map<Lattice, LaurentPoly>;

/// "E(-1,-1) - v^4 E(1,1)".
std::string to_string(const EExpansion& x);

inline constexpr long kDefaultExpansionCap = 100'000;

/// The standard monomial basis {E_a} of an acyclic seed with a compatible
/// order. Computed elements and r-rows are memoized; all methods are safe to
/// call from several threads.
class EBasis {
public:
  /// Throws Error unless the seed is valid and its order compatible, or if
  /// a stored weight fails w.b_k > 0.
  explicit EBasis(QuantumSeed seed);

  const QuantumSeed& seed() const { return seed_; }
  const FormPtr& form() const { return form_; }
  const WeightOrder& weight_order() const { return order_; }
  int m() const { return seed_.m; }
  int n() const { return seed_.n; }

  Lattice e_prime(int k) const;
  TorusElement x_prime(int k) const;
  /// (X'_k)^p, memoized.
  TorusElement x_prime_power(int k, int p) const;
  TorusElement monomial(const Lattice& e, const LaurentPoly& c = LaurentPoly(1)) const;

  /// Exponent of LT(E_a): a^{>n} + [a]_+^{<=n} + sum_k [-a_k]_+ e'_k.
  Lattice lead(const Lattice& a) const;
  /// Inverse of lead, solved row by row along the order.
  Lattice lead_inverse(const Lattice& t) const;
  /// Exponents of the LT factors of E_a in product order.
  std::vector<Lattice> lead_factors(const Lattice& a) const;
  int nu(const Lattice& a) const;

  /// E_a without the normalizing power of v.
  TorusElement standard_monomial(const Lattice& a) const;
  /// E_a = v^{nu(a)} E_a°.
  TorusElement element(const Lattice& a) const;

  /// Greedy expansion in {E_a}. Throws NotDivisible if the cap is hit.
  EExpansion expand(const TorusElement& x, long cap = kDefaultExpansionCap) const;
  TorusElement assemble(const EExpansion& coeffs) const;

  /// bar(E_a) - E_a in the E-basis.
  EExpansion r_row(const Lattice& a) const;

private:
  QuantumSeed seed_;
  FormPtr form_;
  WeightOrder order_;
  std::vector<Lattice> e_prime_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, TorusElement> powers_;
  mutable std::map<Lattice, TorusElement> elements_;
  mutable std::map<Lattice, EExpansion> r_rows_;
};

/// Standard form (X)^g = v^{-sum_{i<j} g_i g_j lambda_ij} X_1^{g_1} ... X_m^{g_m}
/// over an arbitrary form; used by the mutation transport.
int normal_order_shift(const SkewForm& form, const Lattice& g);

}  // namespace qca
