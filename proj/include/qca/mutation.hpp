#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "qca/ebasis.hpp"

namespace qca {

/// A seed s together with s' = mu_l(s), where l is the last index of the
/// order (a sink of Gamma(B)). s' gets the order l, then the rest of s's
/// order. Elements of the mutated torus are carried into the initial torus
/// through X'_i -> X_i (i != l), X'_l -> the exchange binomial.
class MutationPair {
public:
  explicit MutationPair(QuantumSeed s);

  const EBasis& initial() const { return *initial_; }
  const EBasis& mutated() const { return *mutated_; }
  int index() const { return ell_; }

  /// (X')^g written in the initial torus. Throws Error if g_l < 0.
  TorusElement mutated_monomial(const Lattice& g, const LaurentPoly& c = LaurentPoly(1)) const;
  /// Termwise image of an element of the mutated torus.
  TorusElement transport(const TorusElement& y) const;

  /// e''_k = -e_k + [b'_k]_+.
  Lattice e_double_prime(int k) const { return mutated_->e_prime(k); }
  /// X''_k by transport; X''_l = X_l.
  TorusElement x_double_prime(int k) const;
  /// phi(-e_k) = -e_k - b_lk e_l + [-b'_k]_+^{>n} - [-b_k]_+^{>n}, k != l.
  Lattice phi_minus_e(int k) const;
  /// X''_k from its E-expansion: E_{phi(-e_k)} minus the q-binomial tail.
  TorusElement x_double_prime_formula(int k) const;

  /// E'_a of the mutated seed, in the initial torus. Memoized.
  TorusElement eprime_element(const Lattice& a) const;

private:
  TorusElement x_double_prime_power(int k, int p) const;

  std::shared_ptr<const EBasis> initial_;
  std::shared_ptr<const EBasis> mutated_;
  int ell_ = 0;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, TorusElement> powers_;
  mutable std::map<Lattice, TorusElement> elements_;
};

/// Result of expanding E'_a in {E_a}: exactly one coefficient 1, the rest in vZ[v].
struct CConditions {
  bool ok = false;
  std::optional<Lattice> unit;
  EExpansion expansion;
};

CConditions check_c_conditions(const MutationPair& pair, const Lattice& a);

}  // namespace qca
