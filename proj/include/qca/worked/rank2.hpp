#pragma once

#include <array>
#include <map>
#include <mutex>
#include <random>

#include "qca/lusztig.hpp"
#include "qca/mutation.hpp"
#include "qca/report.hpp"

namespace qca {

/// B~ = [[0,-b],[c,0],[1,0],[0,1]], d = (c,b).
QuantumSeed rank2_principal_seed(int b, int c);

/// (m3, m4, m'1, m2, m1, m'2, m''1); the last five are >= 0.
using CrystalIndex = std::array<int, 7>;

/// Crystal monomials M_m = v^{nu(m)} X^(0,0,m3,m4) X'_1^{m'1} X_2^{m2} X_1^{m1} X'_2^{m'2} X''_1^{m''1}
/// for the rank 2 principal seed.
class Rank2Principal {
public:
  Rank2Principal(int b, int c);

  int b() const { return b_; }
  int c() const { return c_; }
  const MutationPair& pair() const { return pair_; }
  const EBasis& basis() const { return pair_.initial(); }

  TorusElement x1() const;
  TorusElement x2() const;
  TorusElement x1p() const;
  TorusElement x2p() const;
  TorusElement x1pp() const;

  /// Unnormalized product.
  TorusElement crystal_M_circ(const CrystalIndex& mm) const;
  TorusElement crystal_M(const CrystalIndex& mm) const;
  /// nu from bar-invariance of v^{nu - c m'1 m''1} LT(M°).
  int nu_condition(const CrystalIndex& mm) const;
  /// Closed polynomial form of nu.
  int nu_explicit(const CrystalIndex& mm) const;
  /// Defined on m'1 m1 m''1 = 0.
  Lattice pi(const CrystalIndex& mm) const;

  /// Closed product forms of E_a and E'_a.
  TorusElement e_closed(const Lattice& a) const;
  TorusElement eprime_closed(const Lattice& a) const;

private:
  TorusElement tail_product(const std::array<int, 5>& p) const;

  int b_;
  int c_;
  MutationPair pair_;
  TorusElement x1pp_;
  mutable std::mutex mu_;
  mutable std::map<std::array<int, 5>, TorusElement> tails_;
};

bool in_I0(const CrystalIndex& mm);

/// Seed data, exchange relations, normalizations and the four reduction
/// identities for entries bounded by `bound`; nu on `nu_samples` random indices.
Report verify_crystal_identities(const Rank2Principal& r, int bound, int nu_samples, std::mt19937_64& rng);
/// Coefficient structure of M_m in the E-basis: on I0 a single coefficient 1,
/// at pi(m), the rest in vZ[v]; off I0 everything in vZ[v]. Also the
/// reduction m -> m^- preserving pi.
Report verify_rank2_crystal(const Rank2Principal& r, int bound, int jobs = 0);
/// c-conditions of E'_a with unit exponent equal to phi(a), a in [-w,w]^2 x {0}^2.
Report verify_rank2_phi(const Rank2Principal& r, int window, int jobs = 0);

/// All of the above plus C'_a = C_phi(a) on the window.
Report verify_rank2(int b, int c, int window, int bound, std::mt19937_64& rng, int jobs = 0);

}  // namespace qca
