#pragma once

#include <random>

#include "qca/report.hpp"
#include "qca/seed.hpp"

namespace qca {

/// Principal seed with n in [1, max_n], d_k in {1,2}, b_ij in [-max_entry, 0]
/// above the diagonal and |b_ji| <= max_entry below it. The natural order is
/// compatible.
QuantumSeed random_principal_seed(std::mt19937_64& rng, int max_n, int max_entry = 2);

/// Quasi-commutation of X_i with X'_k, and the two commutators X'_k X_k and X'_j X'_k.
Report verify_commutation_relations(const QuantumSeed& s);

/// prod_{p=1}^r (1 + u^{2p-1} X) = sum_s u^{s^2} [r choose s]_{u^2} X^s, X central.
Report verify_gaussian_identity(int rmax);

/// For a principal seed in natural order, mutated at the last index: the
/// products X_j X''_j, X'_j X_j, X_j X'_j, the expansion of X''_j, and the
/// easy values of E'_{+-e_i}.
Report verify_principal_identities(const QuantumSeed& principal);

/// `count` random principal seeds through both checks above, plus the
/// Gaussian identity up to `rmax`.
Report verify_identities(int count, int max_n, int max_entry, int rmax, std::mt19937_64& rng);

}  // namespace qca
