#pragma once

#include <random>

#include "qca/report.hpp"
#include "qca/seed.hpp"

namespace qca {

/// Random labels a in [-window, window]^m.
std::vector<Lattice> random_labels(const QuantumSeed& s, int count, int window, std::mt19937_64& rng);

/// For each label: expand(E_a) = {a: 1}; bar(E_a) - E_a supported on r(a') < r(a)
/// and consistent with bar being an involution; products stay in the
/// filtration; the C-row properties; and independence of the tie order.
Report verify_basis_properties(const QuantumSeed& s, int count, int window, std::mt19937_64& rng, int jobs = 0);

/// Swapping adjacent j, k in the order with b_jk = 0 leaves E_a and C_a unchanged.
/// Records nothing when the seed has no such pair.
Report verify_order_transposition(const QuantumSeed& s, int count, int window, std::mt19937_64& rng);

/// Expansion coefficients of E'_a in {E_a} are unchanged by a frozen shift a -> a + a_o,
/// and so is the unit key: phi(a + a_o) = phi(a) + a_o.
Report verify_frozen_shift(const QuantumSeed& s, int count, int window, std::mt19937_64& rng);

}  // namespace qca
