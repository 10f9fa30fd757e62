#pragma once

#include <random>
#include <vector>

#include "qca/report.hpp"
#include "qca/seed.hpp"

namespace qca {

/// Labels of the principal basis inside the double seed: Z^{2n} -> Z^{2m},
/// linear on each orthant of the exchange part and additive in the frozen part.
/// The seed must be in natural order.
Lattice psi_map(const QuantumSeed& s, const Lattice& a);
/// Same for the mutated bases (mutation at the last index).
Lattice psi_prime_map(const QuantumSeed& s, const Lattice& a);

/// The bullet torus sits inside the double torus with the principal form;
/// E_a and E'_a of the principal seed land on E_psi(a) and E'_psi'(a) of the
/// double seed for every sample a in Z^{2n}.
Report verify_psi_embedding(const QuantumSeed& s, const std::vector<Lattice>& samples);

/// `count` random samples with entries in [-window, window].
Report verify_psi(const QuantumSeed& s, int count, int window, std::mt19937_64& rng);

}  // namespace qca
