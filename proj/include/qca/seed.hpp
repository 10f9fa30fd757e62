#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qca/lattice.hpp"
#include "qca/torus.hpp"

namespace qca {

/// Quantum seed (m, n, B~, Lambda, d, order). Indices are 0-based; the
/// frozen rows are [n, m). `order` lists [0, n) in increasing order.
struct QuantumSeed {
  int m = 0;
  int n = 0;
  IntMatrix btilde;  // m x n
  IntMatrix lambda;  // m x m
  std::vector<int> d;
  std::vector<int> order;
  /// Expansion weight; derived from the seed when absent.
  std::optional<Lattice> weight;

  int b(int i, int j) const { return btilde(i, j); }
  Lattice column(int k) const { return btilde.column(k); }
  /// Throws std::invalid_argument if Lambda is not skew-symmetric.
  FormPtr form() const;

  friend bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
    return a.m == b.m && a.n == b.n && a.btilde == b.btilde && a.lambda == b.lambda && a.d == b.d &&
           a.order == b.order;
  }
};

struct SeedReport {
  bool valid = true;
  std::vector<std::string> violations;
  bool acyclic = false;
  bool order_compatible = false;
};

/// Checks shape, skew-symmetry, compatibility Lambda(b_j, e_i) = delta_ij d_j,
/// skew-symmetrizability, and that `order` is a permutation. Never throws on
/// bad data; every violation is listed.
SeedReport seed_validate(const QuantumSeed& s);

/// Gamma(B) on [0, n) has an edge j -> i when b_ij > 0.
bool seed_is_acyclic(const QuantumSeed& s);
/// b_ij <= 0 whenever i precedes j.
bool order_is_compatible(const QuantumSeed& s, const std::vector<int>& order);
/// All linear orders satisfying the sign condition, in lexicographic order.
std::vector<std::vector<int>> compatible_orders(const QuantumSeed& s);
/// Topological order of Gamma(B), breaking ties by position in `preferred`.
std::optional<std::vector<int>> topological_order(const QuantumSeed& s, const std::vector<int>& preferred);

/// Matrix mutation of B~ and of Lambda at k. The returned seed keeps the old
/// order when it stays compatible, otherwise k moves to the front (new
/// source) or back (new sink), falling back to a topological order.
QuantumSeed seed_mutate(const QuantumSeed& s, int k);

enum class VertexKind { Sink, Source, Neither };

struct VertexClassification {
  VertexKind exchange;  // in Gamma(B)
  VertexKind extended;  // in Gamma(B~), frozen rows included
};

/// Classification in Gamma(B). A vertex that is both reports Source.
VertexKind seed_is_sink_or_source(const QuantumSeed& s, int k);
VertexClassification classify_vertex(const QuantumSeed& s, int k);
std::string to_string(VertexKind kind);

/// m = 2n, B~ = [B; I], Lambda = [[0, -D], [D, -DB]].
/// Throws std::invalid_argument unless DB is skew-symmetric.
QuantumSeed principal_seed(const IntMatrix& b, const std::vector<int>& d);

/// 2m rows, B~ stacked on zeros, Lambda block diagonal (Lambda, -Lambda).
QuantumSeed double_seed(const QuantumSeed& s);

/// Exponent vectors (e_j, e_j) and (b_j^{>n}, -b_j^{<=n}) in Z^{2m}.
std::vector<Lattice> bullet_exponents(const QuantumSeed& s);
/// The 2n bullet generators as monomials over the double seed's form.
std::vector<TorusElement> bullet_generators(const QuantumSeed& s);

/// Weight w with w.b_k = lcm(d) for every exchange column:
/// w = sum_j -(lcm(d)/d_j) Lambda(e_j, .). Follows from compatibility.
Lattice default_weight(const QuantumSeed& s);
WeightOrder seed_weight_order(const QuantumSeed& s);

}  // namespace qca
