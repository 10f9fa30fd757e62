// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qca/lusztig.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/properties.hpp"
#include "qca/worked/psi.hpp"
#include "qca/worked/rank2.hpp"

using namespace qca;

namespace {

constexpr std::uint64_t kRngSeed = 20240601;

bool verbose = false;

bool run(int id, const char* what, double limit_s, const std::function<Report()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  std::string error;
  try {
    rep = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = error.empty() && rep.ok() && rep.passed() > 0 && secs < limit_s;
  std::printf("%s criterion %d: %s  [%ld checks, %.2fs, limit %.0fs]\n", ok ? "PASS" : "FAIL", id, what, rep.passed(),
              secs, limit_s);
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  if (!ok || verbose) {
    for (const auto& c : rep.checks())
      if (!c.ok() || verbose)
        std::printf("    %s %s (%ld/%ld)%s%s\n", c.ok() ? "ok  " : "FAIL", c.name.c_str(), c.failed,
                    c.passed + c.failed, c.first_failure.empty() ? "" : " first: ", c.first_failure.c_str());
  }
  std::fflush(stdout);
  return ok;
}

std::vector<Lattice> rank2_window() { return box({-2, -2, 0, 0}, {2, 2, 0, 0}); }

}  // namespace

int main(int argc, char** argv) {
  verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  Kronecker k;

  failed += !run(1, "A11 base case C(-1,-1) = E(-1,-1) - v^4 E(1,1) = X_delta", 1, [&] { return verify_kronecker_base(k); });

  failed += !run(2, "C(-r,-r) = S_r(X_delta) for r <= 4, product form for r <= 4", 60,
                 [&] { return verify_chebyshev_basis(k, 4); });

  failed += !run(3, "cluster monomial labels for m in [-1,3], a_i in [0,2]", 60,
                 [&] { return verify_cluster_labels(k, -1, 3, 2); });

  failed += !run(4, "E_a X_0 case formulas on [-3,3]^2", 30, [&] { return verify_ea_x0_cases(k, 3); });

  failed += !run(5, "rank 2 principal c-conditions and phi, (b,c) in {(1,1),(2,1),(2,2)}", 300, [] {
    Report rep;
    for (auto [b, c] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) rep.merge(verify_rank2_phi(Rank2Principal(b, c), 2));
    return rep;
  });

  failed += !run(6, "C'_a = C_phi(a) on [-2,2]^2 x 0 for (b,c) in {(1,1),(2,1)}", 300, [] {
    Report rep;
    for (auto [b, c] : {std::pair{1, 1}, std::pair{2, 1}})
      rep.merge(compare_bases(MutationPair(rank2_principal_seed(b, c)), rank2_window()));
    return rep;
  });

  failed += !run(7, "commutation, Gaussian, crystal, principal and nu identities", 300, [] {
    std::mt19937_64 rng(kRngSeed);
    Report rep = verify_identities(20, 3, 2, 6, rng);
    for (auto [b, c] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
      const Rank2Principal r(b, c);
      rep.merge(verify_crystal_identities(r, 2, 200, rng));
      rep.merge(verify_rank2_crystal(r, 2));
    }
    return rep;
  });

  failed += !run(8, "structural properties, transposition, frozen shift, psi", 600, [] {
    std::mt19937_64 rng(kRngSeed);
    Report rep;
    std::vector<QuantumSeed> seeds{a11_seed(), rank2_principal_seed(1, 1), rank2_principal_seed(2, 1),
                                   random_principal_seed(rng, 3, 2)};
    for (const QuantumSeed& s : seeds) rep.merge(verify_basis_properties(s, 100, 2, rng));
    const QuantumSeed split = principal_seed(IntMatrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), {1, 1, 1});
    rep.merge(verify_order_transposition(split, 20, 1, rng));
    rep.merge(verify_frozen_shift(rank2_principal_seed(1, 1), 25, 2, rng));
    rep.merge(verify_frozen_shift(rank2_principal_seed(2, 1), 25, 2, rng));
    rep.merge(verify_psi(a11_seed(), 50, 1, rng));
    return rep;
  });

  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
