#include <doctest.h>

#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/properties.hpp"
#include "qca/worked/psi.hpp"
#include "qca/worked/rank2.hpp"
#include "support.hpp"

using namespace qca;
using qca::test::lp;

namespace {

void require_ok(const Report& rep) {
  INFO(rep.text());
  CHECK(rep.ok());
  CHECK(rep.passed() > 0);
}

}  // namespace

TEST_CASE("Kronecker cluster variables") {
  Kronecker k;
  const EBasis& basis = k.basis();
  CHECK(k.cluster_var(0) == basis.monomial({2, -1}) + basis.monomial({0, -1}));
  CHECK(k.cluster_var(3) == basis.monomial({-1, 2}) + basis.monomial({-1, 0}));
  const TorusElement one = TorusElement::one(basis.form());
  CHECK(k.cluster_var(3) * k.cluster_var(1) == lp("v^2") * (k.cluster_var(2) * k.cluster_var(2)) + one);
  CHECK(k.cluster_var(2) * k.cluster_var(1) == lp("v^2") * (k.cluster_var(1) * k.cluster_var(2)));
  CHECK_THROWS_AS(k.cluster_var(100), std::out_of_range);
  CHECK(Kronecker::alpha(1) == Lattice{1, 0});
  CHECK(Kronecker::alpha(2) == Lattice{0, 1});
  CHECK(Kronecker::alpha(0) == Lattice{0, -1});
  CHECK(Kronecker::alpha(3) == Lattice{-1, 0});
}

TEST_CASE("Chebyshev elements of X_delta") {
  Kronecker k;
  const TorusElement one = TorusElement::one(k.basis().form());
  CHECK(k.chebyshev(-1).is_zero());
  CHECK(k.chebyshev(0) == one);
  CHECK(k.chebyshev(1) == k.x_delta());
  CHECK(k.chebyshev(2) == k.x_delta() * k.x_delta() - one);
  CHECK(k.chebyshev(3) == k.x_delta() * k.chebyshev(2) - k.x_delta());
  for (int r = 0; r <= 4; ++r) CHECK(bar(k.chebyshev(r)) == k.chebyshev(r));
}

TEST_CASE("E_a X_0 cases") {
  Kronecker k;
  const EBasis& basis = k.basis();
  auto lhs = [&](int a1, int a2) {
    return basis.expand(LaurentPoly::v_power(-a1) * (basis.element({a1, a2}) * k.cluster_var(0)) -
                        basis.element({a1, a2 - 1}));
  };
  CHECK(lhs(0, -1).empty());
  CHECK(lhs(1, 1) == EExpansion{{{3, 0}, lp("v^2")}});
  CHECK(lhs(-1, 1) == EExpansion{{{1, 0}, lp("v^2")}, {{1, 2}, lp("v^6")}});
}

TEST_CASE("Kronecker suites") {
  Kronecker k;
  require_ok(verify_kronecker_base(k));
  require_ok(verify_chebyshev_basis(k, 3));
  require_ok(verify_cluster_labels(k, 0, 2, 1));
  require_ok(verify_ea_x0_cases(k, 2));
  require_ok(verify_kronecker_relations(k, 2));
  require_ok(verify_sharper_order(k));
}

TEST_CASE("crystal monomials") {
  const Rank2Principal r(1, 1);
  CHECK(r.crystal_M({0, 0, 0, 0, 0, 0, 0}) == TorusElement::one(r.basis().form()));
  CHECK(r.nu_explicit({0, 0, 0, 0, 0, 0, 0}) == 0);
  // m''1 = 0, m'1 m1 = m2 m'2 = 0
  const CrystalIndex mm{1, -1, 2, 0, 0, 1, 0};
  CHECK(in_I0(mm));
  CHECK(r.crystal_M(mm) == r.basis().element(Lattice{-2, -1, 1, -1}));
  CHECK(r.pi(mm) == Lattice{-2, -1, 1, -1});
  std::mt19937_64 rng(47);
  for (int b = 1; b <= 2; ++b)
    for (int c = 1; c <= b; ++c) {
      const Rank2Principal q(b, c);
      std::uniform_int_distribution<int> fr(-3, 3), nn(0, 3);
      for (int t = 0; t < 30; ++t) {
        const CrystalIndex m{fr(rng), fr(rng), nn(rng), nn(rng), nn(rng), nn(rng), nn(rng)};
        CHECK(q.nu_explicit(m) == q.nu_condition(m));
      }
    }
}

TEST_CASE("rank 2 suites") {
  std::mt19937_64 rng(53);
  const Rank2Principal r(1, 1);
  require_ok(verify_crystal_identities(r, 1, 40, rng));
  require_ok(verify_rank2_crystal(r, 1));
  require_ok(verify_rank2_phi(r, 1));
  require_ok(verify_rank2(2, 1, 1, 1, rng));
}

TEST_CASE("identity suites") {
  std::mt19937_64 rng(59);
  require_ok(verify_gaussian_identity(6));
  require_ok(verify_identities(5, 3, 2, 3, rng));
  require_ok(verify_principal_identities(rank2_principal_seed(1, 1)));
  require_ok(verify_principal_identities(principal_seed(IntMatrix(2, 2), {1, 1})));
  require_ok(verify_commutation_relations(principal_seed(IntMatrix::from_rows({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}), {1, 1, 1})));
  CHECK_THROWS_AS(verify_principal_identities(a11_seed()), std::invalid_argument);
}

TEST_CASE("random principal seeds respect the bounds") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    CHECK(s.n >= 1);
    CHECK(s.n <= 3);
    CHECK(seed_validate(s).valid);
    CHECK(seed_validate(s).order_compatible);
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j) CHECK(std::abs(s.b(i, j)) <= 2);
  }
}

TEST_CASE("psi maps") {
  const QuantumSeed s = a11_seed();
  for (std::size_t k = 0; k < 2; ++k) {
    const Lattice frozen = Lattice::unit(4, 2 + k);
    const Lattice bk = s.column(static_cast<int>(k));
    CHECK(psi_map(s, frozen) == Lattice(2).concat(-bk));
    CHECK(psi_prime_map(s, frozen) == Lattice(2).concat(-bk));
    const Lattice ek = Lattice::unit(2, k);
    CHECK(psi_map(s, Lattice::unit(4, k)) == ek.concat(ek));
  }
  std::mt19937_64 rng(67);
  require_ok(verify_psi(s, 10, 1, rng));
  require_ok(verify_psi(rank2_principal_seed(1, 1), 10, 1, rng));
  require_ok(verify_psi(principal_seed(IntMatrix::from_rows({{0, -2}, {2, 0}}), {2, 2}), 30, 1, rng));
}

TEST_CASE("property suites") {
  std::mt19937_64 rng(71);
  require_ok(verify_basis_properties(a11_seed(), 10, 2, rng));
  require_ok(verify_basis_properties(rank2_principal_seed(1, 1), 10, 1, rng));
  const QuantumSeed split = principal_seed(IntMatrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), {1, 1, 1});
  const Report swapped = verify_order_transposition(split, 5, 1, rng);
  require_ok(swapped);
  CHECK(verify_order_transposition(a11_seed(), 5, 1, rng).passed() == 0);
  require_ok(verify_frozen_shift(rank2_principal_seed(2, 1), 10, 1, rng));
}
