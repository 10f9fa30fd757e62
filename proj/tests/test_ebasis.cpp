#include <doctest.h>

#include "qca/ebasis.hpp"
#include "qca/error.hpp"
#include "qca/mutation.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/rank2.hpp"
#include "support.hpp"

using namespace qca;
using qca::test::lp;

namespace {

TorusElement a11_e_minus(const EBasis& basis) {
  TorusElement e(basis.form());
  e.add_term({1, 1}, lp("v^4"));
  e.add_term({-1, 1}, 1);
  e.add_term({1, -1}, 1);
  e.add_term({-1, -1}, 1);
  return e;
}

}  // namespace

TEST_CASE("exchange vectors and X'_k in the A11 seed") {
  const EBasis basis(a11_seed());
  CHECK(basis.e_prime(0) == Lattice{-1, 2});
  CHECK(basis.e_prime(1) == Lattice{0, -1});
  CHECK(basis.x_prime(1) == basis.monomial({0, -1}) + basis.monomial({2, -1}));
  CHECK(basis.x_prime(0) == basis.monomial({-1, 2}) + basis.monomial({-1, 0}));
  for (int k = 0; k < 2; ++k) CHECK(bar(basis.x_prime(k)) == basis.x_prime(k));
}

TEST_CASE("X'_k for a zero column") {
  const EBasis basis(principal_seed(IntMatrix(2, 2), {1, 1}));
  // b_1 = e_3, so X'_1 = X^{-e_1 + e_3} + X^{-e_1}
  CHECK(basis.e_prime(0) == Lattice{-1, 0, 1, 0});
  CHECK(basis.x_prime(0) == basis.monomial({-1, 0, 1, 0}) + basis.monomial({-1, 0, 0, 0}));
}

TEST_CASE("rank 2 principal X'_1") {
  for (int c = 1; c <= 2; ++c) {
    const Rank2Principal r(1, c);
    CHECK(r.x1p() == r.basis().monomial({-1, c, 1, 0}) + r.basis().monomial({-1, 0, 0, 0}));
  }
}

TEST_CASE("standard monomials in the A11 seed") {
  const EBasis basis(a11_seed());
  CHECK(basis.standard_monomial({-1, -1}) == lp("v^-1") * a11_e_minus(basis));
  CHECK(basis.nu({-1, -1}) == 1);
  CHECK(basis.element({-1, -1}) == a11_e_minus(basis));
  CHECK(basis.element({-1, -1}) == lp("v") * (basis.x_prime(0) * basis.x_prime(1)));
  const TorusElement x1 = basis.monomial({1, 0}), x2 = basis.monomial({0, 1});
  CHECK(basis.element({1, 1}) == lp("v") * (x1 * x2));
  CHECK(basis.element({1, 1}) == basis.monomial({1, 1}));
  CHECK(basis.nu({3, 2}) == 0);
  CHECK(basis.element({0, 0}) == TorusElement::one(basis.form()));
}

TEST_CASE("E_a is bar-invariant at its leading term, and nonnegative labels give monomials") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    const EBasis basis(s);
    for (int i = 0; i < 10; ++i) {
      Lattice a = test::random_lattice(rng, static_cast<std::size_t>(s.m), 2);
      const auto [lt, c] = leading_monomial(basis.element(a), basis.weight_order());
      CHECK(lt == basis.lead(a));
      CHECK(c == LaurentPoly(1));
      CHECK(basis.lead_inverse(basis.lead(a)) == a);
      for (int k = 0; k < s.n; ++k) a[static_cast<std::size_t>(k)] = std::abs(a[static_cast<std::size_t>(k)]);
      CHECK(basis.element(a) == basis.monomial(a));
    }
  }
}

TEST_CASE("lead inverse") {
  const EBasis basis(a11_seed());
  CHECK(basis.lead_inverse({-1, 1}) == Lattice{-1, -1});
  const EBasis zero(principal_seed(IntMatrix(2, 2), {1, 1}));
  CHECK(zero.lead_inverse({2, 0, 1, -1}) == Lattice{2, 0, 1, -1});
}

TEST_CASE("expansion in the E basis") {
  const EBasis basis(a11_seed());
  CHECK(basis.expand(basis.element({2, -3})) == EExpansion{{{2, -3}, LaurentPoly(1)}});
  CHECK(basis.expand(bar(basis.element({-1, -1}))) ==
        EExpansion{{{-1, -1}, LaurentPoly(1)}, {{1, 1}, lp("v^-4 - v^4")}});
  Kronecker k;
  CHECK(basis.expand(k.x_delta()) == EExpansion{{{-1, -1}, LaurentPoly(1)}, {{1, 1}, lp("-v^4")}});
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    EExpansion coeffs;
    for (int i = 0; i < 3; ++i) coeffs[test::random_lattice(rng, 2, 2)] += test::random_poly(rng, 2);
    std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(basis.expand(basis.assemble(coeffs)) == coeffs);
  }
}

TEST_CASE("r-rows") {
  const EBasis basis(a11_seed());
  CHECK(basis.r_row({2, 0}).empty());
  CHECK(basis.r_row({-1, -1}) == EExpansion{{{1, 1}, lp("v^-4 - v^4")}});
  CHECK(to_string(EExpansion{{{-1, -1}, LaurentPoly(1)}, {{1, 1}, lp("-v^4")}}) == "E(-1,-1) - v^4 E(1,1)");
}

TEST_CASE("mutated monomials and X''_k") {
  const MutationPair pair(a11_seed());
  CHECK(pair.index() == 1);
  const EBasis& basis = pair.initial();
  CHECK(pair.mutated_monomial({1, 0}) == basis.monomial({1, 0}));
  CHECK(pair.mutated_monomial({0, 1}) == basis.x_prime(1));
  CHECK_THROWS_AS(pair.mutated_monomial({0, -1}), Error);

  std::mt19937_64 rng(37);
  const SkewForm& mu_form = *pair.mutated().form();
  for (int t = 0; t < 20; ++t) {
    Lattice g = test::random_lattice(rng, 2, 2), h = test::random_lattice(rng, 2, 2);
    g[1] = std::abs(g[1]);
    h[1] = std::abs(h[1]);
    CHECK(pair.mutated_monomial(g) * pair.mutated_monomial(h) ==
          pair.mutated_monomial(g + h, LaurentPoly::v_power(static_cast<int>(mu_form(g, h)))));
  }

  // b_{lk} = 0 gives X''_k = X'_k
  const MutationPair flat(principal_seed(IntMatrix(2, 2), {1, 1}));
  CHECK(flat.x_double_prime(0) == flat.initial().x_prime(0));

  for (int b = 1; b <= 2; ++b)
    for (int c = 1; c <= 2; ++c) {
      const Rank2Principal r(b, c);
      TorusElement expect = r.x1p() * r.basis().x_prime_power(1, c);
      for (int s = 1; s <= c; ++s)
        expect -= (LaurentPoly::v_power(b * s * s) * substitute_power(gaussian_binomial(c, s), 2 * b)) *
                  r.basis().monomial({b * s - 1, 0, 1, c - s});
      CHECK(r.x1pp() == expect);
      CHECK(r.x1() * r.x1pp() ==
            LaurentPoly::v_power(-c) * r.basis().monomial({0, 0, 1, c}) + r.basis().x_prime_power(1, c));
    }
}

TEST_CASE("E' on unit labels") {
  const MutationPair pair(rank2_principal_seed(1, 2));
  const EBasis& basis = pair.initial();
  CHECK(pair.eprime_element({0, 1, 0, 0}) == basis.x_prime(1));
  CHECK(pair.eprime_element({0, -1, 0, 0}) == basis.monomial({0, 1, 0, 0}));
  for (std::size_t i = 2; i < 4; ++i) {
    const Lattice e = Lattice::unit(4, i);
    CHECK(pair.eprime_element(e) == basis.monomial(e));
    CHECK(pair.eprime_element(-e) == basis.monomial(-e));
  }
}
