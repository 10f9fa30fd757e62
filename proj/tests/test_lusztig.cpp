#include <doctest.h>

#include "qca/lusztig.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/rank2.hpp"
#include "support.hpp"

using namespace qca;
using qca::test::lp;

TEST_CASE("solve_row in the A11 seed") {
  const EBasis basis(a11_seed());
  const TableRow one = solve_row(basis, {1, 1});
  CHECK(one.p.empty());
  CHECK(one.c == basis.element({1, 1}));

  const TableRow delta = solve_row(basis, {-1, -1});
  CHECK(delta.p == EExpansion{{{1, 1}, lp("-v^4")}});
  Kronecker k;
  CHECK(delta.c == k.x_delta());
  CHECK(bar(delta.c) == delta.c);

  const TorusElement s2 = k.x_delta() * k.x_delta() - TorusElement::one(basis.form());
  CHECK(solve_row(basis, {-2, -2}).c == s2);
  CHECK(solve_row(basis, {0, 0}).c == TorusElement::one(basis.form()));
}

TEST_CASE("C properties and a negative control") {
  const EBasis basis(a11_seed());
  TableRow row = solve_row(basis, {-2, -2});
  CHECK(verify_C_properties(basis, {-2, -2}, row).ok());
  CHECK(verify_C_properties(basis, {3, 1}, solve_row(basis, {3, 1})).ok());

  TableRow bad = row;
  bad.p.begin()->second += lp("v^-1");
  bad.c = basis.element({-2, -2}) + basis.assemble(bad.p);
  CHECK_FALSE(verify_C_properties(basis, {-2, -2}, bad).ok());
}

TEST_CASE("cluster monomials") {
  TriangularTable table(std::make_shared<const EBasis>(a11_seed()));
  CHECK(table.compute_C({2, 1}) == table.basis().monomial({2, 1}));
  const TorusElement x1 = table.basis().monomial({1, 0}), x2 = table.basis().monomial({0, 1});
  CHECK(table.compute_C({2, 1}) == lp("v^2") * (x1 * x1 * x2));
  CHECK(cluster_monomial_check(table, {2, 1}));
  CHECK(cluster_monomial_check(table, {0, 0}));
  CHECK_THROWS_AS(cluster_monomial_check(table, {-1, 0}), std::invalid_argument);

  TriangularTable frozen(std::make_shared<const EBasis>(rank2_principal_seed(1, 1)));
  CHECK(frozen.compute_C({0, 0, -2, 3}) == frozen.basis().monomial({0, 0, -2, 3}));
}

TEST_CASE("tie order does not change the row") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 5; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 2, 2);
    const EBasis basis(s);
    for (int i = 0; i < 8; ++i) {
      const Lattice a = test::random_lattice(rng, static_cast<std::size_t>(s.m), 2);
      const TableRow up = solve_row(basis, a, TieOrder::Ascending);
      const TableRow down = solve_row(basis, a, TieOrder::Descending);
      CHECK(up.p == down.p);
      CHECK(up.c == down.c);
    }
  }
}

TEST_CASE("table memoizes and reports computed rows") {
  TriangularTable table(std::make_shared<const EBasis>(a11_seed()));
  int computed = 0;
  table.on_computed([&](const Lattice&, const TableRow&) { ++computed; });
  table.row({-1, -1});
  table.row({-1, -1});
  CHECK(computed == 1);
  CHECK(table.find({-1, -1}).has_value());
  CHECK_FALSE(table.find({-3, -1}).has_value());
}

TEST_CASE("phi for rank 2 principal seeds") {
  CHECK(phi_rank2_principal({-1, 0, 0, 0}, 1, 2) == Lattice{-1, -2, 0, 0});
  CHECK(phi_rank2_principal({2, 1, 3, -1}, 1, 2) == Lattice{2, -1, 3, -1});
  for (int c = 1; c <= 2; ++c) {
    const MutationPair pair(rank2_principal_seed(1, c));
    for (const Lattice& a : box({-2, -2, 0, 0}, {2, 2, 0, 0})) {
      const CConditions cc = check_c_conditions(pair, a);
      CHECK(cc.ok);
      REQUIRE(cc.unit.has_value());
      CHECK(*cc.unit == phi_rank2_principal(a, 1, c));
    }
  }
}

TEST_CASE("phi on unit labels of random principal seeds") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    const MutationPair pair(s);
    const int l = pair.index();
    const auto m = static_cast<std::size_t>(s.m);
    const auto unit_of = [&](const Lattice& a) { return *check_c_conditions(pair, a).unit; };
    CHECK(unit_of(Lattice::unit(m, static_cast<std::size_t>(l))) == -Lattice::unit(m, static_cast<std::size_t>(l)));
    CHECK(unit_of(-Lattice::unit(m, static_cast<std::size_t>(l))) == Lattice::unit(m, static_cast<std::size_t>(l)));
    for (int k = 0; k < s.n; ++k) {
      if (k == l) continue;
      CHECK(unit_of(Lattice::unit(m, static_cast<std::size_t>(k))) == Lattice::unit(m, static_cast<std::size_t>(k)));
      CHECK(unit_of(-Lattice::unit(m, static_cast<std::size_t>(k))) == pair.phi_minus_e(k));
    }
    for (int i = s.n; i < s.m; ++i) {
      CHECK(unit_of(Lattice::unit(m, static_cast<std::size_t>(i))) == Lattice::unit(m, static_cast<std::size_t>(i)));
      CHECK(unit_of(-Lattice::unit(m, static_cast<std::size_t>(i))) == -Lattice::unit(m, static_cast<std::size_t>(i)));
    }
  }
}

TEST_CASE("compare_bases on the A11 seed and a rank 2 principal seed") {
  const MutationPair a11(a11_seed());
  CHECK(compare_bases(a11, box({-2, -2}, {2, 2})).ok());
  const MutationPair r(rank2_principal_seed(1, 1));
  CHECK(compare_bases(r, box({-1, -1, 0, 0}, {1, 1, 0, 0})).ok());
}

TEST_CASE("box") {
  CHECK(box({-1, 0}, {1, 1}).size() == 6);
  CHECK(box({0}, {-1}).empty());
}
