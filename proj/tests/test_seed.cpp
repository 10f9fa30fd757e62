#include <doctest.h>

#include <algorithm>

#include "qca/seed.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "qca/worked/rank2.hpp"
#include "support.hpp"

using namespace qca;

namespace {

QuantumSeed exchange_only(const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(b.size());
  QuantumSeed s;
  s.m = s.n = n;
  s.btilde = IntMatrix::from_rows(b);
  s.lambda = IntMatrix(n, n);
  s.d.assign(static_cast<std::size_t>(n), 1);
  for (int k = 0; k < n; ++k) s.order.push_back(k);
  return s;
}

}  // namespace

TEST_CASE("A11 seed validates and is acyclic") {
  const QuantumSeed s = a11_seed();
  const SeedReport rep = seed_validate(s);
  CHECK(rep.valid);
  CHECK(rep.acyclic);
  CHECK(rep.order_compatible);
  CHECK(compatible_orders(s) == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("violations are listed") {
  QuantumSeed s = a11_seed();
  s.lambda(0, 1) = 3;
  const SeedReport rep = seed_validate(s);
  CHECK_FALSE(rep.valid);
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                    [](const std::string& v) { return v.find("skew") != std::string::npos; }));
}

TEST_CASE("acyclicity and orders") {
  CHECK(compatible_orders(exchange_only({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})).size() == 6);
  // b21, b32, b13 > 0
  const QuantumSeed cyc = exchange_only({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  CHECK_FALSE(seed_is_acyclic(cyc));
  CHECK(compatible_orders(cyc).empty());
  CHECK_FALSE(topological_order(cyc, {0, 1, 2}).has_value());
}

TEST_CASE("sink and source classification") {
  CHECK(seed_is_sink_or_source(exchange_only({{0, 0}, {0, 0}}), 1) == VertexKind::Source);
  // path 1 -> 2 -> 3: b21 > 0, b32 > 0
  const QuantumSeed path = exchange_only({{0, -1, 0}, {1, 0, -1}, {0, 1, 0}});
  CHECK(seed_is_sink_or_source(path, 1) == VertexKind::Neither);
  CHECK(seed_is_sink_or_source(path, 0) == VertexKind::Source);
  CHECK(seed_is_sink_or_source(path, 2) == VertexKind::Sink);
  const QuantumSeed s = a11_seed();
  CHECK(seed_is_sink_or_source(s, 1) == VertexKind::Sink);
  CHECK(seed_is_acyclic(seed_mutate(s, 1)));
}

TEST_CASE("mutation") {
  const QuantumSeed mu = seed_mutate(a11_seed(), 0);
  CHECK(mu.btilde == IntMatrix::from_rows({{0, 2}, {-2, 0}}));
  CHECK(seed_validate(mu).valid);
  CHECK(seed_validate(mu).order_compatible);

  for (int b = 1; b <= 2; ++b)
    for (int c = 1; c <= 2; ++c) {
      const QuantumSeed mu2 = seed_mutate(rank2_principal_seed(b, c), 1);
      CHECK(mu2.btilde == IntMatrix::from_rows({{0, b}, {-c, 0}, {1, 0}, {c, -1}}));
    }

  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    for (int k = 0; k < s.n; ++k) {
      const QuantumSeed back = seed_mutate(seed_mutate(s, k), k);
      CHECK(back.btilde == s.btilde);
      CHECK(back.lambda == s.lambda);
      CHECK(seed_validate(seed_mutate(s, k)).valid);
    }
  }
}

TEST_CASE("principal seeds") {
  const QuantumSeed r = rank2_principal_seed(2, 1);
  CHECK(r.lambda == IntMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -2}, {1, 0, 0, 2}, {0, 2, -2, 0}}));
  const QuantumSeed z = principal_seed(IntMatrix(2, 2), {1, 1});
  CHECK(z.lambda == IntMatrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(seed_validate(z).valid);
  CHECK_THROWS_AS(principal_seed(IntMatrix::from_rows({{0, -1}, {2, 0}}), {1, 1}), std::invalid_argument);

  // X_i X_k = v^{2 d_i delta_{i,k+n}} X_k X_i
  const FormPtr f = r.form();
  for (int i = 0; i < r.m; ++i)
    for (int k = 0; k < r.n; ++k) {
      const auto ei = Lattice::unit(4, static_cast<std::size_t>(i)), ek = Lattice::unit(4, static_cast<std::size_t>(k));
      const int t = i == k + 2 ? r.d[static_cast<std::size_t>(k)] : 0;
      CHECK(verify_quasi_commute(test::mono(f, ei), test::mono(f, ek), t));
    }
}

TEST_CASE("double seed and bullet generators") {
  const QuantumSeed s = a11_seed();
  const QuantumSeed dbl = double_seed(s);
  CHECK(dbl.m == 4);
  CHECK(dbl.lambda == IntMatrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  CHECK(seed_validate(dbl).valid);

  const FormPtr f = s.form(), g = dbl.form();
  std::mt19937_64 rng(19);
  for (int t = 0; t < 20; ++t) {
    const Lattice e = test::random_lattice(rng, 2, 3), h = test::random_lattice(rng, 2, 3);
    const TorusElement small = test::mono(f, e) * test::mono(f, h);
    const TorusElement big = test::mono(g, e.concat(Lattice(2))) * test::mono(g, h.concat(Lattice(2)));
    CHECK(big == test::mono(g, (e + h).concat(Lattice(2)), small.terms().begin()->second));
  }

  const std::vector<Lattice> cols = bullet_exponents(s);
  REQUIRE(cols.size() == 4);
  const SkewForm& lam = *g;
  CHECK(lam(cols[0], cols[1]) == 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(lam(cols[static_cast<std::size_t>(2 + i)], cols[static_cast<std::size_t>(2 + j)]) ==
                                      s.d[static_cast<std::size_t>(j)] * s.b(j, i));
  // rank 4 over Q: the determinant is nonzero
  std::vector<std::vector<double>> a(4, std::vector<double>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a[i][j] = cols[j][i];
  double det = 1;
  for (std::size_t p = 0; p < 4; ++p) {
    std::size_t piv = p;
    for (std::size_t r = p; r < 4; ++r)
      if (std::abs(a[r][p]) > std::abs(a[piv][p])) piv = r;
    std::swap(a[p], a[piv]);
    det *= a[p][p];
    if (a[p][p] == 0) break;
    for (std::size_t r = p + 1; r < 4; ++r) {
      const double fct = a[r][p] / a[p][p];
      for (std::size_t c = p; c < 4; ++c) a[r][c] -= fct * a[p][c];
    }
  }
  CHECK(det != 0);
}

TEST_CASE("default weight is positive on exchange columns") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    const WeightOrder ord = seed_weight_order(s);
    for (int k = 0; k < s.n; ++k) CHECK(ord.weight(s.column(k)) > 0);
  }
}
