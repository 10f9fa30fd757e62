#include "qca/seed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qca {

FormPtr QuantumSeed::form() const { return std::make_shared<const SkewForm>(lambda); }

namespace {

std::string pair_str(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

bool is_permutation_of_range(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int k : order) {
    if (k < 0 || k >= n || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

}  // namespace

SeedReport seed_validate(const QuantumSeed& s) {
  SeedReport rep;
  auto fail = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };

  if (s.n < 1 || s.m < s.n) fail("need m >= n >= 1");
  if (s.btilde.rows() != s.m || s.btilde.cols() != s.n) fail("B must be m x n");
  if (s.lambda.rows() != s.m || s.lambda.cols() != s.m) fail("Lambda must be m x m");
  if (static_cast<int>(s.d.size()) != s.n) fail("d must have n entries");
  if (!rep.valid) return rep;

  for (int j = 0; j < s.n; ++j)
    if (s.d[j] <= 0) fail("d_" + std::to_string(j + 1) + " must be positive");
  if (!is_permutation_of_range(s.order, s.n)) fail("order must be a permutation of [1,n]");

  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j <= i; ++j)
      if (s.lambda(i, j) != -s.lambda(j, i)) fail("skew-symmetry violated at " + pair_str(i, j));

  for (int j = 0; j < s.n; ++j) {
    for (int i = 0; i < s.m; ++i) {
      long value = 0;
      for (int l = 0; l < s.m; ++l) value += static_cast<long>(s.btilde(l, j)) * s.lambda(l, i);
      const long expected = (i == j) ? s.d[j] : 0;
      if (value != expected) {
        fail("compatibility Lambda(b_" + std::to_string(j + 1) + ", e_" + std::to_string(i + 1) +
             ") = " + std::to_string(value) + ", expected " + std::to_string(expected));
      }
    }
  }

  for (int j = 0; j < s.n; ++j)
    for (int k = 0; k < s.n; ++k)
      if (static_cast<long>(s.d[j]) * s.btilde(j, k) != -static_cast<long>(s.d[k]) * s.btilde(k, j))
        fail("skew-symmetrizability d_j b_jk = -d_k b_kj violated at " + pair_str(j, k));

  rep.acyclic = seed_is_acyclic(s);
  rep.order_compatible = is_permutation_of_range(s.order, s.n) && order_is_compatible(s, s.order);
  return rep;
}

std::optional<std::vector<int>> topological_order(const QuantumSeed& s, const std::vector<int>& preferred) {
  const int n = s.n;
  std::vector<int> rank(static_cast<std::size_t>(n));
  if (is_permutation_of_range(preferred, n)) {
    for (int p = 0; p < n; ++p) rank[preferred[p]] = p;
  } else {
    std::iota(rank.begin(), rank.end(), 0);
  }
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.b(i, j) > 0) ++indegree[i];  // edge j -> i
  std::vector<int> out;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && indegree[v] == 0 && (pick < 0 || rank[v] < rank[pick])) pick = v;
    if (pick < 0) return std::nullopt;
    done[pick] = true;
    out.push_back(pick);
    for (int i = 0; i < n; ++i)
      if (s.b(i, pick) > 0) --indegree[i];
  }
  return out;
}

bool seed_is_acyclic(const QuantumSeed& s) {
  std::vector<int> natural(static_cast<std::size_t>(s.n));
  std::iota(natural.begin(), natural.end(), 0);
  return topological_order(s, natural).has_value();
}

bool order_is_compatible(const QuantumSeed& s, const std::vector<int>& order) {
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q)
      if (s.b(order[p], order[q]) > 0) return false;
  return true;
}

std::vector<std::vector<int>> compatible_orders(const QuantumSeed& s) {
  std::vector<int> perm(static_cast<std::size_t>(s.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (order_is_compatible(s, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

QuantumSeed seed_mutate(const QuantumSeed& s, int k) {
  if (k < 0 || k >= s.n) throw std::out_of_range("seed_mutate: index " + std::to_string(k + 1) + " out of range");
  QuantumSeed t = s;
  t.weight.reset();
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (i == k || j == k) {
        t.btilde(i, j) = -s.b(i, j);
      } else {
        const int bik = s.b(i, k);
        const int bkj = s.b(k, j);
        t.btilde(i, j) = s.b(i, j) + std::max(bik, 0) * std::max(bkj, 0) - std::max(-bik, 0) * std::max(-bkj, 0);
      }
    }
  }

  // e'_k = -e_k + [b_k]_+ ; Lambda'(e_k, e_j) = Lambda(e'_k, e_j).
  Lattice ek = plus_part(s.column(k));
  ek[k] -= 1;
  for (int j = 0; j < s.m; ++j) {
    if (j == k) continue;
    long value = 0;
    for (int l = 0; l < s.m; ++l) value += static_cast<long>(ek[l]) * s.lambda(l, j);
    t.lambda(k, j) = static_cast<int>(value);
    t.lambda(j, k) = -static_cast<int>(value);
  }
  t.lambda(k, k) = 0;

  if (!order_is_compatible(t, t.order)) {
    std::vector<int> rest;
    for (int x : s.order)
      if (x != k) rest.push_back(x);
    std::vector<int> front = {k};
    front.insert(front.end(), rest.begin(), rest.end());
    std::vector<int> back = rest;
    back.push_back(k);
    if (order_is_compatible(t, front)) {
      t.order = front;
    } else if (order_is_compatible(t, back)) {
      t.order = back;
    } else if (auto topo = topological_order(t, s.order)) {
      t.order = *topo;
    }
  }
  return t;
}

namespace {

VertexKind classify_rows(const QuantumSeed& s, int k, int rows) {
  bool any_out = false;  // edge k -> i when b_ik > 0
  bool any_in = false;
  for (int i = 0; i < rows; ++i) {
    if (s.b(i, k) > 0) any_out = true;
    if (s.b(i, k) < 0) any_in = true;
  }
  if (!any_in) return VertexKind::Source;
  if (!any_out) return VertexKind::Sink;
  return VertexKind::Neither;
}

}  // namespace

VertexKind seed_is_sink_or_source(const QuantumSeed& s, int k) {
  if (k < 0 || k >= s.n) throw std::out_of_range("vertex out of range");
  return classify_rows(s, k, s.n);
}

VertexClassification classify_vertex(const QuantumSeed& s, int k) {
  if (k < 0 || k >= s.n) throw std::out_of_range("vertex out of range");
  return {classify_rows(s, k, s.n), classify_rows(s, k, s.m)};
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Sink: return "sink";
    case VertexKind::Source: return "source";
    case VertexKind::Neither: return "neither";
  }
  return "?";
}

QuantumSeed principal_seed(const IntMatrix& b, const std::vector<int>& d) {
  const int n = b.rows();
  if (b.cols() != n || static_cast<int>(d.size()) != n) throw std::invalid_argument("principal_seed: shape mismatch");
  for (int j = 0; j < n; ++j)
    if (d[j] <= 0) throw std::invalid_argument("principal_seed: d must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<long>(d[i]) * b(i, j) != -static_cast<long>(d[j]) * b(j, i))
        throw std::invalid_argument("principal_seed: DB is not skew-symmetric at " + pair_str(i, j));

  QuantumSeed s;
  s.n = n;
  s.m = 2 * n;
  s.d = d;
  s.btilde = IntMatrix(s.m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.btilde(i, j) = b(i, j);
  for (int j = 0; j < n; ++j) s.btilde(n + j, j) = 1;

  s.lambda = IntMatrix(s.m, s.m);
  for (int i = 0; i < n; ++i) {
    s.lambda(i, n + i) = -d[i];
    s.lambda(n + i, i) = d[i];
    for (int j = 0; j < n; ++j) s.lambda(n + i, n + j) = -d[i] * b(i, j);
  }

  std::vector<int> natural(static_cast<std::size_t>(n));
  std::iota(natural.begin(), natural.end(), 0);
  s.order = topological_order(s, natural).value_or(natural);
  return s;
}

QuantumSeed double_seed(const QuantumSeed& s) {
  QuantumSeed t;
  t.m = 2 * s.m;
  t.n = s.n;
  t.d = s.d;
  t.order = s.order;
  t.btilde = IntMatrix(t.m, t.n);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.n; ++j) t.btilde(i, j) = s.b(i, j);
  t.lambda = IntMatrix(t.m, t.m);
  for (int i = 0; i < s.m; ++i) {
    for (int j = 0; j < s.m; ++j) {
      t.lambda(i, j) = s.lambda(i, j);
      t.lambda(s.m + i, s.m + j) = -s.lambda(i, j);
    }
  }
  return t;
}

std::vector<Lattice> bullet_exponents(const QuantumSeed& s) {
  const auto m = static_cast<std::size_t>(s.m);
  const auto n = static_cast<std::size_t>(s.n);
  std::vector<Lattice> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(Lattice::unit(m, j).concat(Lattice::unit(m, j)));
  for (std::size_t j = 0; j < n; ++j) {
    const Lattice bj = s.column(static_cast<int>(j));
    out.push_back(bj.tail(n).concat(-bj.head(n)));
  }
  return out;
}

std::vector<TorusElement> bullet_generators(const QuantumSeed& s) {
  const auto form = double_seed(s).form();
  std::vector<TorusElement> out;
  for (auto& e : bullet_exponents(s)) out.push_back(TorusElement::monomial(form, e));
  return out;
}

Lattice default_weight(const QuantumSeed& s) {
  int l = 1;
  for (int dj : s.d) l = std::lcm(l, dj);
  Lattice w(static_cast<std::size_t>(s.m));
  for (int j = 0; j < s.n; ++j) {
    const int scale = l / s.d[j];
    for (int i = 0; i < s.m; ++i) w[i] -= scale * s.lambda(j, i);
  }
  return w;
}

WeightOrder seed_weight_order(const QuantumSeed& s) { return WeightOrder(s.weight.value_or(default_weight(s))); }

}  // namespace qca
