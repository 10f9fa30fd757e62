#pragma once

#include <random>

#include "qca/lattice.hpp"
#include "qca/laurent.hpp"
#include "qca/torus.hpp"

namespace qca::test {

inline LaurentPoly lp(const char* text) { return LaurentPoly::parse(text); }

inline FormPtr form_of(const std::vector<std::vector<int>>& rows) {
  return std::make_shared<const SkewForm>(IntMatrix::from_rows(rows));
}

// the A11 torus: Lambda(e1, e2) = -1
inline FormPtr a11_form() { return form_of({{0, -1}, {1, 0}}); }

inline TorusElement mono(const FormPtr& f, Lattice e, LaurentPoly c = LaurentPoly(1)) {
  return TorusElement::monomial(f, std::move(e), std::move(c));
}

inline Lattice random_lattice(std::mt19937_64& rng, std::size_t m, int w) {
  std::uniform_int_distribution<int> pick(-w, w);
  Lattice a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = pick(rng);
  return a;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> e(-4, 4), c(-3, 3);
  LaurentPoly out;
  for (int t = 0; t < terms; ++t) out += LaurentPoly::monomial(c(rng), e(rng));
  return out;
}

inline TorusElement random_element(std::mt19937_64& rng, const FormPtr& f, int terms, int w = 2) {
  TorusElement x(f);
  for (int t = 0; t < terms; ++t) x.add_term(random_lattice(rng, static_cast<std::size_t>(f->dim()), w), random_poly(rng, 2));
  return x;
}

}  // namespace qca::test
