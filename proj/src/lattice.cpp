#include "qca/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qca {

bool Lattice::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Lattice& Lattice::operator+=(const Lattice& o) {
  if (o.size() != size()) throw std::invalid_argument("lattice dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Lattice& Lattice::operator-=(const Lattice& o) {
  if (o.size() != size()) throw std::invalid_argument("lattice dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Lattice operator*(int k, Lattice a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

Lattice Lattice::operator-() const { return -1 * *this; }

Lattice Lattice::head(std::size_t n) const {
  Lattice r = *this;
  for (std::size_t i = n; i < r.size(); ++i) r[i] = 0;
  return r;
}

Lattice Lattice::tail(std::size_t n) const {
  Lattice r = *this;
  for (std::size_t i = 0; i < std::min(n, r.size()); ++i) r[i] = 0;
  return r;
}

Lattice Lattice::concat(const Lattice& f) const {
  std::vector<int> out = c_;
  out.insert(out.end(), f.c_.begin(), f.c_.end());
  return Lattice(std::move(out));
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Lattice& e) { return os << e.to_string(); }

Lattice plus_part(const Lattice& a) {
  Lattice r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], 0);
  return r;
}

int r_of(const Lattice& a, std::size_t n) {
  if (n > a.size()) throw std::invalid_argument("r_of: n exceeds dimension");
  int r = 0;
  for (std::size_t k = 0; k < n; ++k) r += std::max(-a[k], 0);
  return r;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Lattice IntMatrix::column(int j) const {
  Lattice v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Lattice IntMatrix::row(int i) const {
  Lattice v(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

SkewForm::SkewForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("skew form must be square");
  for (int i = 0; i < matrix_.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (matrix_(i, j) != -matrix_(j, i))
        throw std::invalid_argument("matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
}

std::int64_t SkewForm::operator()(const Lattice& e, const Lattice& f) const {
  const int m = dim();
  std::int64_t s = 0;
  for (int i = 0; i < m; ++i) {
    if (e[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < m; ++j) row += static_cast<std::int64_t>(matrix_(i, j)) * f[j];
    s += e[i] * row;
  }
  return s;
}

std::vector<std::int64_t> SkewForm::row_image(const Lattice& e) const {
  const int m = dim();
  std::vector<std::int64_t> out(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (e[i] == 0) continue;
    for (int j = 0; j < m; ++j) out[j] += static_cast<std::int64_t>(e[i]) * matrix_(i, j);
  }
  return out;
}

std::int64_t dot(std::span<const std::int64_t> a, const Lattice& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t WeightOrder::weight(const Lattice& e) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) s += static_cast<std::int64_t>(w_[i]) * e[i];
  return s;
}

bool WeightOrder::less(const Lattice& e, const Lattice& f) const {
  const auto we = weight(e);
  const auto wf = weight(f);
  if (we != wf) return we < wf;
  return e < f;
}

}  // namespace qca
