#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace qca {

/// Element of Z^m. Labels torus monomials and basis elements.
class Lattice {
public:
  Lattice() = default;
  explicit Lattice(std::size_t m) : c_(m, 0) {}
  Lattice(std::initializer_list<int> entries) : c_(entries) {}
  explicit Lattice(std::vector<int> entries) : c_(std::move(entries)) {}

  static Lattice unit(std::size_t m, std::size_t i) {
    Lattice e(m);
    e[i] = 1;
    return e;
  }

  std::size_t size() const { return c_.size(); }
  int& operator[](std::size_t i) { return c_[i]; }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<int>& entries() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const;

  Lattice& operator+=(const Lattice& o);
  Lattice& operator-=(const Lattice& o);
  friend Lattice operator+(Lattice a, const Lattice& b) { return a += b; }
  friend Lattice operator-(Lattice a, const Lattice& b) { return a -= b; }
  friend Lattice operator*(int k, Lattice a);
  Lattice operator-() const;

  friend auto operator<=>(const Lattice&, const Lattice&) = default;
  friend bool operator==(const Lattice&, const Lattice&) = default;

  /// Entries with index < n kept, the rest zeroed (the "<= n" truncation, 0-based).
  Lattice head(std::size_t n) const;
  /// Entries with index >= n kept, the rest zeroed (the "> n" truncation).
  Lattice tail(std::size_t n) const;
  /// Concatenation (e, f) in Z^{|e|+|f|}.
  Lattice concat(const Lattice& f) const;

  std::string to_string() const;

private:
  std::vector<int> c_;
};

std::ostream& operator<<(std::ostream& os, const Lattice& e);

/// Componentwise max(c, 0).
Lattice plus_part(const Lattice& a);

/// Sum over the first n components of max(-a_k, 0).
int r_of(const Lattice& a, std::size_t n);

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Lattice column(int j) const;
  Lattice row(int i) const;
  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

/// Integer skew-symmetric bilinear form on Z^m.
class SkewForm {
public:
  /// Throws std::invalid_argument unless the matrix is square and skew-symmetric.
  explicit SkewForm(IntMatrix matrix);

  int dim() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  std::int64_t operator()(const Lattice& e, const Lattice& f) const;
  /// Row vector e^T Lambda, so that (*this)(e, f) == dot(row_image(e), f).
  std::vector<std::int64_t> row_image(const Lattice& e) const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.matrix_ == b.matrix_; }

private:
  IntMatrix matrix_;
};

/// Total monomial order: compare w.e first, then lexicographically.
/// Compatible with addition, so leading terms multiply.
class WeightOrder {
public:
  WeightOrder() = default;
  explicit WeightOrder(Lattice w) : w_(std::move(w)) {}

  const Lattice& weights() const { return w_; }
  std::int64_t weight(const Lattice& e) const;
  /// True iff e is strictly smaller than f.
  bool less(const Lattice& e, const Lattice& f) const;

private:
  Lattice w_;
};

std::int64_t dot(std::span<const std::int64_t> a, const Lattice& b);

}  // namespace qca
