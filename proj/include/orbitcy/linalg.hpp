#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitcy {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Vec apply(const Vec& x) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  // Vertical and horizontal concatenation; empty operands are allowed.
  static Matrix stack(const Matrix& top, const Matrix& bottom);
  static Matrix concat(const Matrix& left, const Matrix& right);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c*x
Vec unit_vector(std::size_t n, std::size_t i);

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);
// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// Incremental echelon basis of a subspace of Q^n. Rows are kept with
// normalized pivots and each row vanishes at the pivots of earlier rows.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  // Returns true iff v was independent of the current span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  Vec reduce(Vec v) const;
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Quotient of Q^n by a subspace U, with a basis of standard vectors picked
// greedily in index order. project() maps Q^n onto the quotient coordinates.
class Quotient {
 public:
  Quotient(std::size_t n, const std::vector<Vec>& spanning);

  std::size_t dim() const { return chosen_.size(); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }
  // dim() x n matrix sending e_j to its class.
  const Matrix& projection() const { return proj_; }

 private:
  std::vector<std::size_t> chosen_;
  Matrix proj_;
};

std::string to_string(const Rational& q);

}  // namespace orbitcy
