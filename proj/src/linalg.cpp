#include "orbitcy/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitcy {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (sgn(b) != 0) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: dimension mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: dimension mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r(*this);
  for (auto& x : r.data_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("stack: column mismatch");
  Matrix r(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) r(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) r(top.rows_ + i, j) = bottom(i, j);
  return r;
}

Matrix Matrix::concat(const Matrix& left, const Matrix& right) {
  if (left.cols_ == 0 && left.rows_ == 0) return right;
  if (right.cols_ == 0 && right.rows_ == 0) return left;
  if (left.rows_ != right.rows_) throw std::invalid_argument("concat: row mismatch");
  Matrix r(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) r(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r(i, left.cols_ + j) = right(i, j);
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && sgn(m(piv, c)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix c(m);
  return rref(c).size();
}

Matrix nullspace(const Matrix& m) {
  Matrix r(m);
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.cols(), basis);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug = Matrix::concat(m, Matrix::identity(n));
  if (n == 0) return Matrix();
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (sgn(c) == 0) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(row[j]) != 0) v[j] -= c * row[j];
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  if (v.size() != n_) throw std::invalid_argument("SpanBuilder: length mismatch");
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && sgn(r[p]) == 0) ++p;
  if (p == n_) return false;
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

Quotient::Quotient(std::size_t n, const std::vector<Vec>& spanning) {
  SpanBuilder sb(n);
  std::vector<Vec> sub;
  for (const auto& v : spanning)
    if (sb.add(v)) sub.push_back(v);
  for (std::size_t j = 0; j < n; ++j)
    if (sb.add(unit_vector(n, j))) chosen_.push_back(j);
  if (sub.empty()) {
    proj_ = Matrix(chosen_.size(), n);
    for (std::size_t k = 0; k < chosen_.size(); ++k) proj_(k, chosen_[k]) = 1;
    return;
  }
  std::vector<Vec> cols = sub;
  for (auto j : chosen_) cols.push_back(unit_vector(n, j));
  auto inv = inverse(Matrix::from_columns(n, cols));
  if (!inv) throw std::logic_error("Quotient: basis completion is singular");
  proj_ = Matrix(chosen_.size(), n);
  for (std::size_t k = 0; k < chosen_.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) proj_(k, j) = (*inv)(sub.size() + k, j);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace orbitcy
