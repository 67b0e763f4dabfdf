#include "orbitcy/algebra.hpp"

#include <stdexcept>

namespace orbitcy {

namespace {
const Vec kEmpty;
}

const Vec& AlgebraTable::product(std::size_t a, std::size_t b) const {
  const Vec& v = mult[a][b];
  return v.empty() ? kEmpty : v;
}

Vec AlgebraTable::mul(const Vec& x, const Vec& y) const {
  Vec r(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (sgn(y[b]) == 0) continue;
      const Vec& p = mult[a][b];
      if (!p.empty()) axpy(r, x[a] * y[b], p);
    }
  }
  return r;
}

Vec AlgebraTable::one() const {
  Vec r(dim());
  for (int e : idem) r[static_cast<std::size_t>(e)] = 1;
  return r;
}

bool AlgebraTable::associative() const {
  const std::size_t n = dim();
  const Vec u = one();
  for (std::size_t a = 0; a < n; ++a) {
    Vec ea = unit_vector(n, a);
    if (mul(u, ea) != ea || mul(ea, u) != ea) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (src[a] != tgt[b]) continue;
      const Vec& ab = product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (src[b] != tgt[c]) continue;
        Vec left = mul(ab.empty() ? Vec(n) : ab, unit_vector(n, c));
        const Vec& bc = product(b, c);
        Vec right = mul(unit_vector(n, a), bc.empty() ? Vec(n) : bc);
        if (left != right) return false;
      }
    }
  return true;
}

std::vector<std::size_t> AlgebraTable::block_indices(int i, int j) const {
  std::vector<std::size_t> r;
  for (std::size_t b = 0; b < dim(); ++b)
    if (src[b] == i && tgt[b] == j) r.push_back(b);
  return r;
}

Vec AlgebraTable::block(const Vec& x, int i, int j) const {
  Vec r(dim());
  for (std::size_t b = 0; b < dim(); ++b)
    if (src[b] == i && tgt[b] == j) r[b] = x[b];
  return r;
}

std::vector<Vec> jacobson_radical(const AlgebraTable& a) {
  const std::size_t n = a.dim();
  // tr(L_c) for each basis element c.
  Vec tr(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec& p = a.product(c, b);
      if (!p.empty()) tr[c] += p[b];
    }
  Matrix gram(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec& p = a.product(x, y);
      if (p.empty()) continue;
      for (std::size_t c = 0; c < n; ++c) gram(x, y) += p[c] * tr[c];
    }
  Matrix ns = nullspace(gram);
  std::vector<Vec> rad;
  for (std::size_t k = 0; k < ns.cols(); ++k) rad.push_back(ns.column(k));
  // rad^(n+1) = 0 for an n-dimensional nilpotent ideal.
  std::vector<Vec> power = rad;
  for (std::size_t k = 0; k <= n && !power.empty(); ++k) power = product_space(a, power, rad);
  if (!power.empty()) throw std::runtime_error("jacobson_radical: trace radical is not nilpotent");
  return rad;
}

std::vector<Vec> product_space(const AlgebraTable& a, const std::vector<Vec>& u, const std::vector<Vec>& v) {
  SpanBuilder sb(a.dim());
  for (const auto& x : u)
    for (const auto& y : v) sb.add(a.mul(x, y));
  return sb.rows();
}

std::vector<int> radical_layers(const AlgebraTable& a) {
  std::vector<int> layers;
  const auto rad = jacobson_radical(a);
  std::vector<Vec> power = rad;
  while (true) {
    layers.push_back(static_cast<int>(power.size()));
    if (power.empty()) break;
    power = product_space(a, power, rad);
  }
  return layers;
}

}  // namespace orbitcy
