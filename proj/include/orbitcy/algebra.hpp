#pragma once

#include <string>
#include <vector>

#include "orbitcy/linalg.hpp"

namespace orbitcy {

// A basic finite-dimensional algebra given by structure constants in a basis
// of Peirce-homogeneous elements: basis element b lies in e_tgt[b] A e_src[b].
// Products use composition order: mult(a, b) = a o b (b acts first), which is
// nonzero only when src[a] == tgt[b].
struct AlgebraTable {
  int vertices = 0;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> labels;  // one per basis element
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<int> idem;                 // basis index of e_v
  std::vector<std::vector<Vec>> mult;    // empty Vec means zero

  std::size_t dim() const { return labels.size(); }
  Vec mul(const Vec& x, const Vec& y) const;
  const Vec& product(std::size_t a, std::size_t b) const;
  Vec one() const;
  // Every triple of basis elements; also checks that sum e_v acts as identity.
  bool associative() const;
  // Coordinates restricted to the block e_j A e_i (others set to zero).
  Vec block(const Vec& x, int i, int j) const;
  std::vector<std::size_t> block_indices(int i, int j) const;
};

// Basis of rad A as vectors, via the trace form (characteristic zero).
std::vector<Vec> jacobson_radical(const AlgebraTable& a);
// Echelon basis of the products span{x o y : x in u, y in v}.
std::vector<Vec> product_space(const AlgebraTable& a, const std::vector<Vec>& u, const std::vector<Vec>& v);
// dim rad^k for k = 1, 2, ... until zero (the last entry is 0).
std::vector<int> radical_layers(const AlgebraTable& a);

}  // namespace orbitcy
