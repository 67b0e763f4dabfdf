#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcy/dynkin.hpp"
#include "orbitcy/linalg.hpp"

namespace orbitcy {

class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension-only hammock of Hom(X,-), obtained from the recursion
//   f(Z) = sum f(middles) - f(tau Z) + [Z = X] + [Z = Sigma X].
struct HammockTable {
  ZVertex source;
  Window window;
  int rank = 0;
  std::vector<int> f;  // indexed by (p - p_min) * rank + (v - 1)

  int at(ZVertex z) const;
  std::string to_json() const;
};

using ShiftRule = std::function<ZVertex(ZVertex, int)>;

HammockTable hammock(const DynkinDiagram& d, const Window& w, ZVertex x);
// Same recursion with the position of Sigma X supplied by `shift`.
HammockTable hammock(const DynkinDiagram& d, const Window& w, ZVertex x, const ShiftRule& shift);

// Hom(X,-) on the mesh category, built by knitting slice by slice:
// Hom(X,Z) = coker(Hom(X,tau Z) -> sum_i Hom(X,M_i)), plus the identity at Z = X.
// Each basis vector is a single path, recorded as a back pointer to the basis
// vector of Hom(X,M) it extends.
class HomTable {
 public:
  HomTable(const DynkinDiagram& d, ZVertex source, int p_max);

  ZVertex source() const { return source_; }
  int p_max() const { return p_max_; }
  bool covers(ZVertex z) const { return z.p >= source_.p && z.p <= p_max_; }

  int dim(ZVertex z) const;
  // Columns: coordinates in Hom(X,from) -> Hom(X,to). Null if not an arrow in range.
  const Matrix* action(ZVertex from, ZVertex to) const;
  std::vector<ZVertex> basis_path(ZVertex z, int k) const;
  Vec fold(Vec coords, const std::vector<ZVertex>& path) const;

 private:
  struct Rep {
    int prev = -1;  // index of the middle vertex, -1 for the identity
    int prev_k = 0;
  };
  struct Node {
    int dim = 0;
    std::vector<Rep> reps;
    std::vector<std::pair<int, Matrix>> in;  // (predecessor index, action)
  };

  int index(ZVertex z) const { return (z.p - source_.p) * rank_ + (z.v - 1); }
  ZVertex vertex(int idx) const { return {source_.p + idx / rank_, idx % rank_ + 1}; }

  ZVertex source_;
  int p_max_;
  int rank_;
  std::vector<Node> nodes_;
};

// The mesh category k(ZDelta) with cached Hom(X,-) tables for X = (0,v);
// other sources are handled by tau-translation.
class MeshCategory {
 public:
  explicit MeshCategory(DynkinDiagram d);

  const DynkinDiagram& diagram() const { return d_; }
  const HomTable& table(int v) const { return tables_[v - 1]; }
  // Largest slice offset the tables cover; Hom(X,Y) vanishes beyond it.
  int reach() const { return reach_; }

  int dim(ZVertex x, ZVertex y) const;
  std::vector<ZVertex> basis_path(ZVertex x, ZVertex y, int k) const;
  // f in Hom(x, path.front()); returns the image in Hom(x, path.back()).
  Vec fold(ZVertex x, const Vec& f, const std::vector<ZVertex>& path) const;
  // Coordinates of g o f with f in Hom(x,y), g in Hom(y,z).
  Vec compose(ZVertex x, ZVertex y, ZVertex z, const Vec& f, const Vec& g) const;

 private:
  DynkinDiagram d_;
  int reach_;
  std::vector<HomTable> tables_;
};

struct MorphismSpace {
  ZVertex domain;
  ZVertex codomain;
  int dim = 0;
  std::vector<std::vector<ZVertex>> basis;  // one path representative per basis vector
};

MorphismSpace hom_basis(const MeshCategory& m, ZVertex x, ZVertex y);

struct SliceReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Hom((0,u), Sigma^i (0,v)) must vanish for 0 < |i| <= 3 and the i = 0 matrix
// must be unitriangular in topological order.
SliceReport slice_check(const MeshCategory& m);
SliceReport slice_check(const MeshCategory& m, const ShiftRule& shift);

}  // namespace orbitcy
