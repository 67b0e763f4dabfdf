#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcy/algebra.hpp"
#include "orbitcy/linalg.hpp"
#include "orbitcy/quiver.hpp"

namespace orbitcy {

class NotFiniteDimensional : public std::runtime_error {
 public:
  NotFiniteDimensional(int length, const std::string& what) : std::runtime_error(what), length_(length) {}
  int length() const { return length_; }

 private:
  int length_;
};

// kQ / <relations> with a basis of normal-form paths. Normal forms prefer
// short paths: the ideal is reduced with the longest paths as pivots.
class BoundQuiverAlgebra {
 public:
  BoundQuiverAlgebra(QuiverPresentation pres, int max_len = 24);

  const Quiver& quiver() const { return pres_.quiver; }
  const QuiverPresentation& presentation() const { return pres_; }
  const std::vector<Path>& basis() const { return basis_; }
  const AlgebraTable& table() const { return table_; }
  std::size_t dim() const { return basis_.size(); }
  int nil_bound() const { return nil_bound_; }  // least L with J^L = 0

  // Normal-form coordinates of a path combination.
  Vec reduce(const PathElement& e) const;
  Vec reduce(const Path& p) const;
  int basis_index(const Path& p) const;  // -1 when p is not a basis path
  // Basis paths from u to v.
  std::vector<int> basis_between(int u, int v) const;

 private:
  QuiverPresentation pres_;
  int depth_ = 0;
  std::vector<Path> paths_;  // paths of length <= depth_, longest first
  std::map<Path, std::size_t> column_;
  SpanBuilder ideal_{0};
  std::vector<Path> basis_;
  std::vector<std::size_t> basis_column_;
  AlgebraTable table_;
  int nil_bound_ = 0;
};

BoundQuiverAlgebra bound_quiver_algebra(const QuiverPresentation& pres, int max_len = 24);

// A representation of the quiver: one space per vertex, one matrix per arrow
// (dims[to] x dims[from]). Projectives are P_i(v) = paths i -> v with arrows
// acting by post-composition, so P_i has top S_i.
struct FDModule {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  int total() const;
  bool is_zero() const { return total() == 0; }
  std::string to_json(const Quiver& q) const;
};

// Per-vertex matrices, f[v] : M_v -> N_v.
using ModuleMap = std::vector<Matrix>;

Matrix path_action(const FDModule& m, const Quiver& q, const Path& p);
bool satisfies_relations(const BoundQuiverAlgebra& a, const FDModule& m);

FDModule projective(const BoundQuiverAlgebra& a, int i);
FDModule injective(const BoundQuiverAlgebra& a, int i);
FDModule simple(const BoundQuiverAlgebra& a, int i);
FDModule direct_sum(const std::vector<FDModule>& ms);
FDModule regular_module(const BoundQuiverAlgebra& a);  // sum of the P_i

std::vector<ModuleMap> hom_modules(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g o f
bool is_module_map(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n, const ModuleMap& f);

// Kernel with its inclusion; cokernel with its projection.
FDModule kernel(const BoundQuiverAlgebra& a, const FDModule& m, const ModuleMap& f, ModuleMap* inclusion = nullptr);
FDModule cokernel(const BoundQuiverAlgebra& a, const FDModule& n, const ModuleMap& f, ModuleMap* projection = nullptr);
// Submodule generated by the columns of `gens[v]` at each vertex.
FDModule submodule(const BoundQuiverAlgebra& a, const FDModule& m, const std::vector<Matrix>& gens,
                   ModuleMap* inclusion = nullptr);

std::vector<int> socle_dims(const FDModule& m, const Quiver& q);
std::vector<int> top_dims(const FDModule& m, const Quiver& q);

// Injective envelope M -> sum I_i^{s_i}; `mult` receives s_i.
ModuleMap injective_envelope(const BoundQuiverAlgebra& a, const FDModule& m, FDModule* envelope,
                             std::vector<int>* mult = nullptr);
// Projective cover sum P_i^{t_i} -> M; `mult` receives t_i.
ModuleMap projective_cover(const BoundQuiverAlgebra& a, const FDModule& m, FDModule* cover,
                           std::vector<int>* mult = nullptr);

// terms[k][i] = multiplicity of I_i (resp. P_i) in the k-th term.
struct Resolution {
  std::vector<std::vector<int>> terms;
  bool complete = false;  // reached zero within the depth
  int length() const { return complete ? static_cast<int>(terms.size()) - 1 : -1; }
};

Resolution minimal_injective_coresolution(const BoundQuiverAlgebra& a, const FDModule& m, int depth);
Resolution minimal_projective_resolution(const BoundQuiverAlgebra& a, const FDModule& m, int depth);
int injective_dimension(const BoundQuiverAlgebra& a, const FDModule& m, int depth = 8);   // -1 beyond depth
int projective_dimension(const BoundQuiverAlgebra& a, const FDModule& m, int depth = 8);  // -1 beyond depth

// Reversed arrows and reversed relations; D M is a module over it.
BoundQuiverAlgebra opposite(const BoundQuiverAlgebra& a);
FDModule dual(const FDModule& m);

bool is_projective(const BoundQuiverAlgebra& a, const FDModule& m);
bool in_sub(const BoundQuiverAlgebra& a, const FDModule& m);
// Cokernel of a left add(A)-approximation, trimmed by summand dropping.
FDModule cosyzygy_sub(const BoundQuiverAlgebra& a, const FDModule& m);
int stable_hom(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n);
bool isomorphic(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n);

struct NamedModule {
  std::string name;
  FDModule module;
};

struct WitnessReport {
  int d = 2;
  bool found = false;
  std::string m;  // witness pair, stable_hom(M, N) != stable_hom(N, Sigma^(d+1) M)
  std::string n;
  int forward = 0;
  int backward = 0;
  int candidates = 0;
  int pairs = 0;
  std::string text;
};

// Non-projective cyclic submodules A p of the indecomposable projectives, up to iso.
std::vector<NamedModule> cyclic_sub_candidates(const BoundQuiverAlgebra& a);
WitnessReport not_dcy_tilted_witness(const BoundQuiverAlgebra& a, int d);

}  // namespace orbitcy
