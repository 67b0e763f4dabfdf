#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitcy/dynkin.hpp"
#include "orbitcy/linalg.hpp"
#include "orbitcy/mesh.hpp"

namespace orbitcy {

struct CategorySpec {
  DynkinDiagram diagram;
  AutWord generator;  // normal form
  std::string name;   // preset tag, or the grammar string

  std::string grammar() const;  // Db(<letter><rank>)/t^<a>[*S^<b>][*phi]
};

CategorySpec make_spec(char letter, int rank, AutWord g, std::string name = "");
// D^b(A_{(2t+1)(n+1)-3}) / tau^{t(n+1)-1} Sigma
CategorySpec preset_A(int n, int t);
// D^b(D_{2t(n+1)}) / tau^{n+1} phi^n
CategorySpec preset_Dfam(int n, int t);
// D^b(D_{kn}) / tau^n phi^n, k > 1, kn >= 4
CategorySpec preset_Dk(int k, int n);
// Presets by name (including "A(n,t)" style) or the Db(...) grammar.
CategorySpec parse_spec(const std::string& text);
std::vector<std::string> preset_catalog();
std::string spec_usage();

// A morphism component: Hom(X~, target) where target = g^k Y~ is written as
// tau^{j*s} g^i (Y~) with g^period = tau^s.
struct OrbitComponent {
  ZVertex target;
  int i = 0;
  int j = 0;
  int dim = 0;
  int offset = 0;
};

struct OrbitHom {
  int from = 0;
  int to = 0;
  int dim = 0;
  std::vector<OrbitComponent> comps;  // nonzero components ordered by target
  int identity_index() const;         // coordinate of id when from == to and X~ is the target, else -1
};

struct TwoCYReport {
  bool pass = true;
  std::vector<std::string> violations;
};

class OrbitCategory {
 public:
  explicit OrbitCategory(CategorySpec spec);

  const CategorySpec& spec() const { return spec_; }
  const DynkinDiagram& diagram() const { return spec_.diagram; }
  const MeshCategory& mesh() const { return mesh_; }

  int size() const { return static_cast<int>(reps_.size()); }
  ZVertex rep(int x) const { return reps_[static_cast<std::size_t>(x)]; }
  std::string label(int x) const { return to_string(rep(x)); }
  ZVertex canonical(ZVertex z) const;
  int object_of(ZVertex z) const;
  int shift(int x, int s = 1) const;
  int tau_of(int x) const;

  // Sum over the fibre: dim Hom(X~, g^k Sigma^s Y~).
  int hom_dim(int x, int y, int s = 0) const;
  int ext1(int x, int y) const { return hom_dim(x, y, 1); }
  // Same sum over an explicit slice range [X~.p + lo, X~.p + hi] (locality tests).
  int hom_dim_range(int x, int y, int s, int lo, int hi) const;

  OrbitHom hom_basis(int x, int y) const;
  // g o f for f in Hom(x,y), g in Hom(y,z), in the hom_basis coordinates.
  Vec compose(int x, int y, int z, const Vec& f, const Vec& g) const;
  Vec compose(const OrbitHom& hxy, const OrbitHom& hyz, const OrbitHom& hxz, const Vec& f, const Vec& g) const;

  ZVertex act(int i, int j, ZVertex z) const;
  int period() const { return period_; }
  int translation() const { return translation_; }

  std::vector<std::pair<int, int>> ar_arrows() const;
  std::string ar_dot() const;
  std::string to_json() const;

 private:
  std::vector<OrbitComponent> members(ZVertex y, int lo, int hi) const;

  CategorySpec spec_;
  MeshCategory mesh_;
  int period_ = 1;
  int translation_ = 0;
  std::vector<ZVertex> reps_;
  std::map<ZVertex, int> index_;
  std::vector<int> cache_;  // shifts -1..3
};

TwoCYReport verify_2cy(const OrbitCategory& c);

}  // namespace orbitcy
