#pragma once

#include <string>
#include <vector>

#include "orbitcy/orbitcat.hpp"

namespace orbitcy {

// A diagonal of an N-gon with vertices 1..N clockwise; 2 <= j - i <= N - 2.
struct Arc {
  int i = 0;
  int j = 0;
  int n_gon = 0;
};

// Endpoints strictly interleave around the polygon.
bool crossing(const Arc& a, const Arc& b);

// An arc of the once-punctured N-gon. A boundary arc runs clockwise from i to
// i + len (2 <= len <= N - 1) with the puncture on its far side; a puncture
// arc joins i to the puncture with a plain or notched tag.
struct TaggedArc {
  bool puncture = false;
  int i = 0;
  int len = 0;
  bool notched = false;
  int n_gon = 0;
};

bool compatible(const TaggedArc& a, const TaggedArc& b);

struct ArcOrbit {
  std::vector<int> members;  // arc indices, starting at the least one
  bool rigid = false;        // members pairwise compatible
  std::string label;         // label of the first member
};

// All arcs of one model with the rotation rho, orbits under <rho>, and
// compatibility of arcs and of orbits.
struct ArcModel {
  char type = 'A';
  int n = 0;
  int t = 0;
  int n_gon = 0;
  int step = 0;
  std::vector<std::string> labels;
  // Per arc: first endpoint, second endpoint (0 for the puncture), tag
  // (-1 none, 0 plain, 1 notched).
  std::vector<std::vector<int>> ends;
  std::vector<int> rho;
  std::vector<std::vector<bool>> compat;
  std::vector<ArcOrbit> orbits;
  std::vector<std::vector<bool>> orbit_compat;  // every member pair compatible

  std::vector<int> rigid_orbits() const;
  std::string collection_json(const std::vector<int>& orbit_ids) const;
};

// (2t+1)(n+1)-gon, rho = rotation by n+1.
ArcModel model_A(int n, int t);
// Once-punctured 2t(n+1)-gon, rho = rotation by n+1 composed with tag switching.
ArcModel model_D(int n, int t);

std::vector<ArcOrbit> rigid_orbits_A(int n, int t);
std::vector<ArcOrbit> rigid_orbits_D(int n, int t);

// Maximal sets of pairwise compatible rigid orbits, as orbit ids.
std::vector<std::vector<int>> maximal_collections(const ArcModel& m);
// Type A: the union of the orbits has N - 3 arcs. Type D: N arcs.
bool is_triangulation(const ArcModel& m, const std::vector<int>& collection);
// No orbit outside the collection is compatible with all of it.
bool geometric_cluster_tilting(const ArcModel& m, const std::vector<int>& collection);

struct CrossValidation {
  bool pass = true;
  std::vector<std::string> lines;
  std::string to_json() const;
};

// Compares the arc model with the orbit category: indecomposables, rigid
// objects, maximal rigid sizes and cluster tilting status.
CrossValidation cross_validate(const OrbitCategory& c, const ArcModel& m);
// Picks the model from a preset name "A(n,t)" or "Dfam(n,t)".
CrossValidation cross_validate(const OrbitCategory& c);

}  // namespace orbitcy
