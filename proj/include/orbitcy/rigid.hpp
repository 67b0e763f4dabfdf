#pragma once

#include <string>
#include <vector>

#include "orbitcy/orbitcat.hpp"
#include "orbitcy/quiver.hpp"

namespace orbitcy {

struct RigidSet {
  std::vector<int> objects;               // ascending object ids with Ext^1(X,X) = 0
  std::vector<std::vector<bool>> compat;  // indexed like `objects`
  bool symmetric = true;                  // Ext^1(X,Y) = 0 <=> Ext^1(Y,X) = 0 was observed

  int position(int object) const;  // -1 if not rigid
};

struct MaximalRigid {
  std::vector<int> objects;  // ascending object ids
  bool cluster_tilting = false;
};

RigidSet indec_rigids(const OrbitCategory& c);

// Maximal cliques of a symmetric adjacency matrix (diagonal ignored), each
// sorted ascending, the list sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj);

// Every maximal clique of the compatibility graph (Bron-Kerbosch with pivot),
// sorted lexicographically.
std::vector<MaximalRigid> maximal_rigids(const OrbitCategory& c, const RigidSet& rs);

// Ext^1(M, Z) = 0 forces Z in add M, over all indecomposables Z.
bool is_cluster_tilting(const OrbitCategory& c, const std::vector<int>& m);

// Vertices follow rs.objects; arrows X -> Y counted by dim rad/rad^2 with rad^2
// taken inside the full subcategory of rigid objects.
Quiver rigid_subcategory_quiver(const OrbitCategory& c, const RigidSet& rs);

// Every indecomposable rigid is Sigma^a of a summand of t.
bool shift_closure_check(const OrbitCategory& c, const RigidSet& rs, const std::vector<int>& t);

// Full subquiver on the listed vertices, in the given order.
Quiver full_subquiver(const Quiver& q, const std::vector<int>& keep);
// Q_R restricted to rigid objects that are not summands of Sigma T.
Quiver subquiver_outside_shift(const OrbitCategory& c, const RigidSet& rs, const Quiver& qr, const std::vector<int>& t);

std::string rigid_report_json(const OrbitCategory& c, const RigidSet& rs, const std::vector<MaximalRigid>& mr);

}  // namespace orbitcy
