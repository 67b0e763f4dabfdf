#pragma once

#include <string>
#include <vector>

#include "orbitcy/algebra.hpp"
#include "orbitcy/orbitcat.hpp"
#include "orbitcy/quiver.hpp"

namespace orbitcy {

// End(X_1 + ... + X_r) for distinct objects; vertex i is X_i. The basis is the
// union of the hom_basis coordinates of every ordered pair.
AlgebraTable endo_algebra(const OrbitCategory& c, const std::vector<int>& objects);

// Arrows i -> j counted by dim e_j (rad / rad^2) e_i.
Quiver gabriel_quiver(const AlgebraTable& a);

// Arrow lifts independent modulo rad^2, named a, b, c, ...; relations form a
// basis of I / (IJ + JI) with integer coefficients.
QuiverPresentation present(const AlgebraTable& a);

enum class IsoVerdict { Iso, NotIso, Inconclusive };
std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::string reason;
  std::vector<int> vertex_map;            // vertex of P -> vertex of Q
  std::vector<std::string> arrow_images;  // per arrow of P, an element of kQ/I_Q
};

// Invariants first (dim, quiver, radical layers); then a bounded search over
// vertex bijections and arrow images c*sigma(a) + sum d_w w with w ranging
// over normal-form paths of length >= 2, c in {+-1, +-2, +-1/2, +-3, +-1/3}
// (fixed to 1 on a spanning forest) and d_w in {-1, 0, 1}. A map killing the
// relations of P is an isomorphism since it is onto and dimensions agree.
IsoResult iso_presentations(const QuiverPresentation& p, const QuiverPresentation& q);

// Targets in composition notation ("a*b": b first).
QuiverPresentation lambda_target(int n);     // 1 -> ... -> n, loop alpha at n, alpha^2
QuiverPresentation dk_target(int k, int n);  // alpha^(k-1) - a*b, alpha*a, b*alpha
QuiverPresentation loop_target(int m);       // k[alpha]/alpha^m
QuiverPresentation e8t4_target();            // 1 -> 2, loop alpha at 2, alpha^3
QuiverPresentation e8t8_target();            // 1 -> 2 <-> 3 -> 4, a*b*a, b*a*b
QuiverPresentation gamma_target();           // beta*alpha - gamma*beta, alpha^2, gamma^2

std::string presentation_json(const QuiverPresentation& p);

}  // namespace orbitcy
