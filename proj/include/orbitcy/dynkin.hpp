#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace orbitcy {

// Vertices are numbered 1..rank. Fixed orientations:
//   A_m: linear 1->2->...->m.
//   D_N: tail 1->2->...->(N-2), tips N-1 and N point into the branch vertex N-2.
//   E_n: Bourbaki labels (1-3-4-5-..., 2 attached to 4), every edge points toward 4.
// phi swaps the fork tips of D_N and applies the diagram flip of E6; it is the
// identity for A, E7, E8.
struct DynkinDiagram {
  char letter = 'A';
  int rank = 1;
  std::vector<std::pair<int, int>> arrows;  // oriented edges u->v
  int coxeter_number = 2;
  std::vector<int> phi;                     // phi[v] for v in 1..rank; phi[0] unused
  std::vector<std::vector<int>> out;        // out[v]: all w with v->w
  std::vector<std::vector<int>> in;         // in[v]: all u with u->v
  std::vector<int> topo;                    // sources first

  std::string name() const;
  int positive_roots() const;
  bool phi_trivial() const;
};

DynkinDiagram build_diagram(char letter, int rank);

struct ZVertex {
  int p = 0;
  int v = 1;
  auto operator<=>(const ZVertex&) const = default;
};

std::string to_string(const ZVertex& x);

// g = tau^a . Sigma^b . phi^c, applied right to left.
struct AutWord {
  int a = 0;
  int b = 0;
  int c = 0;
  bool operator==(const AutWord&) const = default;
};

std::string to_string(const AutWord& w);

ZVertex tau(ZVertex x, int k = 1);
ZVertex apply_phi(const DynkinDiagram& d, ZVertex x, int c = 1);
ZVertex apply_sigma(const DynkinDiagram& d, ZVertex x, int b = 1);
ZVertex apply_aut(const DynkinDiagram& d, const AutWord& w, ZVertex x);

// Sigma = tau^{-k} phi^e for D and E; returns {k, e}. Type A has no such form.
std::pair<int, int> sigma_as_tau_phi(const DynkinDiagram& d);

AutWord normalize(const DynkinDiagram& d, AutWord w);
AutWord compose(const DynkinDiagram& d, const AutWord& w1, const AutWord& w2);
AutWord power(const DynkinDiagram& d, const AutWord& w, int k);
AutWord inverse(const DynkinDiagram& d, const AutWord& w);

struct Mesh {
  ZVertex end;
  ZVertex start;                 // tau(end)
  std::vector<ZVertex> middles;  // same-slice predecessors first, then previous slice
};

// Finite piece of ZDelta with slices p_min..p_max.
struct Window {
  int p_min = 0;
  int p_max = 0;

  int width() const { return p_max - p_min + 1; }
  bool contains(const ZVertex& x) const { return x.p >= p_min && x.p <= p_max; }
  std::vector<ZVertex> vertices(const DynkinDiagram& d) const;  // slice order, topo order within
  std::vector<std::pair<ZVertex, ZVertex>> arrows(const DynkinDiagram& d) const;
  std::vector<Mesh> meshes(const DynkinDiagram& d) const;
};

// 2h+4 slices, h+2 of them to the left of x.
Window default_window(const DynkinDiagram& d, ZVertex x);

Mesh mesh_at(const DynkinDiagram& d, ZVertex z);
std::vector<ZVertex> successors(const DynkinDiagram& d, ZVertex x);
std::vector<ZVertex> predecessors(const DynkinDiagram& d, ZVertex x);
bool is_arrow(const DynkinDiagram& d, ZVertex from, ZVertex to);

std::string window_dot(const DynkinDiagram& d, const Window& w);

}  // namespace orbitcy
