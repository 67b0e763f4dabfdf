#include "orbitcy/dynkin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbitcy {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod2(int c) { return ((c % 2) + 2) % 2; }

}  // namespace

std::string DynkinDiagram::name() const { return std::string(1, letter) + std::to_string(rank); }

int DynkinDiagram::positive_roots() const {
  switch (letter) {
    case 'A': return rank * (rank + 1) / 2;
    case 'D': return rank * (rank - 1);
    default: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  }
}

bool DynkinDiagram::phi_trivial() const {
  for (int v = 1; v <= rank; ++v)
    if (phi[v] != v) return false;
  return true;
}

DynkinDiagram build_diagram(char letter, int rank) {
  DynkinDiagram d;
  d.letter = letter;
  d.rank = rank;
  d.phi.resize(rank + 1);
  for (int v = 0; v <= rank; ++v) d.phi[v] = v;
  switch (letter) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("invalid Dynkin type A" + std::to_string(rank) + ": need rank >= 1");
      for (int v = 1; v < rank; ++v) d.arrows.push_back({v, v + 1});
      d.coxeter_number = rank + 1;
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("invalid Dynkin type D" + std::to_string(rank) + ": need rank >= 4");
      for (int v = 1; v < rank - 2; ++v) d.arrows.push_back({v, v + 1});
      d.arrows.push_back({rank - 1, rank - 2});
      d.arrows.push_back({rank, rank - 2});
      d.phi[rank - 1] = rank;
      d.phi[rank] = rank - 1;
      d.coxeter_number = 2 * rank - 2;
      break;
    case 'E':
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("invalid Dynkin type E" + std::to_string(rank) + ": need rank in {6,7,8}");
      d.arrows = {{1, 3}, {3, 4}, {2, 4}};
      for (int v = rank; v > 5; --v) d.arrows.push_back({v, v - 1});
      d.arrows.push_back({5, 4});
      if (rank == 6) {
        d.phi[1] = 6;
        d.phi[6] = 1;
        d.phi[3] = 5;
        d.phi[5] = 3;
      }
      d.coxeter_number = rank == 6 ? 12 : rank == 7 ? 18 : 30;
      break;
    default:
      throw std::invalid_argument(std::string("invalid Dynkin letter '") + letter + "': use A, D or E");
  }
  std::sort(d.arrows.begin(), d.arrows.end());
  d.out.assign(rank + 1, {});
  d.in.assign(rank + 1, {});
  for (auto [u, v] : d.arrows) {
    d.out[u].push_back(v);
    d.in[v].push_back(u);
  }
  for (int v = 1; v <= rank; ++v) {
    std::sort(d.out[v].begin(), d.out[v].end());
    std::sort(d.in[v].begin(), d.in[v].end());
  }
  // Kahn's algorithm, smallest label first.
  std::vector<int> indeg(rank + 1, 0);
  for (auto [u, v] : d.arrows) ++indeg[v];
  std::vector<int> ready;
  for (int v = 1; v <= rank; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    int v = *it;
    ready.erase(it);
    d.topo.push_back(v);
    for (int w : d.out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return d;
}

std::string to_string(const ZVertex& x) { return std::to_string(x.p) + ":" + std::to_string(x.v); }

std::string to_string(const AutWord& w) {
  std::ostringstream os;
  os << "t^" << w.a;
  if (w.b != 0) os << "*S^" << w.b;
  if (w.c != 0) os << "*phi";
  return os.str();
}

ZVertex tau(ZVertex x, int k) { return {x.p - k, x.v}; }

ZVertex apply_phi(const DynkinDiagram& d, ZVertex x, int c) {
  if (mod2(c) == 1) x.v = d.phi[x.v];
  return x;
}

std::pair<int, int> sigma_as_tau_phi(const DynkinDiagram& d) {
  switch (d.letter) {
    case 'D': return {d.rank - 1, d.rank % 2};
    case 'E': return {d.coxeter_number / 2, d.rank == 6 ? 1 : 0};
    default: throw std::logic_error("type A shift has no tau/phi expression");
  }
}

ZVertex apply_sigma(const DynkinDiagram& d, ZVertex x, int b) {
  if (d.letter == 'A') {
    const int m = d.rank;
    for (; b > 0; --b) x = {x.p + x.v, m + 1 - x.v};
    for (; b < 0; ++b) x = {x.p - (m + 1 - x.v), m + 1 - x.v};
    return x;
  }
  auto [k, e] = sigma_as_tau_phi(d);
  return apply_phi(d, tau(x, -k * b), e * b);
}

ZVertex apply_aut(const DynkinDiagram& d, const AutWord& w, ZVertex x) {
  return tau(apply_sigma(d, apply_phi(d, x, w.c), w.b), w.a);
}

AutWord normalize(const DynkinDiagram& d, AutWord w) {
  if (d.letter == 'A') {
    int q = floor_div(w.b, 2);
    w.b -= 2 * q;
    w.a -= (d.rank + 1) * q;
    w.c = 0;
    return w;
  }
  auto [k, e] = sigma_as_tau_phi(d);
  w.a -= k * w.b;
  w.c = d.phi_trivial() ? 0 : mod2(w.c + e * w.b);
  w.b = 0;
  return w;
}

AutWord compose(const DynkinDiagram& d, const AutWord& w1, const AutWord& w2) {
  return normalize(d, {w1.a + w2.a, w1.b + w2.b, w1.c + w2.c});
}

AutWord power(const DynkinDiagram& d, const AutWord& w, int k) {
  return normalize(d, {w.a * k, w.b * k, w.c * k});
}

AutWord inverse(const DynkinDiagram& d, const AutWord& w) { return power(d, w, -1); }

std::vector<ZVertex> successors(const DynkinDiagram& d, ZVertex x) {
  std::vector<ZVertex> r;
  for (int w : d.out[x.v]) r.push_back({x.p, w});
  for (int u : d.in[x.v]) r.push_back({x.p + 1, u});
  return r;
}

std::vector<ZVertex> predecessors(const DynkinDiagram& d, ZVertex x) {
  std::vector<ZVertex> r;
  for (int u : d.in[x.v]) r.push_back({x.p, u});
  for (int w : d.out[x.v]) r.push_back({x.p - 1, w});
  return r;
}

bool is_arrow(const DynkinDiagram& d, ZVertex from, ZVertex to) {
  for (const auto& s : successors(d, from))
    if (s == to) return true;
  return false;
}

Mesh mesh_at(const DynkinDiagram& d, ZVertex z) { return {z, tau(z), predecessors(d, z)}; }

std::vector<ZVertex> Window::vertices(const DynkinDiagram& d) const {
  std::vector<ZVertex> r;
  for (int p = p_min; p <= p_max; ++p)
    for (int v : d.topo) r.push_back({p, v});
  return r;
}

std::vector<std::pair<ZVertex, ZVertex>> Window::arrows(const DynkinDiagram& d) const {
  std::vector<std::pair<ZVertex, ZVertex>> r;
  for (const auto& x : vertices(d))
    for (const auto& y : successors(d, x))
      if (contains(y)) r.push_back({x, y});
  return r;
}

std::vector<Mesh> Window::meshes(const DynkinDiagram& d) const {
  std::vector<Mesh> r;
  for (int p = p_min + 1; p <= p_max; ++p)
    for (int v : d.topo) r.push_back(mesh_at(d, {p, v}));
  return r;
}

Window default_window(const DynkinDiagram& d, ZVertex x) {
  const int h = d.coxeter_number;
  return {x.p - h - 2, x.p + h + 1};
}

std::string window_dot(const DynkinDiagram& d, const Window& w) {
  std::ostringstream os;
  os << "digraph ZDelta {\n";
  for (const auto& x : w.vertices(d)) os << "  \"" << to_string(x) << "\";\n";
  for (const auto& [x, y] : w.arrows(d)) os << "  \"" << to_string(x) << "\" -> \"" << to_string(y) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace orbitcy
