#pragma once

// Reference computations that share no code path with the engine's knitting.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitcy/dynkin.hpp"
#include "orbitcy/linalg.hpp"
#include "orbitcy/quiver.hpp"

namespace oracle {

using orbitcy::DynkinDiagram;
using orbitcy::Rational;
using orbitcy::SpanBuilder;
using orbitcy::Vec;
using orbitcy::ZVertex;

// dim Hom((0,v), Y) for every Y with slice in [0, last], computed in the free
// path category of ZDelta modulo the ideal generated by the mesh relations.
// The ideal at Y is spanned by arrow-extensions of the ideal at predecessors
// and by (mesh at Y) o p for every path p into tau Y.
inline std::map<ZVertex, int> mesh_ideal_dims(const DynkinDiagram& d, int v, int last) {
  auto in_arrows = [&](ZVertex y) {
    std::vector<ZVertex> from;
    for (const auto& [a, b] : d.arrows) {
      if (b == y.v) from.push_back({y.p, a});
      if (a == y.v) from.push_back({y.p - 1, b});
    }
    return from;
  };
  // Paths into Y as lists (predecessor, index of path there); -1 = identity.
  struct Node {
    std::vector<std::pair<ZVertex, int>> paths;
    std::map<std::pair<ZVertex, int>, std::size_t> where;
    std::vector<Vec> ideal;
  };
  std::map<ZVertex, Node> nodes;
  std::vector<ZVertex> order;
  for (int p = 0; p <= last; ++p)
    for (int w : d.topo) order.push_back({p, w});

  std::map<ZVertex, int> dims;
  const ZVertex x{0, v};
  for (const ZVertex& y : order) {
    Node& n = nodes[y];
    if (y == x) n.paths.push_back({x, -1});
    const auto preds = in_arrows(y);
    for (const ZVertex& m : preds) {
      auto it = nodes.find(m);
      if (it == nodes.end()) continue;
      for (std::size_t k = 0; k < it->second.paths.size(); ++k) {
        n.where[{m, static_cast<int>(k)}] = n.paths.size();
        n.paths.push_back({m, static_cast<int>(k)});
      }
    }
    const std::size_t len = n.paths.size();
    SpanBuilder span(len);
    for (const ZVertex& m : preds) {
      auto it = nodes.find(m);
      if (it == nodes.end()) continue;
      for (const Vec& g : it->second.ideal) {
        Vec e(len, Rational(0));
        for (std::size_t k = 0; k < g.size(); ++k) e[n.where.at({m, static_cast<int>(k)})] = g[k];
        span.add(e);
      }
    }
    const ZVertex ty{y.p - 1, y.v};
    auto tn = nodes.find(ty);
    if (tn != nodes.end()) {
      // Each path q into tau Y runs through every middle M; locate q.(tauY->M).(M->Y).
      for (std::size_t q = 0; q < tn->second.paths.size(); ++q) {
        Vec e(len, Rational(0));
        for (const ZVertex& m : preds) {
          const Node& mn = nodes.at(m);
          const std::size_t via = mn.where.at({ty, static_cast<int>(q)});
          e[n.where.at({m, static_cast<int>(via)})] += 1;
        }
        span.add(e);
      }
    }
    n.ideal = span.rows();
    dims[y] = static_cast<int>(len - span.dim());
  }
  return dims;
}

// Positive roots of a simply laced Dynkin diagram as coefficient vectors over
// the simple roots (index 1..rank), by closing the simple roots under
// reflections and keeping positive vectors.
inline std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d) {
  const int r = d.rank;
  std::vector<std::vector<int>> cartan(static_cast<std::size_t>(r + 1), std::vector<int>(static_cast<std::size_t>(r + 1), 0));
  for (int i = 1; i <= r; ++i) cartan[i][i] = 2;
  for (const auto& [a, b] : d.arrows) cartan[a][b] = cartan[b][a] = -1;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (int i = 1; i <= r; ++i) {
    std::vector<int> e(static_cast<std::size_t>(r + 1), 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto b = todo.back();
    todo.pop_back();
    for (int i = 1; i <= r; ++i) {
      int pairing = 0;
      for (int j = 1; j <= r; ++j) pairing += cartan[i][j] * b[j];
      auto c = b;
      c[i] -= pairing;
      bool positive = std::all_of(c.begin() + 1, c.end(), [](int x) { return x >= 0; });
      if (positive && !seen.count(c)) {
        seen.insert(c);
        todo.push_back(c);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// The quiver Q_n: vertices (i, l), i in Z/(n+1), 2 <= l <= n+1; arrows
// (i,l) -> (i,l+1), (i,l) -> (i+1,l-1), and a loop at each (i, n+1).
inline orbitcy::Quiver q_n(int n) {
  const int m = n + 1;
  auto id = [&](int i, int l) { return ((i % m + m) % m) * n + (l - 2); };
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(m * n), std::vector<int>(static_cast<std::size_t>(m * n), 0));
  for (int i = 0; i < m; ++i)
    for (int l = 2; l <= m; ++l) {
      if (l < m) ++counts[id(i, l)][id(i, l + 1)];
      if (l > 2) ++counts[id(i, l)][id(i + 1, l - 1)];
      if (l == m) ++counts[id(i, l)][id(i, l)];
    }
  return orbitcy::quiver_from_counts(counts);
}

}  // namespace oracle
