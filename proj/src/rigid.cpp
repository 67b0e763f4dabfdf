#include "orbitcy/rigid.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace orbitcy {

int RigidSet::position(int object) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), object);
  if (it == objects.end() || *it != object) return -1;
  return static_cast<int>(it - objects.begin());
}

RigidSet indec_rigids(const OrbitCategory& c) {
  RigidSet rs;
  for (int x = 0; x < c.size(); ++x)
    if (c.ext1(x, x) == 0) rs.objects.push_back(x);
  const std::size_t n = rs.objects.size();
  rs.compat.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool a = c.ext1(rs.objects[i], rs.objects[j]) == 0;
      bool b = c.ext1(rs.objects[j], rs.objects[i]) == 0;
      if (a != b) rs.symmetric = false;
      rs.compat[i][j] = a && b;
    }
  return rs;
}

bool is_cluster_tilting(const OrbitCategory& c, const std::vector<int>& m) {
  for (int z = 0; z < c.size(); ++z) {
    if (std::find(m.begin(), m.end(), z) != m.end()) continue;
    bool orthogonal = true;
    for (int x : m)
      if (c.ext1(x, z) != 0) orthogonal = false;
    if (orthogonal) return false;
  }
  return true;
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> cliques;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          cliques.push_back(r);
          return;
        }
        int pivot = -1, best = -1;
        for (const auto& cand : {p, x})
          for (int u : cand) {
            int deg = 0;
            for (int v : p)
              if (v != u && adj[u][v]) ++deg;
            if (deg > best) best = deg, pivot = u;
          }
        std::vector<int> todo;
        for (int v : p)
          if (v == pivot || !adj[pivot][v]) todo.push_back(v);
        for (int v : todo) {
          std::vector<int> np, nx;
          for (int w : p)
            if (w != v && adj[v][w]) np.push_back(w);
          for (int w : x)
            if (w != v && adj[v][w]) nx.push_back(w);
          r.push_back(v);
          bk(r, np, nx);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> r, p, x;
  for (int i = 0; i < n; ++i) p.push_back(i);
  if (n > 0) bk(r, p, x);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<MaximalRigid> maximal_rigids(const OrbitCategory& c, const RigidSet& rs) {
  std::vector<MaximalRigid> out;
  for (const auto& cl : maximal_cliques(rs.compat)) {
    MaximalRigid m;
    for (int i : cl) m.objects.push_back(rs.objects[i]);
    m.cluster_tilting = is_cluster_tilting(c, m.objects);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Coordinates of the radical inside hom_basis(x, y): everything except the identity.
std::vector<int> radical_coords(const OrbitHom& h) {
  std::vector<int> r;
  int id = h.identity_index();
  for (int k = 0; k < h.dim; ++k)
    if (k != id) r.push_back(k);
  return r;
}

}  // namespace

Quiver rigid_subcategory_quiver(const OrbitCategory& c, const RigidSet& rs) {
  const int n = static_cast<int>(rs.objects.size());
  std::vector<std::vector<OrbitHom>> hb(n, std::vector<OrbitHom>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hb[i][j] = c.hom_basis(rs.objects[i], rs.objects[j]);
  std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto rad_ij = radical_coords(hb[i][j]);
      if (rad_ij.empty()) continue;
      SpanBuilder rad2(hb[i][j].dim);
      for (int w = 0; w < n && rad2.dim() < rad_ij.size(); ++w) {
        const auto r1 = radical_coords(hb[i][w]);
        const auto r2 = radical_coords(hb[w][j]);
        for (int a : r1)
          for (int b : r2) {
            Vec v = c.compose(hb[i][w], hb[w][j], hb[i][j], unit_vector(hb[i][w].dim, a), unit_vector(hb[w][j].dim, b));
            rad2.add(v);
          }
      }
      counts[i][j] = static_cast<int>(rad_ij.size() - rad2.dim());
    }
  std::vector<std::string> labels;
  for (int x : rs.objects) labels.push_back(c.label(x));
  return quiver_from_counts(counts, labels);
}

bool shift_closure_check(const OrbitCategory& c, const RigidSet& rs, const std::vector<int>& t) {
  std::vector<bool> hit(c.size(), false);
  for (int x : t) {
    int y = x;
    // Sigma has finite order on objects.
    for (int k = 0; k <= c.size(); ++k) {
      hit[y] = true;
      y = c.shift(y, 1);
      if (y == x) break;
    }
  }
  for (int x : rs.objects)
    if (!hit[x]) return false;
  return true;
}

Quiver full_subquiver(const Quiver& q, const std::vector<int>& keep) {
  std::vector<int> pos(q.n, -1);
  Quiver r;
  for (int v : keep) {
    pos[v] = r.n++;
    r.labels.push_back(q.label(v));
  }
  for (const auto& a : q.arrows)
    if (pos[a.from] >= 0 && pos[a.to] >= 0) r.arrows.push_back({a.name, pos[a.from], pos[a.to]});
  return r;
}

Quiver subquiver_outside_shift(const OrbitCategory& c, const RigidSet& rs, const Quiver& qr, const std::vector<int>& t) {
  std::vector<int> shifted;
  for (int x : t) shifted.push_back(c.shift(x, 1));
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(rs.objects.size()); ++i)
    if (std::find(shifted.begin(), shifted.end(), rs.objects[i]) == shifted.end()) keep.push_back(i);
  return full_subquiver(qr, keep);
}

std::string rigid_report_json(const OrbitCategory& c, const RigidSet& rs, const std::vector<MaximalRigid>& mr) {
  nlohmann::ordered_json j;
  j["spec"] = c.spec().name;
  std::vector<std::string> rig;
  for (int x : rs.objects) rig.push_back(c.label(x));
  j["rigids"] = rig;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& m : mr) {
    std::vector<std::string> cl;
    for (int x : m.objects) cl.push_back(c.label(x));
    arr.push_back({{"clique", cl}, {"ct", m.cluster_tilting}});
  }
  j["maximal"] = arr;
  return j.dump();
}

}  // namespace orbitcy
