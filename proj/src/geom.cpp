#include "orbitcy/geom.hpp"

#include <algorithm>
#include <map>
#include <regex>

#include "json.hpp"
#include "orbitcy/rigid.hpp"

namespace orbitcy {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Vertex labels 1..N.
int vertex(int v, int n) { return mod(v - 1, n) + 1; }

std::string label_of(const Arc& a) { return "[" + std::to_string(a.i) + "," + std::to_string(a.j) + "]"; }

std::string label_of(const TaggedArc& a) {
  if (a.puncture) return "[" + std::to_string(a.i) + ",p" + (a.notched ? "*" : "") + "]";
  return "[" + std::to_string(a.i) + "," + std::to_string(a.i + a.len) + "]";
}

void build_orbits(ArcModel& m) {
  const int k = static_cast<int>(m.labels.size());
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int a = 0; a < k; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ArcOrbit o;
    o.label = m.labels[static_cast<std::size_t>(a)];
    for (int b = a; !seen[static_cast<std::size_t>(b)]; b = m.rho[static_cast<std::size_t>(b)]) {
      seen[static_cast<std::size_t>(b)] = true;
      o.members.push_back(b);
    }
    o.rigid = true;
    for (int x : o.members)
      for (int y : o.members)
        if (x != y && !m.compat[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) o.rigid = false;
    m.orbits.push_back(std::move(o));
  }
  const std::size_t r = m.orbits.size();
  m.orbit_compat.assign(r, std::vector<bool>(r, true));
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      for (int x : m.orbits[p].members)
        for (int y : m.orbits[q].members)
          if (x != y && !m.compat[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) m.orbit_compat[p][q] = false;
}

}  // namespace

bool crossing(const Arc& a, const Arc& b) {
  auto inside = [&](int x) { return a.i < x && x < a.j; };
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  return inside(b.i) != inside(b.j);
}

bool compatible(const TaggedArc& a, const TaggedArc& b) {
  const int n = a.n_gon;
  if (a.puncture && b.puncture) return a.notched == b.notched || a.i == b.i;
  if (a.puncture || b.puncture) {
    const TaggedArc& p = a.puncture ? a : b;
    const TaggedArc& s = a.puncture ? b : a;
    const int d = mod(p.i - s.i, n);
    return d == 0 || d >= s.len;
  }
  // Nested one way or the other, or disjoint puncture-free sides.
  const int d = mod(b.i - a.i, n);
  const int e = mod(a.i - b.i, n);
  if (d + b.len <= a.len) return true;
  if (e + a.len <= b.len) return true;
  return d >= a.len && d + b.len <= n;
}

std::vector<int> ArcModel::rigid_orbits() const {
  std::vector<int> r;
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (orbits[k].rigid) r.push_back(static_cast<int>(k));
  return r;
}

std::string ArcModel::collection_json(const std::vector<int>& orbit_ids) const {
  nlohmann::ordered_json j;
  j["N"] = n_gon;
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  std::vector<std::string> tags;
  for (int o : orbit_ids)
    for (int a : orbits[static_cast<std::size_t>(o)].members) {
      const auto& e = ends[static_cast<std::size_t>(a)];
      if (e[1] == 0)
        arcs.push_back({e[0], "p"});
      else
        arcs.push_back({e[0], e[1]});
      tags.push_back(e[2] < 0 ? "none" : e[2] == 0 ? "plain" : "notched");
    }
  j["arcs"] = arcs;
  j["tags"] = tags;
  return j.dump();
}

ArcModel model_A(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("model_A: need n, t >= 1");
  ArcModel m;
  m.type = 'A';
  m.n = n;
  m.t = t;
  m.n_gon = (2 * t + 1) * (n + 1);
  m.step = n + 1;
  const int big = m.n_gon;
  std::vector<Arc> arcs;
  std::map<std::pair<int, int>, int> index;
  for (int i = 1; i <= big; ++i)
    for (int j = i + 2; j <= big; ++j) {
      if (i == 1 && j == big) continue;
      index[{i, j}] = static_cast<int>(arcs.size());
      arcs.push_back({i, j, big});
    }
  for (const auto& a : arcs) {
    m.labels.push_back(label_of(a));
    m.ends.push_back({a.i, a.j, -1});
    int x = vertex(a.i + m.step, big), y = vertex(a.j + m.step, big);
    m.rho.push_back(index.at({std::min(x, y), std::max(x, y)}));
  }
  const std::size_t k = arcs.size();
  m.compat.assign(k, std::vector<bool>(k, true));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m.compat[a][b] = !crossing(arcs[a], arcs[b]);
  build_orbits(m);
  return m;
}

ArcModel model_D(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("model_D: need n, t >= 1");
  ArcModel m;
  m.type = 'D';
  m.n = n;
  m.t = t;
  m.n_gon = 2 * t * (n + 1);
  m.step = n + 1;
  const int big = m.n_gon;
  std::vector<TaggedArc> arcs;
  for (int i = 1; i <= big; ++i)
    for (int len = 2; len <= big - 1; ++len) arcs.push_back({false, i, len, false, big});
  for (int i = 1; i <= big; ++i) {
    arcs.push_back({true, i, 0, false, big});
    arcs.push_back({true, i, 0, true, big});
  }
  auto find = [&](const TaggedArc& x) {
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const auto& y = arcs[k];
      if (y.puncture == x.puncture && y.i == x.i && y.len == x.len && y.notched == x.notched) return static_cast<int>(k);
    }
    throw std::logic_error("model_D: rotated arc missing");
  };
  for (const auto& a : arcs) {
    m.labels.push_back(label_of(a));
    if (a.puncture)
      m.ends.push_back({a.i, 0, a.notched ? 1 : 0});
    else
      m.ends.push_back({a.i, vertex(a.i + a.len, big), -1});
    TaggedArc r = a;
    r.i = vertex(a.i + m.step, big);
    if (a.puncture) r.notched = !a.notched;
    m.rho.push_back(find(r));
  }
  const std::size_t k = arcs.size();
  m.compat.assign(k, std::vector<bool>(k, true));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m.compat[a][b] = a == b || compatible(arcs[a], arcs[b]);
  build_orbits(m);
  return m;
}

std::vector<ArcOrbit> rigid_orbits_A(int n, int t) {
  ArcModel m = model_A(n, t);
  std::vector<ArcOrbit> r;
  for (int o : m.rigid_orbits()) r.push_back(m.orbits[static_cast<std::size_t>(o)]);
  return r;
}

std::vector<ArcOrbit> rigid_orbits_D(int n, int t) {
  ArcModel m = model_D(n, t);
  std::vector<ArcOrbit> r;
  for (int o : m.rigid_orbits()) r.push_back(m.orbits[static_cast<std::size_t>(o)]);
  return r;
}

std::vector<std::vector<int>> maximal_collections(const ArcModel& m) {
  const auto rig = m.rigid_orbits();
  std::vector<std::vector<bool>> adj(rig.size(), std::vector<bool>(rig.size(), false));
  for (std::size_t a = 0; a < rig.size(); ++a)
    for (std::size_t b = 0; b < rig.size(); ++b)
      adj[a][b] = m.orbit_compat[static_cast<std::size_t>(rig[a])][static_cast<std::size_t>(rig[b])];
  std::vector<std::vector<int>> out;
  for (const auto& c : maximal_cliques(adj)) {
    std::vector<int> ids;
    for (int k : c) ids.push_back(rig[static_cast<std::size_t>(k)]);
    out.push_back(std::move(ids));
  }
  return out;
}

bool is_triangulation(const ArcModel& m, const std::vector<int>& collection) {
  std::size_t arcs = 0;
  for (int o : collection) arcs += m.orbits[static_cast<std::size_t>(o)].members.size();
  const int want = m.type == 'A' ? m.n_gon - 3 : m.n_gon;
  return static_cast<int>(arcs) == want;
}

bool geometric_cluster_tilting(const ArcModel& m, const std::vector<int>& collection) {
  for (std::size_t o = 0; o < m.orbits.size(); ++o) {
    if (std::find(collection.begin(), collection.end(), static_cast<int>(o)) != collection.end()) continue;
    bool all = true;
    for (int c : collection)
      if (!m.orbit_compat[o][static_cast<std::size_t>(c)]) all = false;
    if (all) return false;
  }
  return true;
}

std::string CrossValidation::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["lines"] = lines;
  return j.dump();
}

CrossValidation cross_validate(const OrbitCategory& c, const ArcModel& m) {
  CrossValidation cv;
  auto line = [&](const std::string& what, const std::string& geo, const std::string& eng) {
    const bool ok = geo == eng;
    cv.pass = cv.pass && ok;
    cv.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what + ": arcs " + geo + ", engine " + eng);
  };
  line("indecomposables", std::to_string(m.orbits.size()), std::to_string(c.size()));
  const RigidSet rs = indec_rigids(c);
  line("indecomposable rigids", std::to_string(m.rigid_orbits().size()), std::to_string(rs.objects.size()));
  const auto geo = maximal_collections(m);
  const auto eng = maximal_rigids(c, rs);
  line("maximal rigids", std::to_string(geo.size()), std::to_string(eng.size()));
  auto sizes = [](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::string r;
    for (int x : s) r += (r.empty() ? "" : ",") + std::to_string(x);
    return "{" + r + "}";
  };
  std::vector<int> gs, es, gct, ect;
  for (const auto& g : geo) {
    gs.push_back(static_cast<int>(g.size()));
    gct.push_back(geometric_cluster_tilting(m, g) ? 1 : 0);
  }
  for (const auto& e : eng) {
    es.push_back(static_cast<int>(e.objects.size()));
    ect.push_back(e.cluster_tilting ? 1 : 0);
  }
  line("maximal rigid sizes", sizes(gs), sizes(es));
  line("cluster tilting (1 = yes)", sizes(gct), sizes(ect));
  std::vector<int> tri;
  for (const auto& g : geo) tri.push_back(is_triangulation(m, g) ? 1 : 0);
  line("triangulation matches cluster tilting", sizes(tri), sizes(ect));
  return cv;
}

CrossValidation cross_validate(const OrbitCategory& c) {
  std::smatch mt;
  static const std::regex re(R"(^(A|Dfam)\((\d+),(\d+)\)$)");
  const std::string& name = c.spec().name;
  if (!std::regex_match(name, mt, re))
    throw std::invalid_argument("cross_validate: arc models exist for A(n,t) and Dfam(n,t) presets, not '" + name + "'");
  const int n = std::stoi(mt[2]), t = std::stoi(mt[3]);
  return cross_validate(c, mt[1] == "A" ? model_A(n, t) : model_D(n, t));
}

}  // namespace orbitcy
