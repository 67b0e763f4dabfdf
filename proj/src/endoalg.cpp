#include "orbitcy/endoalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "orbitcy/fdalg.hpp"

namespace orbitcy {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

struct Blocks {
  std::vector<std::vector<SpanBuilder>> rad;
  std::vector<std::vector<SpanBuilder>> rad2;
};

Blocks radical_blocks(const AlgebraTable& a) {
  const int n = a.vertices;
  const auto rad = jacobson_radical(a);
  const auto rad2 = product_space(a, rad, rad);
  Blocks b;
  b.rad.assign(uz(n), std::vector<SpanBuilder>(uz(n), SpanBuilder(a.dim())));
  b.rad2 = b.rad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (const auto& v : rad) b.rad[uz(i)][uz(j)].add(a.block(v, i, j));
      for (const auto& v : rad2) b.rad2[uz(i)][uz(j)].add(a.block(v, i, j));
    }
  return b;
}

std::string arrow_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "a" + std::to_string(k + 1);
}

// Integer coefficients with content 1 and a positive leading term.
PathElement integral(const PathElement& e) {
  mpz_class l = 1, g = 0;
  for (const auto& [p, c] : e) l = lcm(l, mpz_class(c.get_den()));
  for (const auto& [p, c] : e) g = gcd(g, mpz_class(Rational(c * l).get_num()));
  PathElement r;
  if (g == 0) return r;
  Rational s = Rational(l) / Rational(g);
  if (!e.empty() && sgn(e.begin()->second) < 0) s = -s;
  for (const auto& [p, c] : e) r[p] = c * s;
  return r;
}

Vec eval_path(const AlgebraTable& a, const std::vector<Vec>& images, const Path& p) {
  if (p.arrows.empty()) return unit_vector(a.dim(), uz(a.idem[uz(p.start)]));
  Vec acc = images[uz(p.arrows[0])];
  for (std::size_t k = 1; k < p.arrows.size(); ++k) acc = a.mul(images[uz(p.arrows[k])], acc);
  return acc;
}

Vec eval_element(const AlgebraTable& a, const std::vector<Vec>& images, const PathElement& e) {
  Vec r(a.dim());
  for (const auto& [p, c] : e) axpy(r, c, eval_path(a, images, p));
  return r;
}

QuiverPresentation make_presentation(int n, const std::vector<Arrow>& arrows, const std::vector<std::string>& rels) {
  QuiverPresentation p;
  p.quiver.n = n;
  for (int v = 0; v < n; ++v) p.quiver.labels.push_back(std::to_string(v + 1));
  p.quiver.arrows = arrows;
  for (const auto& r : rels) p.relations.push_back(parse_element(p.quiver, r));
  return p;
}

}  // namespace

AlgebraTable endo_algebra(const OrbitCategory& c, const std::vector<int>& objects) {
  const int r = static_cast<int>(objects.size());
  std::vector<std::vector<OrbitHom>> h(uz(r), std::vector<OrbitHom>(uz(r)));
  std::vector<std::vector<std::size_t>> off(uz(r), std::vector<std::size_t>(uz(r), 0));
  AlgebraTable a;
  a.vertices = r;
  for (int x : objects) a.vertex_labels.push_back(c.label(x));
  std::size_t total = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      h[uz(i)][uz(j)] = c.hom_basis(objects[uz(i)], objects[uz(j)]);
      off[uz(i)][uz(j)] = total;
      for (int k = 0; k < h[uz(i)][uz(j)].dim; ++k) {
        a.labels.push_back(c.label(objects[uz(i)]) + "->" + c.label(objects[uz(j)]) + "#" + std::to_string(k));
        a.src.push_back(i);
        a.tgt.push_back(j);
      }
      total += uz(h[uz(i)][uz(j)].dim);
    }
  for (int i = 0; i < r; ++i) {
    int id = h[uz(i)][uz(i)].identity_index();
    if (id < 0) throw std::logic_error("endo_algebra: missing identity");
    a.idem.push_back(static_cast<int>(off[uz(i)][uz(i)]) + id);
  }
  a.mult.assign(total, std::vector<Vec>(total));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const auto& hij = h[uz(i)][uz(j)];
        const auto& hjk = h[uz(j)][uz(k)];
        const auto& hik = h[uz(i)][uz(k)];
        for (int f = 0; f < hij.dim; ++f)
          for (int g = 0; g < hjk.dim; ++g) {
            Vec v = c.compose(hij, hjk, hik, unit_vector(uz(hij.dim), uz(f)), unit_vector(uz(hjk.dim), uz(g)));
            if (is_zero(v)) continue;
            Vec full(total);
            for (int t = 0; t < hik.dim; ++t) full[off[uz(i)][uz(k)] + uz(t)] = v[uz(t)];
            a.mult[off[uz(j)][uz(k)] + uz(g)][off[uz(i)][uz(j)] + uz(f)] = std::move(full);
          }
      }
  return a;
}

Quiver gabriel_quiver(const AlgebraTable& a) {
  const Blocks b = radical_blocks(a);
  std::vector<std::vector<int>> counts(uz(a.vertices), std::vector<int>(uz(a.vertices), 0));
  for (int i = 0; i < a.vertices; ++i)
    for (int j = 0; j < a.vertices; ++j)
      counts[uz(i)][uz(j)] = static_cast<int>(b.rad[uz(i)][uz(j)].dim() - b.rad2[uz(i)][uz(j)].dim());
  return quiver_from_counts(counts, a.vertex_labels);
}

QuiverPresentation present(const AlgebraTable& a) {
  const int n = a.vertices;
  const std::size_t dim = a.dim();
  const Blocks b = radical_blocks(a);
  QuiverPresentation pres;
  pres.quiver.n = n;
  pres.quiver.labels = a.vertex_labels;
  std::vector<Vec> images;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SpanBuilder& rad = b.rad[uz(i)][uz(j)];
      SpanBuilder mod(b.rad2[uz(i)][uz(j)]);
      const std::size_t want = rad.dim() - mod.dim();
      std::vector<Vec> cands;
      for (std::size_t k : a.block_indices(i, j)) cands.push_back(unit_vector(dim, k));
      for (const auto& v : rad.rows()) cands.push_back(v);
      std::size_t got = 0;
      for (const auto& v : cands) {
        if (got == want) break;
        if (!rad.contains(v) || !mod.add(v)) continue;
        pres.quiver.arrows.push_back({arrow_name(static_cast<int>(images.size())), i, j});
        images.push_back(v);
        ++got;
      }
    }
  // rad^L = 0 bounds the path length that matters.
  int nil = 0;
  {
    const auto rad = jacobson_radical(a);
    for (std::vector<Vec> power = rad; !power.empty(); power = product_space(a, power, rad)) ++nil;
    nil += 1;
  }
  const auto paths = enumerate_paths(pres.quiver, nil);
  std::vector<Vec> cols;
  for (const auto& p : paths) cols.push_back(eval_path(a, images, p));
  Matrix phi = Matrix::from_columns(dim, cols);
  Matrix ker = nullspace(phi);
  Matrix rows = ker.transpose();
  auto piv = rref(rows);

  std::map<Path, std::size_t> col;
  for (std::size_t k = 0; k < paths.size(); ++k) col[paths[k]] = k;
  auto to_element = [&](const Vec& v) {
    PathElement e;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) e[paths[k]] = v[k];
    return e;
  };
  auto to_vec = [&](const PathElement& e) {
    Vec v(paths.size());
    for (const auto& [p, c] : e)
      if (static_cast<int>(p.length()) <= nil) v[col.at(p)] += c;
    return v;
  };
  SpanBuilder decomposable(paths.size());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    const PathElement e = to_element(rows.row(r));
    for (int k = 0; k < static_cast<int>(pres.quiver.arrows.size()); ++k) {
      const Arrow& ar = pres.quiver.arrows[uz(k)];
      const Path ap{ar.from, ar.to, {k}};
      PathElement left, right;
      for (const auto& [p, c] : e) {
        if (p.end == ap.start) left[concat(p, ap)] += c;
        if (ap.end == p.start) right[concat(ap, p)] += c;
      }
      decomposable.add(to_vec(left));
      decomposable.add(to_vec(right));
    }
  }
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Vec v = rows.row(r);
    if (decomposable.add(v)) pres.relations.push_back(integral(to_element(v)));
  }
  return pres;
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Iso:
      return "iso";
    case IsoVerdict::NotIso:
      return "not-iso";
    default:
      return "inconclusive";
  }
}

IsoResult iso_presentations(const QuiverPresentation& p, const QuiverPresentation& q) {
  IsoResult res;
  std::optional<BoundQuiverAlgebra> bp, bq;
  try {
    bp.emplace(p);
    bq.emplace(q);
  } catch (const NotFiniteDimensional& e) {
    res.reason = e.what();
    return res;
  }
  if (bp->dim() != bq->dim()) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "dimensions differ: " + std::to_string(bp->dim()) + " vs " + std::to_string(bq->dim());
    return res;
  }
  if (!quivers_isomorphic(p.quiver, q.quiver)) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "Gabriel quivers are not isomorphic";
    return res;
  }
  if (radical_layers(bp->table()) != radical_layers(bq->table())) {
    res.verdict = IsoVerdict::NotIso;
    res.reason = "radical layer dimensions differ";
    return res;
  }

  const Quiver& qp = p.quiver;
  const Quiver& qq = q.quiver;
  const AlgebraTable& tq = bq->table();
  const int m = static_cast<int>(qp.arrows.size());

  // Leading coefficients on a spanning forest can be normalised by conjugating
  // with a diagonal unit, which fixes the relation ideal.
  std::vector<bool> forest(uz(m), false);
  {
    std::vector<int> parent(uz(qp.n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[uz(x)] == x ? x : parent[uz(x)] = find(parent[uz(x)]); };
    for (int k = 0; k < m; ++k) {
      int u = find(qp.arrows[uz(k)].from), v = find(qp.arrows[uz(k)].to);
      if (u != v) {
        parent[uz(u)] = v;
        forest[uz(k)] = true;
      }
    }
  }
  std::vector<std::vector<const PathElement*>> due(uz(m));
  for (const auto& rel : p.relations) {
    int last = -1;
    for (const auto& [path, c] : rel)
      for (int a : path.arrows) last = std::max(last, a);
    if (last >= 0) due[uz(last)].push_back(&rel);
  }
  const std::vector<Rational> scalars = {1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3, Rational(1, 3), Rational(-1, 3)};
  const std::vector<int> digits = {0, 1, -1};
  const long budget = 400000;
  long nodes = 0;
  bool found = false, exhausted = false;
  std::vector<Vec> images(uz(m));

  for_each_quiver_iso(qp.counts(), qq.counts(), [&](const std::vector<int>& sigma) {
    std::vector<bool> used(qq.arrows.size(), false);
    std::function<bool(int)> rec = [&](int k) -> bool {
      if (k == m) return true;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      const int from = sigma[uz(qp.arrows[uz(k)].from)];
      const int to = sigma[uz(qp.arrows[uz(k)].to)];
      std::vector<int> longer;
      for (int w : bq->basis_between(from, to))
        if (bq->basis()[uz(w)].length() >= 2) longer.push_back(w);
      for (std::size_t b = 0; b < qq.arrows.size(); ++b) {
        if (used[b] || qq.arrows[b].from != from || qq.arrows[b].to != to) continue;
        const int lead = bq->basis_index(Path{from, to, {static_cast<int>(b)}});
        used[b] = true;
        const std::size_t ns = forest[uz(k)] ? 1 : scalars.size();
        for (std::size_t s = 0; s < ns; ++s) {
          std::vector<int> odo(longer.size(), 0);
          while (true) {
            Vec x = unit_vector(tq.dim(), uz(lead));
            x[uz(lead)] = scalars[s];
            for (std::size_t t = 0; t < longer.size(); ++t) x[uz(longer[t])] = digits[uz(odo[t])];
            images[uz(k)] = x;
            bool ok = true;
            for (const PathElement* rel : due[uz(k)])
              if (!is_zero(eval_element(tq, images, *rel))) {
                ok = false;
                break;
              }
            if (ok && rec(k + 1)) return true;
            if (exhausted) return false;
            std::size_t t = 0;
            while (t < odo.size() && ++odo[t] == 3) odo[t++] = 0;
            if (t == odo.size()) break;
          }
        }
        used[b] = false;
      }
      return false;
    };
    if (rec(0)) {
      found = true;
      res.vertex_map = sigma;
    }
    return found || exhausted;
  });

  if (found) {
    res.verdict = IsoVerdict::Iso;
    res.reason = "explicit isomorphism found";
    for (int k = 0; k < m; ++k) {
      PathElement e;
      for (std::size_t b = 0; b < tq.dim(); ++b)
        if (sgn(images[uz(k)][b]) != 0) e[bq->basis()[b]] = images[uz(k)][b];
      res.arrow_images.push_back(qp.arrows[uz(k)].name + " -> " + format_element(qq, e));
    }
  } else {
    res.verdict = IsoVerdict::Inconclusive;
    res.reason = exhausted ? "search budget exhausted" : "no isomorphism within the search bounds";
  }
  return res;
}

QuiverPresentation lambda_target(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({"x" + std::to_string(i + 1), i, i + 1});
  arrows.push_back({"alpha", n - 1, n - 1});
  return make_presentation(n, arrows, {"alpha^2"});
}

QuiverPresentation dk_target(int k, int n) {
  if (n == 1) return loop_target(k - 1);
  std::vector<Arrow> arrows;
  for (int i = 0; i + 2 < n; ++i) arrows.push_back({"x" + std::to_string(i + 1), i, i + 1});
  arrows.push_back({"a", n - 2, n - 1});
  arrows.push_back({"b", n - 1, n - 2});
  if (k == 2) return make_presentation(n, arrows, {"a*b*a", "b*a*b"});
  arrows.push_back({"alpha", n - 1, n - 1});
  return make_presentation(n, arrows, {"alpha^" + std::to_string(k - 1) + " - a*b", "alpha*a", "b*alpha"});
}

QuiverPresentation loop_target(int m) { return make_presentation(1, {{"alpha", 0, 0}}, {"alpha^" + std::to_string(m)}); }

QuiverPresentation e8t4_target() {
  return make_presentation(2, {{"x", 0, 1}, {"alpha", 1, 1}}, {"alpha^3"});
}

QuiverPresentation e8t8_target() {
  return make_presentation(4, {{"x", 0, 1}, {"a", 1, 2}, {"b", 2, 1}, {"y", 2, 3}}, {"a*b*a", "b*a*b"});
}

QuiverPresentation gamma_target() {
  return make_presentation(2, {{"alpha", 0, 0}, {"beta", 0, 1}, {"gamma", 1, 1}},
                           {"beta*alpha - gamma*beta", "alpha^2", "gamma^2"});
}

std::string presentation_json(const QuiverPresentation& p) {
  nlohmann::ordered_json j;
  std::vector<std::string> verts;
  for (int v = 0; v < p.quiver.n; ++v) verts.push_back(p.quiver.label(v));
  j["vertices"] = verts;
  nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
  for (const auto& a : p.quiver.arrows)
    arrows.push_back({{"name", a.name}, {"from", p.quiver.label(a.from)}, {"to", p.quiver.label(a.to)}});
  j["arrows"] = arrows;
  j["relations"] = p.relation_strings();
  return j.dump();
}

}  // namespace orbitcy
