#include "orbitcy/fdalg.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "json.hpp"

namespace orbitcy {

namespace {

std::size_t uz(int v) { return static_cast<std::size_t>(v); }

Path arrow_path(const Quiver& q, int a) {
  const Arrow& ar = q.arrows[uz(a)];
  return {ar.from, ar.to, {a}};
}

// X with B X = Y, for B of full column rank and columns of Y in its span.
Matrix coords_in(const Matrix& b, const Matrix& y) {
  if (b.cols() == 0) return Matrix(0, y.cols());
  Matrix bt = b.transpose();
  auto inv = inverse(bt * b);
  if (!inv) throw std::logic_error("coords_in: basis is not independent");
  return (*inv) * bt * y;
}

Matrix columns_matrix(std::size_t rows, const std::vector<Vec>& cols) { return Matrix::from_columns(rows, cols); }

Vec flatten(const ModuleMap& f) {
  Vec r;
  for (const auto& m : f)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
  return r;
}

Matrix stacked_out(const FDModule& m, const Quiver& q, int v) {
  Matrix s(0, uz(m.dims[uz(v)]));
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (q.arrows[a].from == v) s = Matrix::stack(s, m.maps[a]);
  return s;
}

Matrix images_in(const FDModule& m, const Quiver& q, int v) {
  Matrix s(uz(m.dims[uz(v)]), 0);
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    if (q.arrows[a].to == v) s = Matrix::concat(s, m.maps[a]);
  return s;
}

FDModule zero_module(const Quiver& q) { return {std::vector<int>(uz(q.n), 0), std::vector<Matrix>(q.arrows.size())}; }

std::vector<Vec> columns_of(const Matrix& m) {
  std::vector<Vec> r;
  for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.column(j));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bound quiver algebras

BoundQuiverAlgebra::BoundQuiverAlgebra(QuiverPresentation pres, int max_len) : pres_(std::move(pres)) {
  const Quiver& q = pres_.quiver;
  int start = 1;
  for (const auto& r : pres_.relations)
    for (const auto& [p, c] : r) {
      if (p.length() == 0) throw std::invalid_argument("bound_quiver_algebra: relation has an idempotent term");
      start = std::max(start, static_cast<int>(p.length()));
    }
  bool saturated = false;
  for (int d = start; d <= max_len && !saturated; ++d) {
    depth_ = d;
    paths_ = enumerate_paths(q, d);
    std::reverse(paths_.begin(), paths_.end());
    column_.clear();
    for (std::size_t k = 0; k < paths_.size(); ++k) column_[paths_[k]] = k;
    const std::size_t n = paths_.size();
    ideal_ = SpanBuilder(n);
    std::deque<PathElement> queue(pres_.relations.begin(), pres_.relations.end());
    while (!queue.empty()) {
      PathElement e = std::move(queue.front());
      queue.pop_front();
      Vec v(n);
      for (const auto& [p, c] : e) v[column_.at(p)] += c;
      if (!ideal_.add(v)) continue;
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const Path ap = arrow_path(q, a);
        PathElement left, right;
        for (const auto& [p, c] : e) {
          if (static_cast<int>(p.length()) >= d) continue;
          if (p.end == ap.start) left[concat(p, ap)] += c;
          if (ap.end == p.start) right[concat(ap, p)] += c;
        }
        if (!left.empty()) queue.push_back(std::move(left));
        if (!right.empty()) queue.push_back(std::move(right));
      }
    }
    saturated = true;
    for (std::size_t k = 0; k < n && saturated; ++k)
      if (static_cast<int>(paths_[k].length()) == d && !ideal_.contains(unit_vector(n, k))) saturated = false;
  }
  if (!saturated)
    throw NotFiniteDimensional(max_len, "bound_quiver_algebra: paths of length " + std::to_string(max_len) +
                                            " do not all lie in the ideal; the quotient does not stabilise");

  const std::size_t n = paths_.size();
  for (std::size_t k = n; k-- > 0;) {
    Vec e = unit_vector(n, k);
    if (ideal_.reduce(e) == e) {
      basis_.push_back(paths_[k]);
      basis_column_.push_back(k);
    }
  }
  // basis_ is ascending in the Path order because paths_ is descending.

  const std::size_t dim = basis_.size();
  table_.vertices = q.n;
  for (int v = 0; v < q.n; ++v) table_.vertex_labels.push_back(q.label(v));
  table_.idem.assign(uz(q.n), -1);
  for (std::size_t b = 0; b < dim; ++b) {
    table_.labels.push_back(format_path(q, basis_[b]));
    table_.src.push_back(basis_[b].start);
    table_.tgt.push_back(basis_[b].end);
    if (basis_[b].length() == 0) table_.idem[uz(basis_[b].start)] = static_cast<int>(b);
  }
  table_.mult.assign(dim, std::vector<Vec>(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (basis_[b].end == basis_[a].start) {
        Vec p = reduce(concat(basis_[b], basis_[a]));
        if (!is_zero(p)) table_.mult[a][b] = std::move(p);
      }

  std::vector<Vec> j;
  for (std::size_t b = 0; b < dim; ++b)
    if (basis_[b].length() > 0) j.push_back(unit_vector(dim, b));
  nil_bound_ = 1;
  for (std::vector<Vec> power = j; !power.empty(); power = product_space(table_, power, j)) ++nil_bound_;
}

Vec BoundQuiverAlgebra::reduce(const PathElement& e) const {
  Vec v(paths_.size());
  for (const auto& [p, c] : e) {
    if (static_cast<int>(p.length()) > depth_) continue;  // J^(depth+1) lies in the ideal
    v[column_.at(p)] += c;
  }
  v = ideal_.reduce(std::move(v));
  Vec r(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) r[b] = v[basis_column_[b]];
  return r;
}

Vec BoundQuiverAlgebra::reduce(const Path& p) const { return reduce(PathElement{{p, Rational(1)}}); }

int BoundQuiverAlgebra::basis_index(const Path& p) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
  if (it == basis_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - basis_.begin());
}

std::vector<int> BoundQuiverAlgebra::basis_between(int u, int v) const {
  std::vector<int> r;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (basis_[b].start == u && basis_[b].end == v) r.push_back(static_cast<int>(b));
  return r;
}

BoundQuiverAlgebra bound_quiver_algebra(const QuiverPresentation& pres, int max_len) {
  return BoundQuiverAlgebra(pres, max_len);
}

// ---------------------------------------------------------------------------
// Modules

int FDModule::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::string FDModule::to_json(const Quiver& q) const {
  nlohmann::ordered_json j;
  j["dims"] = dims;
  nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < maps[a].rows(); ++i) {
      std::vector<std::string> row;
      for (std::size_t k = 0; k < maps[a].cols(); ++k) row.push_back(maps[a](i, k).get_str());
      rows.push_back(row);
    }
    arrows[q.arrows[a].name] = rows;
  }
  j["arrows"] = arrows;
  return j.dump();
}

Matrix path_action(const FDModule& m, const Quiver&, const Path& p) {
  Matrix r = Matrix::identity(uz(m.dims[uz(p.start)]));
  for (int a : p.arrows) r = m.maps[uz(a)] * r;
  return r;
}

bool satisfies_relations(const BoundQuiverAlgebra& a, const FDModule& m) {
  for (const auto& rel : a.presentation().relations) {
    Matrix sum;
    bool first = true;
    for (const auto& [p, c] : rel) {
      Matrix t = path_action(m, a.quiver(), p).scaled(c);
      sum = first ? t : sum + t;
      first = false;
    }
    if (!first && !sum.is_zero()) return false;
  }
  return true;
}

FDModule projective(const BoundQuiverAlgebra& a, int i) {
  const Quiver& q = a.quiver();
  FDModule m;
  std::vector<std::vector<int>> at(uz(q.n));
  for (int v = 0; v < q.n; ++v) {
    at[uz(v)] = a.basis_between(i, v);
    m.dims.push_back(static_cast<int>(at[uz(v)].size()));
  }
  for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k) {
    const Arrow& ar = q.arrows[uz(k)];
    Matrix mat(uz(m.dims[uz(ar.to)]), uz(m.dims[uz(ar.from)]));
    const auto& from = at[uz(ar.from)];
    const auto& to = at[uz(ar.to)];
    for (std::size_t c = 0; c < from.size(); ++c) {
      Vec img = a.reduce(concat(a.basis()[uz(from[c])], arrow_path(q, k)));
      for (std::size_t r = 0; r < to.size(); ++r) mat(r, c) = img[uz(to[r])];
    }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

FDModule injective(const BoundQuiverAlgebra& a, int i) {
  const Quiver& q = a.quiver();
  FDModule m;
  std::vector<std::vector<int>> at(uz(q.n));
  for (int v = 0; v < q.n; ++v) {
    at[uz(v)] = a.basis_between(v, i);
    m.dims.push_back(static_cast<int>(at[uz(v)].size()));
  }
  // (I(arrow) xi)(p) = xi(p o arrow) for p : to -> i.
  for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k) {
    const Arrow& ar = q.arrows[uz(k)];
    Matrix mat(uz(m.dims[uz(ar.to)]), uz(m.dims[uz(ar.from)]));
    const auto& from = at[uz(ar.from)];
    const auto& to = at[uz(ar.to)];
    for (std::size_t r = 0; r < to.size(); ++r) {
      Vec img = a.reduce(concat(arrow_path(q, k), a.basis()[uz(to[r])]));
      for (std::size_t c = 0; c < from.size(); ++c) mat(r, c) = img[uz(from[c])];
    }
    m.maps.push_back(std::move(mat));
  }
  return m;
}

FDModule simple(const BoundQuiverAlgebra& a, int i) {
  const Quiver& q = a.quiver();
  FDModule m;
  for (int v = 0; v < q.n; ++v) m.dims.push_back(v == i ? 1 : 0);
  for (const auto& ar : q.arrows) m.maps.emplace_back(uz(m.dims[uz(ar.to)]), uz(m.dims[uz(ar.from)]));
  return m;
}

FDModule direct_sum(const std::vector<FDModule>& ms) {
  FDModule r;
  if (ms.empty()) return r;
  r.dims.assign(ms[0].dims.size(), 0);
  for (const auto& m : ms)
    for (std::size_t v = 0; v < r.dims.size(); ++v) r.dims[v] += m.dims[v];
  for (std::size_t a = 0; a < ms[0].maps.size(); ++a) {
    std::size_t rows = 0, cols = 0;
    for (const auto& m : ms) rows += m.maps[a].rows(), cols += m.maps[a].cols();
    Matrix mat(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& m : ms) {
      for (std::size_t i = 0; i < m.maps[a].rows(); ++i)
        for (std::size_t j = 0; j < m.maps[a].cols(); ++j) mat(r0 + i, c0 + j) = m.maps[a](i, j);
      r0 += m.maps[a].rows();
      c0 += m.maps[a].cols();
    }
    r.maps.push_back(std::move(mat));
  }
  return r;
}

FDModule regular_module(const BoundQuiverAlgebra& a) {
  std::vector<FDModule> ps;
  for (int i = 0; i < a.quiver().n; ++i) ps.push_back(projective(a, i));
  return direct_sum(ps);
}

std::vector<ModuleMap> hom_modules(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n) {
  const Quiver& q = a.quiver();
  std::vector<std::size_t> off(uz(q.n) + 1, 0);
  for (int v = 0; v < q.n; ++v) off[uz(v) + 1] = off[uz(v)] + uz(n.dims[uz(v)] * m.dims[uz(v)]);
  const std::size_t unknowns = off[uz(q.n)];
  auto idx = [&](int v, std::size_t r, std::size_t k) { return off[uz(v)] + r * uz(m.dims[uz(v)]) + k; };
  std::vector<Vec> eqs;
  for (std::size_t al = 0; al < q.arrows.size(); ++al) {
    const int u = q.arrows[al].from, v = q.arrows[al].to;
    const Matrix& ma = m.maps[al];
    const Matrix& na = n.maps[al];
    // f_v M_a - N_a f_u = 0, entry (r, c).
    for (std::size_t r = 0; r < uz(n.dims[uz(v)]); ++r)
      for (std::size_t c = 0; c < uz(m.dims[uz(u)]); ++c) {
        Vec e(unknowns);
        for (std::size_t k = 0; k < uz(m.dims[uz(v)]); ++k) e[idx(v, r, k)] += ma(k, c);
        for (std::size_t k = 0; k < uz(n.dims[uz(u)]); ++k) e[idx(u, k, c)] -= na(r, k);
        if (!is_zero(e)) eqs.push_back(std::move(e));
      }
  }
  Matrix sys = Matrix::from_rows(unknowns, eqs);
  Matrix ns = eqs.empty() ? Matrix::identity(unknowns) : nullspace(sys);
  std::vector<ModuleMap> out;
  for (std::size_t k = 0; k < ns.cols(); ++k) {
    ModuleMap f;
    for (int v = 0; v < q.n; ++v) {
      Matrix fv(uz(n.dims[uz(v)]), uz(m.dims[uz(v)]));
      for (std::size_t r = 0; r < fv.rows(); ++r)
        for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = ns(idx(v, r, c), k);
      f.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap r;
  for (std::size_t v = 0; v < f.size(); ++v) r.push_back(g[v] * f[v]);
  return r;
}

bool is_module_map(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n, const ModuleMap& f) {
  const Quiver& q = a.quiver();
  for (std::size_t al = 0; al < q.arrows.size(); ++al) {
    const auto u = uz(q.arrows[al].from), v = uz(q.arrows[al].to);
    if (!(f[v] * m.maps[al] == n.maps[al] * f[u])) return false;
  }
  return true;
}

FDModule kernel(const BoundQuiverAlgebra& a, const FDModule& m, const ModuleMap& f, ModuleMap* inclusion) {
  const Quiver& q = a.quiver();
  std::vector<Matrix> k;
  FDModule r;
  for (int v = 0; v < q.n; ++v) {
    Matrix kv = f[uz(v)].rows() == 0 ? Matrix::identity(uz(m.dims[uz(v)])) : nullspace(f[uz(v)]);
    r.dims.push_back(static_cast<int>(kv.cols()));
    k.push_back(std::move(kv));
  }
  for (std::size_t al = 0; al < q.arrows.size(); ++al) {
    const auto u = uz(q.arrows[al].from), v = uz(q.arrows[al].to);
    r.maps.push_back(coords_in(k[v], m.maps[al] * k[u]));
  }
  if (inclusion) *inclusion = k;
  return r;
}

FDModule cokernel(const BoundQuiverAlgebra& a, const FDModule& n, const ModuleMap& f, ModuleMap* projection) {
  const Quiver& q = a.quiver();
  std::vector<Matrix> proj, sect;
  FDModule r;
  for (int v = 0; v < q.n; ++v) {
    const std::size_t d = uz(n.dims[uz(v)]);
    Quotient qt(d, columns_of(f[uz(v)]));
    r.dims.push_back(static_cast<int>(qt.dim()));
    proj.push_back(qt.projection());
    std::vector<Vec> cols;
    for (std::size_t c : qt.chosen()) cols.push_back(unit_vector(d, c));
    sect.push_back(columns_matrix(d, cols));
  }
  for (std::size_t al = 0; al < q.arrows.size(); ++al) {
    const auto u = uz(q.arrows[al].from), v = uz(q.arrows[al].to);
    r.maps.push_back(proj[v] * n.maps[al] * sect[u]);
  }
  if (projection) *projection = proj;
  return r;
}

FDModule submodule(const BoundQuiverAlgebra& a, const FDModule& m, const std::vector<Matrix>& gens, ModuleMap* inclusion) {
  const Quiver& q = a.quiver();
  std::vector<SpanBuilder> span;
  for (int v = 0; v < q.n; ++v) {
    span.emplace_back(uz(m.dims[uz(v)]));
    for (std::size_t c = 0; c < gens[uz(v)].cols(); ++c) span.back().add(gens[uz(v)].column(c));
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t al = 0; al < q.arrows.size(); ++al) {
      const auto u = uz(q.arrows[al].from), v = uz(q.arrows[al].to);
      const auto rows = span[u].rows();
      for (const auto& x : rows)
        if (span[v].add(m.maps[al].apply(x))) grew = true;
    }
  }
  std::vector<Matrix> b;
  FDModule r;
  for (int v = 0; v < q.n; ++v) {
    b.push_back(columns_matrix(uz(m.dims[uz(v)]), span[uz(v)].rows()));
    r.dims.push_back(static_cast<int>(span[uz(v)].dim()));
  }
  for (std::size_t al = 0; al < q.arrows.size(); ++al) {
    const auto u = uz(q.arrows[al].from), v = uz(q.arrows[al].to);
    r.maps.push_back(coords_in(b[v], m.maps[al] * b[u]));
  }
  if (inclusion) *inclusion = b;
  return r;
}

std::vector<int> socle_dims(const FDModule& m, const Quiver& q) {
  std::vector<int> r;
  for (int v = 0; v < q.n; ++v) {
    Matrix s = stacked_out(m, q, v);
    r.push_back(m.dims[uz(v)] - static_cast<int>(rank(s)));
  }
  return r;
}

std::vector<int> top_dims(const FDModule& m, const Quiver& q) {
  std::vector<int> r;
  for (int v = 0; v < q.n; ++v) r.push_back(m.dims[uz(v)] - static_cast<int>(rank(images_in(m, q, v))));
  return r;
}

ModuleMap injective_envelope(const BoundQuiverAlgebra& a, const FDModule& m, FDModule* envelope, std::vector<int>* mult) {
  const Quiver& q = a.quiver();
  std::vector<FDModule> parts;
  std::vector<Matrix> rows(uz(q.n));
  for (int v = 0; v < q.n; ++v) rows[uz(v)] = Matrix(0, uz(m.dims[uz(v)]));
  std::vector<int> mu(uz(q.n), 0);
  for (int i = 0; i < q.n; ++i) {
    Matrix s = stacked_out(m, q, i);
    Matrix soc = s.rows() == 0 ? Matrix::identity(uz(m.dims[uz(i)])) : nullspace(s);
    if (soc.cols() == 0) continue;
    // Functionals dual to the socle basis: a left inverse of soc.
    Matrix st = soc.transpose();
    Matrix left = (*inverse(st * soc)) * st;
    FDModule inj = injective(a, i);
    for (std::size_t k = 0; k < left.rows(); ++k) {
      Matrix phi = Matrix::from_rows(left.cols(), {left.row(k)});
      for (int v = 0; v < q.n; ++v) {
        const auto paths = a.basis_between(v, i);
        Matrix fv(paths.size(), uz(m.dims[uz(v)]));
        for (std::size_t r = 0; r < paths.size(); ++r) {
          Matrix row = phi * path_action(m, q, a.basis()[uz(paths[r])]);
          for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = row(0, c);
        }
        rows[uz(v)] = Matrix::stack(rows[uz(v)], fv);
      }
      parts.push_back(inj);
      ++mu[uz(i)];
    }
  }
  if (envelope) {
    *envelope = parts.empty() ? zero_module(q) : direct_sum(parts);
  }
  if (mult) *mult = mu;
  return rows;
}

ModuleMap projective_cover(const BoundQuiverAlgebra& a, const FDModule& m, FDModule* cover, std::vector<int>* mult) {
  const Quiver& q = a.quiver();
  std::vector<FDModule> parts;
  std::vector<Matrix> cols(uz(q.n));
  for (int v = 0; v < q.n; ++v) cols[uz(v)] = Matrix(uz(m.dims[uz(v)]), 0);
  std::vector<int> mu(uz(q.n), 0);
  for (int i = 0; i < q.n; ++i) {
    Quotient top(uz(m.dims[uz(i)]), columns_of(images_in(m, q, i)));
    for (std::size_t g : top.chosen()) {
      Vec gen = unit_vector(uz(m.dims[uz(i)]), g);
      for (int w = 0; w < q.n; ++w) {
        const auto paths = a.basis_between(i, w);
        std::vector<Vec> c;
        for (int p : paths) c.push_back(path_action(m, q, a.basis()[uz(p)]).apply(gen));
        cols[uz(w)] = Matrix::concat(cols[uz(w)], columns_matrix(uz(m.dims[uz(w)]), c));
      }
      parts.push_back(projective(a, i));
      ++mu[uz(i)];
    }
  }
  if (cover) {
    *cover = parts.empty() ? zero_module(q) : direct_sum(parts);
  }
  if (mult) *mult = mu;
  return cols;
}

Resolution minimal_injective_coresolution(const BoundQuiverAlgebra& a, const FDModule& m, int depth) {
  Resolution r;
  FDModule cur = m;
  for (int k = 0; k <= depth && !cur.is_zero(); ++k) {
    FDModule env;
    std::vector<int> mu;
    ModuleMap f = injective_envelope(a, cur, &env, &mu);
    r.terms.push_back(mu);
    cur = cokernel(a, env, f);
  }
  r.complete = cur.is_zero();
  return r;
}

Resolution minimal_projective_resolution(const BoundQuiverAlgebra& a, const FDModule& m, int depth) {
  Resolution r;
  FDModule cur = m;
  for (int k = 0; k <= depth && !cur.is_zero(); ++k) {
    FDModule cov;
    std::vector<int> mu;
    ModuleMap f = projective_cover(a, cur, &cov, &mu);
    r.terms.push_back(mu);
    cur = kernel(a, cov, f);
  }
  r.complete = cur.is_zero();
  return r;
}

int injective_dimension(const BoundQuiverAlgebra& a, const FDModule& m, int depth) {
  return minimal_injective_coresolution(a, m, depth).length();
}

int projective_dimension(const BoundQuiverAlgebra& a, const FDModule& m, int depth) {
  return minimal_projective_resolution(a, m, depth).length();
}

BoundQuiverAlgebra opposite(const BoundQuiverAlgebra& a) {
  QuiverPresentation p = a.presentation();
  for (auto& ar : p.quiver.arrows) std::swap(ar.from, ar.to);
  for (auto& rel : p.relations) {
    PathElement r;
    for (const auto& [path, c] : rel) {
      Path rp{path.end, path.start, {path.arrows.rbegin(), path.arrows.rend()}};
      r[rp] += c;
    }
    rel = std::move(r);
  }
  return BoundQuiverAlgebra(std::move(p));
}

FDModule dual(const FDModule& m) {
  FDModule r;
  r.dims = m.dims;
  for (const auto& mat : m.maps) r.maps.push_back(mat.transpose());
  return r;
}

bool is_projective(const BoundQuiverAlgebra& a, const FDModule& m) {
  FDModule cov;
  projective_cover(a, m, &cov);
  return cov.total() == m.total();
}

bool in_sub(const BoundQuiverAlgebra& a, const FDModule& m) {
  const Quiver& q = a.quiver();
  std::vector<Matrix> joint(uz(q.n));
  for (int v = 0; v < q.n; ++v) joint[uz(v)] = Matrix(0, uz(m.dims[uz(v)]));
  for (int i = 0; i < q.n; ++i)
    for (const auto& f : hom_modules(a, m, projective(a, i)))
      for (int v = 0; v < q.n; ++v) joint[uz(v)] = Matrix::stack(joint[uz(v)], f[uz(v)]);
  for (int v = 0; v < q.n; ++v)
    if (static_cast<int>(rank(joint[uz(v)])) != m.dims[uz(v)]) return false;
  return true;
}

namespace {

struct Summand {
  int vertex;
  ModuleMap map;  // M -> P_vertex
};

// Every map M -> P_j factors through the sum of the chosen summands.
bool is_left_approximation(const BoundQuiverAlgebra& a, const FDModule& m, const std::vector<Summand>& parts,
                           const std::vector<int>& hom_to_p) {
  const Quiver& q = a.quiver();
  std::vector<FDModule> ps;
  ModuleMap f(uz(q.n));
  for (int v = 0; v < q.n; ++v) f[uz(v)] = Matrix(0, uz(m.dims[uz(v)]));
  for (const auto& s : parts) {
    ps.push_back(projective(a, s.vertex));
    for (int v = 0; v < q.n; ++v) f[uz(v)] = Matrix::stack(f[uz(v)], s.map[uz(v)]);
  }
  FDModule e = direct_sum(ps);
  if (ps.empty()) {
    for (int h : hom_to_p)
      if (h) return false;
    return true;
  }
  for (int j = 0; j < q.n; ++j) {
    if (hom_to_p[uz(j)] == 0) continue;
    SpanBuilder sb(0);
    bool init = false;
    for (const auto& h : hom_modules(a, e, projective(a, j))) {
      Vec v = flatten(compose(h, f));
      if (!init) sb = SpanBuilder(v.size()), init = true;
      sb.add(v);
    }
    if (static_cast<int>(sb.dim()) != hom_to_p[uz(j)]) return false;
  }
  return true;
}

}  // namespace

FDModule cosyzygy_sub(const BoundQuiverAlgebra& a, const FDModule& m) {
  if (!in_sub(a, m)) throw std::invalid_argument("cosyzygy_sub: module is not cogenerated by projectives");
  const Quiver& q = a.quiver();
  std::vector<Summand> parts;
  std::vector<int> hom_to_p(uz(q.n), 0);
  for (int i = 0; i < q.n; ++i) {
    auto hs = hom_modules(a, m, projective(a, i));
    hom_to_p[uz(i)] = static_cast<int>(hs.size());
    for (auto& h : hs) parts.push_back({i, std::move(h)});
  }
  for (std::size_t k = 0; k < parts.size();) {
    std::vector<Summand> trial = parts;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_left_approximation(a, m, trial, hom_to_p))
      parts = std::move(trial);
    else
      ++k;
  }
  std::vector<FDModule> ps;
  ModuleMap f(uz(q.n));
  for (int v = 0; v < q.n; ++v) f[uz(v)] = Matrix(0, uz(m.dims[uz(v)]));
  for (const auto& s : parts) {
    ps.push_back(projective(a, s.vertex));
    for (int v = 0; v < q.n; ++v) f[uz(v)] = Matrix::stack(f[uz(v)], s.map[uz(v)]);
  }
  if (ps.empty()) return zero_module(q);
  return cokernel(a, direct_sum(ps), f);
}

int stable_hom(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n) {
  const auto hs = hom_modules(a, m, n);
  if (hs.empty()) return 0;
  FDModule cov;
  ModuleMap pi = projective_cover(a, n, &cov);
  SpanBuilder sb(flatten(hs[0]).size());
  for (const auto& k : hom_modules(a, m, cov)) sb.add(flatten(compose(pi, k)));
  return static_cast<int>(hs.size() - sb.dim());
}

bool isomorphic(const BoundQuiverAlgebra& a, const FDModule& m, const FDModule& n) {
  if (m.dims != n.dims) return false;
  if (m.total() == 0) return true;
  const auto hs = hom_modules(a, m, n);
  if (hs.empty()) return false;
  // Invertible maps form a Zariski-open set: a fixed pseudo-random sequence of
  // combinations finds one with overwhelming likelihood when it exists.
  std::mt19937 gen(20240607u);
  std::uniform_int_distribution<int> coef(-40, 40);
  for (int trial = 0; trial < 48; ++trial) {
    ModuleMap f = hs[0];
    for (auto& fv : f) fv = fv.scaled(0);
    for (const auto& h : hs) {
      Rational c(trial == 0 ? 1 : coef(gen));
      for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + h[v].scaled(c);
    }
    bool ok = true;
    for (std::size_t v = 0; v < f.size() && ok; ++v) ok = rank(f[v]) == f[v].rows();
    if (ok) return true;
  }
  return false;
}

std::vector<NamedModule> cyclic_sub_candidates(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::vector<NamedModule> out;
  auto consider = [&](const FDModule& p, int v, const Vec& gen, const std::string& name) {
    std::vector<Matrix> gens;
    for (int w = 0; w < q.n; ++w)
      gens.push_back(w == v ? columns_matrix(uz(p.dims[uz(w)]), {gen}) : Matrix(uz(p.dims[uz(w)]), 0));
    FDModule s = submodule(a, p, gens);
    if (s.is_zero() || is_projective(a, s)) return;
    for (const auto& o : out)
      if (isomorphic(a, o.module, s)) return;
    out.push_back({name, std::move(s)});
  };
  std::vector<FDModule> ps;
  for (int i = 0; i < q.n; ++i) ps.push_back(projective(a, i));
  for (int i = 0; i < q.n; ++i) {
    const FDModule& p = ps[uz(i)];
    for (int v = 0; v < q.n; ++v) {
      const auto paths = a.basis_between(i, v);
      const std::size_t d = paths.size();
      for (std::size_t k = 0; k < d; ++k)
        consider(p, v, unit_vector(d, k), "A*" + format_path(q, a.basis()[uz(paths[k])]) + " in P" + q.label(i));
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l)
          consider(p, v, add(unit_vector(d, k), unit_vector(d, l)),
                   "A*(" + format_path(q, a.basis()[uz(paths[k])]) + " + " + format_path(q, a.basis()[uz(paths[l])]) +
                       ") in P" + q.label(i));
    }
  }
  // Cyclic submodules of P_i + P_j generated by a pair of basis paths.
  for (int i = 0; i < q.n; ++i)
    for (int j = i; j < q.n; ++j) {
      const FDModule p = direct_sum({ps[uz(i)], ps[uz(j)]});
      for (int v = 0; v < q.n; ++v) {
        const auto pi = a.basis_between(i, v);
        const auto pj = a.basis_between(j, v);
        const std::size_t d = pi.size() + pj.size();
        for (std::size_t k = 0; k < pi.size(); ++k)
          for (std::size_t l = 0; l < pj.size(); ++l)
            consider(p, v, add(unit_vector(d, k), unit_vector(d, pi.size() + l)),
                     "A*(" + format_path(q, a.basis()[uz(pi[k])]) + ", " + format_path(q, a.basis()[uz(pj[l])]) +
                         ") in P" + q.label(i) + "+P" + q.label(j));
      }
    }
  for (auto& c : out) {
    int support = -1, total = c.module.total();
    for (int v = 0; v < q.n; ++v)
      if (c.module.dims[uz(v)] == 1 && total == 1) support = v;
    if (support >= 0) c.name = "S" + q.label(support) + " = " + c.name;
  }
  return out;
}

WitnessReport not_dcy_tilted_witness(const BoundQuiverAlgebra& a, int d) {
  WitnessReport rep;
  rep.d = d;
  const auto cands = cyclic_sub_candidates(a);
  rep.candidates = static_cast<int>(cands.size());
  std::vector<FDModule> shifted;
  for (const auto& c : cands) {
    FDModule s = c.module;
    for (int k = 0; k <= d; ++k) s = cosyzygy_sub(a, s);
    shifted.push_back(std::move(s));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < cands.size() && !rep.found; ++i)
    for (std::size_t j = 0; j < cands.size() && !rep.found; ++j) {
      ++rep.pairs;
      int fwd = stable_hom(a, cands[i].module, cands[j].module);
      int bwd = stable_hom(a, cands[j].module, shifted[i]);
      if (fwd != bwd) {
        rep.found = true;
        rep.m = cands[i].name;
        rep.n = cands[j].name;
        rep.forward = fwd;
        rep.backward = bwd;
      }
    }
  if (rep.found)
    os << "witness: dim stable Hom(M, N) = " << rep.forward << " but dim stable Hom(N, Omega^-" << (d + 1)
       << " M) = " << rep.backward << " for M = " << rep.m << ", N = " << rep.n << "; stable Sub is not "
       << (d + 1) << "-CY, so the algebra is NOT " << d << "-CY-tilted";
  else
    os << "no witness among " << rep.candidates << " cyclic submodules of projectives (" << rep.pairs
       << " pairs); inconclusive";
  rep.text = os.str();
  return rep;
}

}  // namespace orbitcy
