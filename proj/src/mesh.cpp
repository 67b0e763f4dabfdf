#include "orbitcy/mesh.hpp"

#include <algorithm>
#include <sstream>

namespace orbitcy {

int HammockTable::at(ZVertex z) const {
  if (!window.contains(z)) return 0;
  return f[(z.p - window.p_min) * rank + (z.v - 1)];
}

std::string HammockTable::to_json() const {
  std::ostringstream os;
  os << "{\"source\":\"" << to_string(source) << "\",\"dims\":{";
  bool first = true;
  for (int p = window.p_min; p <= window.p_max; ++p)
    for (int v = 1; v <= rank; ++v) {
      int val = at({p, v});
      if (val == 0) continue;
      if (!first) os << ",";
      first = false;
      os << "\"" << p << ":" << v << "\":" << val;
    }
  os << "}}";
  return os.str();
}

HammockTable hammock(const DynkinDiagram& d, const Window& w, ZVertex x) {
  return hammock(d, w, x, [&d](ZVertex z, int i) { return apply_sigma(d, z, i); });
}

HammockTable hammock(const DynkinDiagram& d, const Window& w, ZVertex x, const ShiftRule& shift) {
  if (x.p <= w.p_min || x.p >= w.p_max) throw std::invalid_argument("hammock: source must lie strictly inside the window");
  HammockTable t{x, w, d.rank, std::vector<int>(static_cast<std::size_t>(w.width() * d.rank), 0)};
  const ZVertex sx = shift(x, 1);
  auto val = [&](ZVertex z) { return t.at(z); };
  for (int p = w.p_min; p <= w.p_max; ++p)
    for (int v : d.topo) {
      ZVertex z{p, v};
      int s = 0;
      for (const auto& m : predecessors(d, z)) s += val(m);
      s -= val(tau(z));
      if (z == x) ++s;
      if (z == sx) ++s;
      if (s < 0)
        throw std::logic_error("hammock: negative value at " + to_string(z) + " (inconsistent shift)");
      t.f[(p - w.p_min) * d.rank + (v - 1)] = s;
    }
  for (int v = 1; v <= d.rank; ++v)
    if (t.at({w.p_max, v}) != 0) throw WindowExhausted("window exhausted: hammock of " + to_string(x) + " reaches slice " + std::to_string(w.p_max));
  return t;
}

HomTable::HomTable(const DynkinDiagram& d, ZVertex source, int p_max)
    : source_(source), p_max_(p_max), rank_(d.rank) {
  nodes_.resize(static_cast<std::size_t>((p_max - source.p + 1) * rank_));
  for (int p = source.p; p <= p_max; ++p)
    for (int v : d.topo) {
      ZVertex z{p, v};
      Node& node = nodes_[index(z)];
      std::vector<int> mids;
      for (const auto& m : predecessors(d, z))
        if (covers(m)) mids.push_back(index(m));
      if (z == source) {
        node.dim = 1;
        node.reps.push_back({});
        for (int mi : mids) node.in.push_back({mi, Matrix(1, nodes_[mi].dim)});
        continue;
      }
      int total = 0;
      std::vector<int> offset;
      for (int mi : mids) {
        offset.push_back(total);
        total += nodes_[mi].dim;
      }
      std::vector<Vec> image;
      ZVertex tz = tau(z);
      if (covers(tz) && nodes_[index(tz)].dim > 0) {
        const int dt = nodes_[index(tz)].dim;
        for (int k = 0; k < dt; ++k) {
          Vec col(total);
          for (std::size_t i = 0; i < mids.size(); ++i) {
            const Matrix* a = action(tz, vertex(mids[i]));
            if (!a) throw std::logic_error("knitting: missing mesh arrow");
            for (int r = 0; r < nodes_[mids[i]].dim; ++r) col[offset[i] + r] = (*a)(r, k);
          }
          image.push_back(std::move(col));
        }
      }
      Quotient q(static_cast<std::size_t>(total), image);
      node.dim = static_cast<int>(q.dim());
      for (auto j : q.chosen()) {
        std::size_t i = 0;
        while (i + 1 < mids.size() && offset[i + 1] <= static_cast<int>(j)) ++i;
        node.reps.push_back({mids[i], static_cast<int>(j) - offset[i]});
      }
      for (std::size_t i = 0; i < mids.size(); ++i) {
        Matrix a(node.dim, nodes_[mids[i]].dim);
        for (int r = 0; r < node.dim; ++r)
          for (int c = 0; c < nodes_[mids[i]].dim; ++c) a(r, c) = q.projection()(r, offset[i] + c);
        node.in.push_back({mids[i], std::move(a)});
      }
    }
  for (int v = 1; v <= rank_; ++v)
    if (nodes_[index({p_max, v})].dim != 0)
      throw WindowExhausted("window exhausted: Hom(" + to_string(source) + ",-) nonzero on slice " + std::to_string(p_max));
}

int HomTable::dim(ZVertex z) const {
  if (!covers(z)) return 0;
  return nodes_[index(z)].dim;
}

const Matrix* HomTable::action(ZVertex from, ZVertex to) const {
  if (!covers(from) || !covers(to)) return nullptr;
  int fi = index(from);
  for (const auto& [i, m] : nodes_[index(to)].in)
    if (i == fi) return &m;
  return nullptr;
}

std::vector<ZVertex> HomTable::basis_path(ZVertex z, int k) const {
  std::vector<ZVertex> path;
  int idx = index(z);
  while (true) {
    path.push_back(vertex(idx));
    const Rep& r = nodes_[idx].reps.at(static_cast<std::size_t>(k));
    if (r.prev < 0) break;
    idx = r.prev;
    k = r.prev_k;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Vec HomTable::fold(Vec coords, const std::vector<ZVertex>& path) const {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!covers(path[i + 1])) return {};
    if (dim(path[i + 1]) == 0) return Vec();
    const Matrix* a = action(path[i], path[i + 1]);
    if (!a) throw std::invalid_argument("fold: not an arrow " + to_string(path[i]) + " -> " + to_string(path[i + 1]));
    coords = a->apply(coords);
  }
  return coords;
}

MeshCategory::MeshCategory(DynkinDiagram d) : d_(std::move(d)), reach_(d_.coxeter_number + 1) {
  tables_.reserve(static_cast<std::size_t>(d_.rank));
  for (int v = 1; v <= d_.rank; ++v) tables_.emplace_back(d_, ZVertex{0, v}, reach_);
}

int MeshCategory::dim(ZVertex x, ZVertex y) const { return table(x.v).dim(tau(y, x.p)); }

std::vector<ZVertex> MeshCategory::basis_path(ZVertex x, ZVertex y, int k) const {
  auto path = table(x.v).basis_path(tau(y, x.p), k);
  for (auto& z : path) z = tau(z, -x.p);
  return path;
}

Vec MeshCategory::fold(ZVertex x, const Vec& f, const std::vector<ZVertex>& path) const {
  std::vector<ZVertex> local(path);
  for (auto& z : local) z = tau(z, x.p);
  Vec r = table(x.v).fold(f, local);
  if (r.empty()) r.assign(static_cast<std::size_t>(dim(x, path.back())), Rational(0));
  return r;
}

Vec MeshCategory::compose(ZVertex x, ZVertex y, ZVertex z, const Vec& f, const Vec& g) const {
  Vec out(static_cast<std::size_t>(dim(x, z)));
  if (out.empty()) return out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(g[k]) == 0) continue;
    axpy(out, g[k], fold(x, f, basis_path(y, z, static_cast<int>(k))));
  }
  return out;
}

MorphismSpace hom_basis(const MeshCategory& m, ZVertex x, ZVertex y) {
  MorphismSpace s{x, y, m.dim(x, y), {}};
  for (int k = 0; k < s.dim; ++k) s.basis.push_back(m.basis_path(x, y, k));
  return s;
}

SliceReport slice_check(const MeshCategory& m) {
  const auto& d = m.diagram();
  return slice_check(m, [&d](ZVertex z, int i) { return apply_sigma(d, z, i); });
}

SliceReport slice_check(const MeshCategory& m, const ShiftRule& shift) {
  SliceReport rep;
  const auto& d = m.diagram();
  for (int u : d.topo)
    for (int v : d.topo) {
      ZVertex x{0, u}, y{0, v};
      for (int i = -3; i <= 3; ++i) {
        if (i == 0) continue;
        int h = m.dim(x, shift(y, i));
        if (h != 0) {
          rep.pass = false;
          rep.violations.push_back("Hom(" + to_string(x) + ", S^" + std::to_string(i) + " " + to_string(y) + ") = " + std::to_string(h));
        }
      }
    }
  // Unitriangularity of the slice Hom matrix in topological order.
  for (std::size_t a = 0; a < d.topo.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      int h = m.dim({0, d.topo[a]}, {0, d.topo[b]});
      int want = a == b ? 1 : 0;
      if (h != want) {
        rep.pass = false;
        rep.violations.push_back("slice Hom(" + std::to_string(d.topo[a]) + "," + std::to_string(d.topo[b]) + ") = " + std::to_string(h));
      }
    }
  return rep;
}

}  // namespace orbitcy
