#include "orbitcy/orbitcat.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace orbitcy {

namespace {

int pos_mod(int a, int m) { return ((a % m) + m) % m; }

bool pure_translation(const AutWord& w) { return w.b == 0 && w.c == 0; }

}  // namespace

std::string CategorySpec::grammar() const {
  std::ostringstream os;
  os << "Db(" << diagram.name() << ")/t^" << generator.a;
  if (generator.b != 0) os << "*S^" << generator.b;
  if (generator.c != 0) os << "*phi";
  return os.str();
}

CategorySpec make_spec(char letter, int rank, AutWord g, std::string name) {
  CategorySpec s;
  s.diagram = build_diagram(letter, rank);
  s.generator = normalize(s.diagram, g);
  s.name = name.empty() ? s.grammar() : std::move(name);
  return s;
}

CategorySpec preset_A(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("A(n,t) needs n >= 1 and t >= 1");
  return make_spec('A', (2 * t + 1) * (n + 1) - 3, {t * (n + 1) - 1, 1, 0},
                   "A(" + std::to_string(n) + "," + std::to_string(t) + ")");
}

CategorySpec preset_Dfam(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("Dfam(n,t) needs n >= 1 and t >= 1");
  return make_spec('D', 2 * t * (n + 1), {n + 1, 0, n % 2},
                   "Dfam(" + std::to_string(n) + "," + std::to_string(t) + ")");
}

CategorySpec preset_Dk(int k, int n) {
  if (k < 2 || n < 1 || k * n < 4) throw std::invalid_argument("Dk(k,n) needs k > 1, n >= 1, kn >= 4");
  return make_spec('D', k * n, {n, 0, n % 2}, "Dk(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

std::vector<std::string> preset_catalog() {
  return {"A(n,t)", "Dfam(n,t)", "Dk(k,n)", "E7t2", "E7t5", "E8t4", "E8t8", "D4tphi", "D4t2phi"};
}

std::string spec_usage() {
  std::ostringstream os;
  os << "category spec: Db(<letter><rank>)/t^<a>[*S^<b>][*phi] or one of:";
  for (const auto& p : preset_catalog()) os << " " << p;
  return os.str();
}

CategorySpec parse_spec(const std::string& text) {
  std::smatch m;
  static const std::regex two(R"(^(A|Dfam|Dk)\((\d+),(\d+)\)$)");
  static const std::regex gram(R"(^Db\(([ADE])(\d+)\)/t\^(-?\d+)(\*S\^(-?\d+))?(\*phi)?$)");
  try {
    if (std::regex_match(text, m, two)) {
      int a = std::stoi(m[2]), b = std::stoi(m[3]);
      if (m[1] == "A") return preset_A(a, b);
      if (m[1] == "Dfam") return preset_Dfam(a, b);
      return preset_Dk(a, b);
    }
    if (text == "E7t2") return make_spec('E', 7, {2, 0, 0}, text);
    if (text == "E7t5") return make_spec('E', 7, {5, 0, 0}, text);
    if (text == "E8t4") return make_spec('E', 8, {4, 0, 0}, text);
    if (text == "E8t8") return make_spec('E', 8, {8, 0, 0}, text);
    if (text == "D4tphi") return make_spec('D', 4, {1, 0, 1}, text);
    if (text == "D4t2phi") return make_spec('D', 4, {2, 0, 1}, text);
    if (std::regex_match(text, m, gram)) {
      AutWord w{std::stoi(m[3]), m[5].matched ? std::stoi(m[5]) : 0, m[6].matched ? 1 : 0};
      return make_spec(m[1].str()[0], std::stoi(m[2]), w);
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("invalid category spec '" + text + "': " + e.what());
  }
  throw std::invalid_argument("unknown category spec '" + text + "'; " + spec_usage());
}

int OrbitHom::identity_index() const {
  if (from != to) return -1;
  for (const auto& c : comps)
    if (c.i == 0 && c.j == 0) return c.offset;
  return -1;
}

OrbitCategory::OrbitCategory(CategorySpec spec) : spec_(std::move(spec)), mesh_(spec_.diagram) {
  const auto& d = spec_.diagram;
  const AutWord g = spec_.generator;
  if (pure_translation(g)) {
    period_ = 1;
    translation_ = g.a;
  } else {
    AutWord g2 = power(d, g, 2);
    if (!pure_translation(g2)) throw std::invalid_argument("invalid orbit spec: no power of the generator is a translation");
    period_ = 2;
    translation_ = g2.a;
  }
  if (translation_ == 0) throw std::invalid_argument("invalid orbit spec: infinite orbit set or non-free action (" + spec_.grammar() + ")");
  const int band = std::abs(translation_);
  for (int p = 0; p < band; ++p)
    for (int v : d.topo) {
      ZVertex z{p, v};
      if (period_ == 2 && apply_aut(d, g, z) == z)
        throw std::invalid_argument("invalid orbit spec: generator fixes " + to_string(z));
      if (canonical(z) == z) reps_.push_back(z);
    }
  std::sort(reps_.begin(), reps_.end());
  for (std::size_t i = 0; i < reps_.size(); ++i) index_[reps_[i]] = static_cast<int>(i);
  if (static_cast<int>(reps_.size()) * period_ != band * d.rank)
    throw std::invalid_argument("invalid orbit spec: orbit count does not match the fundamental domain");
  const std::size_t n = reps_.size();
  cache_.assign(5 * n * n, 0);
  for (int s = -1; s <= 3; ++s)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        cache_[(static_cast<std::size_t>(s + 1) * n + x) * n + y] =
            hom_dim_range(static_cast<int>(x), static_cast<int>(y), s, 0, mesh_.reach());
}

ZVertex OrbitCategory::act(int i, int j, ZVertex z) const {
  for (int k = 0; k < i; ++k) z = apply_aut(spec_.diagram, spec_.generator, z);
  return tau(z, j * translation_);
}

ZVertex OrbitCategory::canonical(ZVertex z) const {
  const int band = std::abs(translation_);
  ZVertex best{0, 0};
  bool have = false;
  for (int i = 0; i < period_; ++i) {
    ZVertex w = act(i, 0, z);
    int p = pos_mod(w.p, band);
    ZVertex c{p, w.v};
    if (!have || c < best) best = c, have = true;
  }
  return best;
}

int OrbitCategory::object_of(ZVertex z) const { return index_.at(canonical(z)); }

int OrbitCategory::shift(int x, int s) const { return object_of(apply_sigma(spec_.diagram, rep(x), s)); }

int OrbitCategory::tau_of(int x) const { return object_of(tau(rep(x))); }

std::vector<OrbitComponent> OrbitCategory::members(ZVertex y, int lo, int hi) const {
  std::vector<OrbitComponent> r;
  for (int i = 0; i < period_; ++i) {
    ZVertex w = act(i, 0, y);
    for (int p = lo; p <= hi; ++p) {
      if ((w.p - p) % translation_ != 0) continue;
      int j = (w.p - p) / translation_;
      r.push_back({tau(w, j * translation_), i, j, 0, 0});
    }
  }
  std::sort(r.begin(), r.end(), [](const OrbitComponent& a, const OrbitComponent& b) { return a.target < b.target; });
  return r;
}

int OrbitCategory::hom_dim_range(int x, int y, int s, int lo, int hi) const {
  ZVertex xr = rep(x);
  ZVertex t = apply_sigma(spec_.diagram, rep(y), s);
  int total = 0;
  for (const auto& c : members(t, xr.p + lo, xr.p + hi)) total += mesh_.dim(xr, c.target);
  return total;
}

int OrbitCategory::hom_dim(int x, int y, int s) const {
  const std::size_t n = reps_.size();
  if (s >= -1 && s <= 3)
    return cache_[(static_cast<std::size_t>(s + 1) * n + static_cast<std::size_t>(x)) * n + static_cast<std::size_t>(y)];
  return hom_dim_range(x, y, s, 0, mesh_.reach());
}

OrbitHom OrbitCategory::hom_basis(int x, int y) const {
  OrbitHom h;
  h.from = x;
  h.to = y;
  ZVertex xr = rep(x);
  for (auto c : members(rep(y), xr.p, xr.p + mesh_.reach())) {
    c.dim = mesh_.dim(xr, c.target);
    if (c.dim == 0) continue;
    c.offset = h.dim;
    h.dim += c.dim;
    h.comps.push_back(c);
  }
  return h;
}

Vec OrbitCategory::compose(int x, int y, int z, const Vec& f, const Vec& g) const {
  return compose(hom_basis(x, y), hom_basis(y, z), hom_basis(x, z), f, g);
}

Vec OrbitCategory::compose(const OrbitHom& hxy, const OrbitHom& hyz, const OrbitHom& hxz, const Vec& f,
                           const Vec& g) const {
  if (hxy.to != hyz.from || hxy.from != hxz.from || hyz.to != hxz.to)
    throw std::invalid_argument("orbit compose: mismatched endpoints");
  if (static_cast<int>(f.size()) != hxy.dim || static_cast<int>(g.size()) != hyz.dim)
    throw std::invalid_argument("orbit compose: coordinate length mismatch");
  const ZVertex xr = rep(hxy.from);
  const ZVertex yr = rep(hxy.to);
  Vec out(static_cast<std::size_t>(hxz.dim));
  for (const auto& cf : hxy.comps) {
    Vec fc(f.begin() + cf.offset, f.begin() + cf.offset + cf.dim);
    if (is_zero(fc)) continue;
    for (const auto& cg : hyz.comps) {
      ZVertex w = act(cf.i, cf.j, cg.target);
      const OrbitComponent* dst = nullptr;
      for (const auto& c : hxz.comps)
        if (c.target == w) dst = &c;
      if (!dst) continue;
      for (int k = 0; k < cg.dim; ++k) {
        const Rational& coef = g[static_cast<std::size_t>(cg.offset + k)];
        if (sgn(coef) == 0) continue;
        auto path = mesh_.basis_path(yr, cg.target, k);
        for (auto& v : path) v = act(cf.i, cf.j, v);
        Vec img = mesh_.fold(xr, fc, path);
        for (int r = 0; r < dst->dim; ++r) out[static_cast<std::size_t>(dst->offset + r)] += coef * img[static_cast<std::size_t>(r)];
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> OrbitCategory::ar_arrows() const {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < size(); ++x)
    for (const auto& z : successors(spec_.diagram, rep(x))) r.push_back({x, object_of(z)});
  return r;
}

std::string OrbitCategory::ar_dot() const {
  std::ostringstream os;
  os << "digraph AR {\n";
  for (int x = 0; x < size(); ++x) os << "  \"" << label(x) << "\";\n";
  for (auto [a, b] : ar_arrows()) os << "  \"" << label(a) << "\" -> \"" << label(b) << "\";\n";
  for (int x = 0; x < size(); ++x)
    os << "  \"" << label(x) << "\" -> \"" << label(tau_of(x)) << "\" [style=dashed, label=\"tau\"];\n";
  os << "}\n";
  return os.str();
}

std::string OrbitCategory::to_json() const {
  nlohmann::ordered_json j;
  j["spec"] = spec_.name;
  std::vector<std::string> objs;
  for (int x = 0; x < size(); ++x) objs.push_back(label(x));
  j["objects"] = objs;
  std::vector<std::vector<int>> hom(static_cast<std::size_t>(size())), ext(static_cast<std::size_t>(size()));
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      hom[static_cast<std::size_t>(x)].push_back(hom_dim(x, y, 0));
      ext[static_cast<std::size_t>(x)].push_back(hom_dim(x, y, 1));
    }
  j["hom"] = hom;
  j["ext1"] = ext;
  return j.dump();
}

TwoCYReport verify_2cy(const OrbitCategory& c) {
  TwoCYReport r;
  for (int x = 0; x < c.size(); ++x) {
    if (c.tau_of(x) != c.shift(x, 1)) {
      r.pass = false;
      r.violations.push_back("tau " + c.label(x) + " != Sigma " + c.label(x));
    }
    for (int y = 0; y < c.size(); ++y)
      for (int s = 0; s <= 1; ++s) {
        int a = c.hom_dim(x, y, s), b = c.hom_dim(y, x, 2 - s);
        if (a != b) {
          r.pass = false;
          r.violations.push_back("dim Hom(" + c.label(x) + ", S^" + std::to_string(s) + " " + c.label(y) + ") = " +
                                 std::to_string(a) + " but dim Hom(" + c.label(y) + ", S^" + std::to_string(2 - s) + " " +
                                 c.label(x) + ") = " + std::to_string(b));
        }
      }
  }
  return r;
}

}  // namespace orbitcy
