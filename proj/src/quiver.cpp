#include "orbitcy/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace orbitcy {

std::vector<std::vector<int>> Quiver::counts() const {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& a : arrows) ++c[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)];
  return c;
}

std::string Quiver::label(int v) const {
  if (v < static_cast<int>(labels.size())) return labels[static_cast<std::size_t>(v)];
  return std::to_string(v + 1);
}

std::string Quiver::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < n; ++v) os << "  \"" << label(v) << "\";\n";
  for (const auto& a : arrows)
    os << "  \"" << label(a.from) << "\" -> \"" << label(a.to) << "\" [label=\"" << a.name << "\"];\n";
  os << "}\n";
  return os.str();
}

Quiver quiver_from_counts(const std::vector<std::vector<int>>& counts, std::vector<std::string> labels) {
  Quiver q;
  q.n = static_cast<int>(counts.size());
  q.labels = std::move(labels);
  int k = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      for (int c = 0; c < counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++c)
        q.arrows.push_back({"x" + std::to_string(++k), i, j});
  return q;
}

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (start != o.start) return start < o.start;
  if (end != o.end) return end < o.end;
  return arrows < o.arrows;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.label(p.start);
  std::vector<std::string> parts;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend();) {
    int a = *it;
    int k = 0;
    while (it != p.arrows.rend() && *it == a) ++k, ++it;
    std::string s = q.arrows[static_cast<std::size_t>(a)].name;
    if (k > 1) s += "^" + std::to_string(k);
    parts.push_back(s);
  }
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? "*" : "") + parts[i];
  return r;
}

std::string format_element(const Quiver& q, const PathElement& e) {
  std::string r;
  for (const auto& [p, c] : e) {
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    std::string term = (a == 1) ? format_path(q, p) : a.get_str() + "*" + format_path(q, p);
    if (r.empty())
      r = (sgn(c) < 0 ? "-" : "") + term;
    else
      r += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return r.empty() ? "0" : r;
}

PathElement parse_element(const Quiver& q, const std::string& text) {
  PathElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_element: " + why + " in '" + text + "'");
  };
  skip();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Rational coef(sign);
    std::vector<std::pair<std::string, int>> factors;
    while (true) {
      skip();
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '/')) ++j;
      if (j == i) fail("expected a factor");
      std::string tok = text.substr(i, j - i);
      i = j;
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        power = std::stoi(text.substr(i, k - i));
        i = k;
      }
      if (std::isdigit(static_cast<unsigned char>(tok[0])))
        coef *= Rational(tok);
      else
        factors.push_back({tok, power});
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (factors.empty()) fail("term without a path");
    Path p;
    bool first = true;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const auto& [name, power] = *it;
      int a = -1;
      for (int k = 0; k < static_cast<int>(q.arrows.size()); ++k)
        if (q.arrows[static_cast<std::size_t>(k)].name == name) a = k;
      if (a < 0) {
        int v = -1;
        for (int k = 0; k < q.n; ++k)
          if ("e" + q.label(k) == name) v = k;
        if (v < 0) fail("unknown arrow '" + name + "'");
        if (first) p = {v, v, {}};
        else if (p.end != v) fail("idempotent does not match");
        first = false;
        continue;
      }
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      for (int k = 0; k < power; ++k) {
        if (first) p = {ar.from, ar.from, {}};
        first = false;
        if (p.end != ar.from) fail("non-composable factors");
        p.arrows.push_back(a);
        p.end = ar.to;
      }
    }
    out[p] += coef;
    skip();
  }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<std::string> QuiverPresentation::relation_strings() const {
  std::vector<std::string> r;
  for (const auto& e : relations) r.push_back(format_element(quiver, e));
  return r;
}

bool composable(const Path& first, const Path& second) { return first.end == second.start; }

Path concat(const Path& first, const Path& second) {
  Path p{first.start, second.end, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (int v = 0; v < q.n; ++v) layer.push_back({v, v, {}});
  all = layer;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (q.arrows[static_cast<std::size_t>(a)].from == p.end) {
          Path r = p;
          r.arrows.push_back(a);
          r.end = q.arrows[static_cast<std::size_t>(a)].to;
          next.push_back(std::move(r));
        }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

void for_each_quiver_iso(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         const std::function<bool(int, int)>& allowed) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return;
  auto profile = [](const std::vector<std::vector<int>>& m, int v) {
    int out = 0, in = 0;
    for (std::size_t j = 0; j < m.size(); ++j) out += m[static_cast<std::size_t>(v)][j], in += m[j][static_cast<std::size_t>(v)];
    return std::tuple<int, int, int>(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)], out, in);
  };
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == n) {
      stop = visit(sigma);
      return;
    }
    for (int j = 0; j < n && !stop; ++j) {
      if (used[static_cast<std::size_t>(j)] || profile(a, i) != profile(b, j)) continue;
      if (allowed && !allowed(i, j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        int sk = sigma[static_cast<std::size_t>(k)];
        ok = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(j)][static_cast<std::size_t>(sk)] &&
             a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(sk)][static_cast<std::size_t>(j)];
      }
      if (!ok) continue;
      sigma[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = true;
      rec(i + 1);
      used[static_cast<std::size_t>(j)] = false;
      sigma[static_cast<std::size_t>(i)] = -1;
    }
  };
  rec(0);
}

bool quivers_isomorphic(const Quiver& a, const Quiver& b) {
  bool found = false;
  for_each_quiver_iso(a.counts(), b.counts(), [&](const std::vector<int>&) { return found = true; });
  return found;
}

}  // namespace orbitcy
