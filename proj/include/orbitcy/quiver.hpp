#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbitcy/linalg.hpp"

namespace orbitcy {

struct Arrow {
  std::string name;
  int from = 0;
  int to = 0;
};

// Vertices are 0..n-1; labels are for display only.
struct Quiver {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;

  std::vector<std::vector<int>> counts() const;  // counts[i][j] = #arrows i -> j
  std::string label(int v) const;
  std::string to_dot(const std::string& name = "Q") const;
};

Quiver quiver_from_counts(const std::vector<std::vector<int>>& counts, std::vector<std::string> labels = {});

// A path: arrows in the order they are traversed. Length zero is the
// idempotent at `start`. Ordered by length, then start, then arrow sequence.
struct Path {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path& o) const = default;
  bool operator<(const Path& o) const;
};

using PathElement = std::map<Path, Rational>;

// Composition notation: the path a then b is written "b*a"; repeated arrows as powers.
std::string format_path(const Quiver& q, const Path& p);
std::string format_element(const Quiver& q, const PathElement& e);

// Parses "b*a - 2*c^2 + e1"-style text over the arrow names of q (composition
// order: the rightmost factor acts first). "e<label>" is an idempotent.
PathElement parse_element(const Quiver& q, const std::string& text);

struct QuiverPresentation {
  Quiver quiver;
  std::vector<PathElement> relations;

  std::vector<std::string> relation_strings() const;
};

// Concatenation "second after first"; callers check composable() first.
bool composable(const Path& first, const Path& second);
Path concat(const Path& first, const Path& second);

// All paths of length <= max_len, sorted.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

// Enumerates vertex bijections s with b[s(i)][s(j)] == a[i][j]. `allowed(i, j)`
// may veto the assignment i -> j. `visit` returns true to stop. Candidates are
// tried in increasing order, so the identity comes first when it qualifies.
void for_each_quiver_iso(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         const std::function<bool(int, int)>& allowed = nullptr);

bool quivers_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace orbitcy
