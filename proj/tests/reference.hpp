#pragma once

// Deliberately naive re-implementations used as test oracles. They share no
// code with the library beyond the Configuration container.

#include <algorithm>
#include <functional>
#include <vector>

#include "sunstrip/model.hpp"

namespace ref {

using sunstrip::Boundary;
using sunstrip::Configuration;
using sunstrip::Insolation;
using sunstrip::ModelSpec;

// Strip words are embedded in a long array: margin lots of padding on each
// side (walls for no-sun, copies for periodic).
struct Line {
  std::vector<int> h;
  int offset;  // index of lot 1
};

inline Line embed(const ModelSpec& spec, const std::vector<int>& w, int margin) {
  const int n = static_cast<int>(w.size());
  Line line{std::vector<int>(n + 2 * margin, 0), margin};
  for (int i = 0; i < n + 2 * margin; ++i) {
    int j = i - margin;
    if (j >= 0 && j < n) {
      line.h[i] = w[j];
    } else if (spec.boundary == Boundary::Periodic && n > 0) {
      line.h[i] = w[((j % n) + n) % n];
    } else if (spec.boundary == Boundary::NoSun && (j == -1 || j == n)) {
      line.h[i] = spec.max_height();
    }
  }
  return line;
}

inline bool strip_house_ok(const ModelSpec& spec, const std::vector<int>& h, int i) {
  if (h[i] == 0) return true;
  int west = 0, east = 0;
  for (int j = 0; j < static_cast<int>(h.size()); ++j) {
    if (j == i) continue;
    int s = h[j] - std::abs(i - j) + 1;
    if (s < 0) s = 0;
    (j < i ? west : east) = std::max(j < i ? west : east, s);
  }
  for (int s = 1; s <= h[i]; ++s) {
    bool ok = spec.insolation == Insolation::OrEastWest ? (s > west || s > east)
                                                        : (s > west && s > east);
    if (!ok) return false;
  }
  return true;
}

inline bool strip_permissible_lots(const ModelSpec& spec, const std::vector<int>& h, int lo,
                                   int hi) {
  for (int i = lo; i < hi; ++i)
    if (!strip_house_ok(spec, h, i)) return false;
  return true;
}

inline bool strip_maximal(const ModelSpec& spec, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  const int k = spec.max_height();
  // Periodic words are unrolled into enough copies that the edited copy is
  // far from the artificial ends.
  const int margin = spec.boundary == Boundary::Periodic ? (4 * k + 2) * std::max(1, n) : 4 * k + 2;
  Line base = embed(spec, w, margin);
  const int lo = spec.boundary == Boundary::Periodic ? 2 * k : margin;
  const int hi = spec.boundary == Boundary::Periodic ? static_cast<int>(base.h.size()) - 2 * k
                                                     : margin + n;
  if (!strip_permissible_lots(spec, base.h, lo, hi)) return false;
  for (int j = 0; j < n; ++j) {
    for (int s : spec.storyHeights) {
      if (s <= w[j]) continue;
      Line mod = base;
      mod.h[margin + j] = s;
      if (strip_permissible_lots(spec, mod.h, lo, hi)) return false;
    }
  }
  return true;
}

inline bool grid_permissible(const std::vector<std::vector<int>>& g) {
  const int m = static_cast<int>(g.size());
  const int n = m ? static_cast<int>(g[0].size()) : 0;
  auto cell = [&](int r, int c) { return (r >= 0 && r < m && c >= 0 && c < n) ? g[r][c] : 0; };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      if (cell(r, c) && cell(r, c - 1) && cell(r, c + 1) && cell(r + 1, c)) return false;
  return true;
}

inline bool grid_maximal(const std::vector<std::vector<int>>& g) {
  if (!grid_permissible(g)) return false;
  for (size_t r = 0; r < g.size(); ++r)
    for (size_t c = 0; c < g[r].size(); ++c) {
      if (g[r][c]) continue;
      auto h = g;
      h[r][c] = 1;
      if (grid_permissible(h)) return false;
    }
  return true;
}

inline std::vector<std::vector<int>> rows_of(const Configuration& c) {
  std::vector<std::vector<int>> g(c.width(), std::vector<int>(c.length()));
  for (int r = 0; r < c.width(); ++r)
    for (int j = 0; j < c.length(); ++j) g[r][j] = c.at(r, j);
  return g;
}

inline bool maximal(const ModelSpec& spec, const Configuration& c) {
  if (spec.is_planar()) return grid_maximal(rows_of(c));
  return strip_maximal(spec, c.cells());
}

// Every word of length n, filtered by the naive maximality test.
inline std::vector<Configuration> brute_force(const ModelSpec& spec, int n) {
  std::vector<int> letters = spec.alphabet();
  std::vector<Configuration> out;
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<int> word(n);
    for (int j = 0; j < n; ++j) word[j] = letters[idx[j]];
    Configuration c = Configuration::from_letters(spec.width, word);
    if (maximal(spec, c)) out.push_back(c);
    int j = n - 1;
    while (j >= 0 && ++idx[j] == static_cast<int>(letters.size())) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

}  // namespace ref
