#pragma once

// Definitional reference implementations used to check the library. They are
// deliberately naive and share no code with the paths they verify.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "vecsim/grid.hpp"

namespace vecsim::testing {

inline std::filesystem::path data_path(const char* name) { return std::filesystem::path(VECSIM_DATA_DIR) / name; }

inline BinaryGrid random_grid(std::mt19937& gen, int w, int h, double p_sand) {
  std::bernoulli_distribution coin(p_sand);
  BinaryGrid g(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) g(x, y) = coin(gen) ? 1 : 0;
  return g;
}

/// Erosion straight from the definition, with an explicit list of offsets.
inline BinaryGrid brute_erode(const BinaryGrid& g, const std::vector<std::pair<int, int>>& offsets) {
  BinaryGrid out(g.width(), g.height());
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      bool keep = true;
      for (auto [dx, dy] : offsets) {
        const int nx = x + dx, ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= g.width() || ny >= g.height() || g(nx, ny) == 0) {
          keep = false;
          break;
        }
      }
      out(x, y) = keep ? 1 : 0;
    }
  }
  return out;
}

/// Union-find component count.
inline int union_find_components(const BinaryGrid& g, int connectivity) {
  const int n = g.width() * g.height();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g(x, y)) continue;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (connectivity == 4 && dx != 0 && dy != 0) continue;
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= g.width() || ny >= g.height() || !g(nx, ny)) continue;
          unite(y * g.width() + x, ny * g.width() + nx);
        }
      }
    }
  }
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (g.cells()[static_cast<std::size_t>(i)] && find(i) == i) ++count;
  }
  return count;
}

/// Squared-difference sum over two equally long direction lists, written out
/// from the case rule: both defined -> (u - v)^2, both ND -> 0, else (pi/b)^2.
/// Values are assumed to already be DI representatives.
inline double case_rule_sum(const std::vector<Direction>& a, const std::vector<Direction>& b, double bparam) {
  const double pen = 3.14159265358979323846 / bparam;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].has_value() && b[i].has_value()) {
      s += (*a[i] - *b[i]) * (*a[i] - *b[i]);
    } else if (a[i].has_value() != b[i].has_value()) {
      s += pen * pen;
    }
  }
  return s;
}

/// Counts anchors (x, y) for which every template cell and the centre lie in a
/// W x H field, by enumerating them.
inline std::size_t enumerate_anchors(int W, int H, const std::vector<Cell>& offsets) {
  std::size_t n = 0;
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      bool ok = true;
      for (const Cell o : offsets) {
        const int cx = x + o.x, cy = y + o.y;
        if (cx < 0 || cy < 0 || cx >= W || cy >= H) ok = false;
      }
      n += ok ? 1 : 0;
    }
  }
  return n;
}

}  // namespace vecsim::testing
