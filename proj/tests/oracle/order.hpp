#pragma once
// Brute-force reference implementations over plain leq matrices. Nothing here
// uses the library's bitsets or cached tables.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "mosaic/lattice.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;  // m[x][y] == (x <= y)

inline Matrix leq_matrix(const mosaic::Lattice& l) {
  Matrix m(l.size(), std::vector<bool>(l.size()));
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = 0; y < l.size(); ++y) m[x][y] = l.leq(x, y);
  return m;
}

inline std::optional<int> lub(const Matrix& m, int x, int y) {
  const int n = static_cast<int>(m.size());
  std::vector<int> upper;
  for (int z = 0; z < n; ++z)
    if (m[x][z] && m[y][z]) upper.push_back(z);
  for (int z : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int w) { return m[z][w]; })) return z;
  return std::nullopt;
}

inline std::optional<int> glb(const Matrix& m, int x, int y) {
  const int n = static_cast<int>(m.size());
  std::vector<int> lower;
  for (int z = 0; z < n; ++z)
    if (m[z][x] && m[z][y]) lower.push_back(z);
  for (int z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](int w) { return m[w][z]; })) return z;
  return std::nullopt;
}

inline bool is_partial_order(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!m[x][x]) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && m[x][y] && m[y][x]) return false;
      for (std::size_t z = 0; z < n; ++z)
        if (m[x][y] && m[y][z] && !m[x][z]) return false;
    }
  }
  return true;
}

inline bool is_lattice(const Matrix& m) {
  if (m.empty() || !is_partial_order(m)) return false;
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!lub(m, x, y) || !glb(m, x, y)) return false;
  return true;
}

struct Ops {
  std::vector<std::vector<int>> join, meet;
  int bottom = 0, top = 0;
};

inline Ops ops(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Ops o{std::vector<std::vector<int>>(n, std::vector<int>(n)), std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      o.join[x][y] = *lub(m, x, y);
      o.meet[x][y] = *glb(m, x, y);
    }
  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      is_bottom = is_bottom && m[x][y];
      is_top = is_top && m[y][x];
    }
    if (is_bottom) o.bottom = x;
    if (is_top) o.top = x;
  }
  return o;
}

// x <= z  implies  x v (y ^ z) = (x v y) ^ z
inline bool is_modular(const Matrix& m) {
  const Ops o = ops(m);
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m[x][z] && o.join[x][o.meet[y][z]] != o.meet[o.join[x][y]][z]) return false;
  return true;
}

inline bool is_distributive(const Matrix& m) {
  const Ops o = ops(m);
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (o.meet[x][o.join[y][z]] != o.join[o.meet[x][y]][o.meet[x][z]]) return false;
  return true;
}

// Every involutive, order-reversing complement map, found by trying all
// permutations.
inline std::vector<std::vector<int>> orthocomplementations(const Matrix& m) {
  const Ops o = ops(m);
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = p[p[x]] == x && o.join[x][p[x]] == o.top && o.meet[x][p[x]] == o.bottom;
      for (int y = 0; y < n && ok; ++y)
        if (m[x][y] && !m[p[y]][p[x]]) ok = false;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// x <= y implies y = x v (pi(x) ^ y)
inline bool is_orthomodular(const Matrix& m, const std::vector<int>& pi) {
  const Ops o = ops(m);
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m[x][y] && o.join[x][o.meet[pi[x]][y]] != y) return false;
  return true;
}

// Injective maps from `pattern` preserving both operations.
inline bool contains_copy(const Matrix& host, const Matrix& pattern) {
  const Ops h = ops(host), p = ops(pattern);
  const int n = static_cast<int>(host.size()), k = static_cast<int>(pattern.size());
  if (k > n) return false;
  std::vector<int> image(k, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) {
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          if (h.join[image[x]][image[y]] != image[p.join[x][y]] ||
              h.meet[image[x]][image[y]] != image[p.meet[x][y]])
            return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = a[x][y] == b[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
