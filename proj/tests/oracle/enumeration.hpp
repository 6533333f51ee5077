#pragma once
// Slow but obviously complete: every strict upper-triangular relation on the
// n-2 middle elements is tried, kept if transitive, closed with bounds, kept
// if a lattice, and reduced to a canonical bit string by trying all
// relabelings of the middle elements.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "order.hpp"

namespace oracle {

inline Matrix bounded_closure(int middle, const std::vector<std::vector<bool>>& less) {
  const int n = middle + 2;
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    m[0][x] = true;
    m[x][n - 1] = true;
    m[x][x] = true;
  }
  for (int i = 0; i < middle; ++i)
    for (int j = 0; j < middle; ++j)
      if (less[i][j]) m[i + 1][j + 1] = true;
  return m;
}

inline std::vector<bool> canonical_bits(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return {true};
  std::vector<int> p(n - 2);
  std::iota(p.begin(), p.end(), 1);
  std::vector<bool> best;
  do {
    std::vector<int> perm{0};
    perm.insert(perm.end(), p.begin(), p.end());
    perm.push_back(n - 1);
    std::vector<bool> bits;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) bits.push_back(m[perm[x]][perm[y]]);
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::set<std::vector<bool>> lattice_classes(int n) {
  std::set<std::vector<bool>> classes;
  if (n == 1) {
    classes.insert({true});
    return classes;
  }
  const int middle = n - 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < middle; ++i)
    for (int j = i + 1; j < middle; ++j) slots.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> less(middle, std::vector<bool>(middle, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) less[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (int a = 0; a < middle && transitive; ++a)
      for (int b = 0; b < middle && transitive; ++b)
        for (int c = 0; c < middle && transitive; ++c)
          if (less[a][b] && less[b][c] && !less[a][c]) transitive = false;
    if (!transitive) continue;
    const Matrix m = bounded_closure(middle, less);
    if (is_lattice(m)) classes.insert(canonical_bits(m));
  }
  return classes;
}

inline Matrix from_bits(const std::vector<bool>& bits) {
  int n = 0;
  while (static_cast<std::size_t>(n * n) < bits.size()) ++n;
  Matrix m(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[x][y] = bits[x * n + y];
  return m;
}

}  // namespace oracle
