#pragma once

#include <cstddef>
#include <vector>

#include "mosaic/element_set.hpp"

namespace mosaic::detail {

// Depth-first search over injective maps {0..m-1} -> {0..n-1}. Position i is
// assigned from `candidates(i)`; `consistent(map, i)` sees map[0..i] and may
// reject the extension. `visit(map)` is called on every complete map and
// returns true to stop the search. Returns true iff stopped early.
template <class Candidates, class Consistent, class Visit>
bool search_injections(std::size_t m, std::size_t n, Candidates&& candidates,
                       Consistent&& consistent, Visit&& visit) {
  std::vector<Element> map(m);
  ElementSet used;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) return visit(static_cast<const std::vector<Element>&>(map));
    for (Element c : ElementSet(candidates(i)) - used) {
      if (c >= n) break;
      map[i] = c;
      if (!consistent(static_cast<const std::vector<Element>&>(map), i)) continue;
      used.insert(c);
      bool stop = self(self, i + 1);
      used.erase(c);
      if (stop) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace mosaic::detail
