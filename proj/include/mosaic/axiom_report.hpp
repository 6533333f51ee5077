#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mosaic/element_set.hpp"

namespace mosaic {

/// Concrete counterexample: the tuple that falsifies an axiom, plus a short
/// reason code naming the clause that failed.
struct Witness {
  std::vector<Element> elements;
  std::string reason;

  bool operator==(const Witness&) const = default;
};

/// Outcome of checking one axiom. A witness is present exactly when the
/// axiom fails, so `holds()` is derived rather than stored.
struct AxiomReport {
  std::string axiom;
  std::optional<Witness> witness;

  bool holds() const { return !witness.has_value(); }

  static AxiomReport pass(std::string axiom) { return {std::move(axiom), std::nullopt}; }
  static AxiomReport fail(std::string axiom, std::vector<Element> elements, std::string reason) {
    return {std::move(axiom), Witness{std::move(elements), std::move(reason)}};
  }
};

inline bool all_hold(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds()) return false;
  return true;
}

/// First report with the given axiom name, or nullptr.
inline const AxiomReport* find_report(const std::vector<AxiomReport>& reports,
                                      const std::string& axiom) {
  for (const auto& r : reports)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

}  // namespace mosaic
