#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wythoff/diagram.hpp"

namespace wythoff {

/// A {0,1,2} marking of the nodes of a diagram: 0 = crossed box, 1 = box,
/// 2 = circle. Decorations compare by value, so two (★) paths that reach the
/// same marking are the same decoration.
class Decoration012 {
 public:
  Decoration012() = default;
  /// Throws NotApplicable if a 2 is adjacent to a 0 or a value is out of range.
  Decoration012(const DecoratedDiagram& d, std::vector<std::uint8_t> values);
  /// The {0,1} start decoration read off the diagram's marks.
  static Decoration012 from_marks(const DecoratedDiagram& d);

  const std::vector<std::uint8_t>& values() const { return values_; }
  std::uint8_t operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(values_.size()); }

  NodeSet with_value(std::uint8_t value) const;
  NodeSet circled() const { return with_value(2); }   ///< S = f⁻¹(2)
  int rank() const { return popcount(circled()); }

  std::string to_string() const;   ///< e.g. "(1,2,1)"

  auto operator<=>(const Decoration012&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// Rule (★) at node w. Throws NotApplicable unless f(w) = 1.
Decoration012 apply_star(const DecoratedDiagram& d, const Decoration012& f, int w);

/// All decorations reached by exactly k applications of (★), deduplicated by
/// value. The brute-force closure route.
std::set<Decoration012> reachable(const DecoratedDiagram& d, const Decoration012& f0, int k);

/// S ⊆ V with |S| = k such that every component of D|_S meets f0⁻¹(1).
std::vector<NodeSet> valid_S_sets(const DecoratedDiagram& d, const Decoration012& f0, int k);
bool is_valid_S(const DecoratedDiagram& d, const Decoration012& f0, NodeSet s);

/// Closed-form decoration for a valid S; throws InvalidS otherwise.
Decoration012 decoration_from_S(const DecoratedDiagram& d, const Decoration012& f0, NodeSet s);

/// Some connected component is entirely crossed.
bool is_degenerate(const DecoratedDiagram& d, const Decoration012& f0);
bool is_degenerate(const DecoratedDiagram& d);

/// Nodes generating G(f): those with f(v) != 1.
NodeSet stabilizer_generators(const Decoration012& f);

/// Order of G(f) via the family orders of its induced subdiagram.
BigInt stabilizer_order(const DecoratedDiagram& d, const Decoration012& f);

}  // namespace wythoff
