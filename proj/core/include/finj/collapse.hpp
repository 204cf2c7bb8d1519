#ifndef FINJ_COLLAPSE_HPP
#define FINJ_COLLAPSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "finj/rainbow.hpp"

namespace finj {

/// Unordered pair below the horizon, the collapsed coloring's argument.
struct PairKey {
  Vertex a = 0, b = 0;  // a < b
  auto operator<=>(const PairKey&) const = default;  // lex: first then second
};

struct CollapseResult {
  /// Collapsed coloring: each pair maps to the lex-least pair it
  /// eventually collides with (itself when none). 2-bounded whenever the
  /// input is.
  std::map<PairKey, PairKey> collapsed;
  /// Witness map: minimizing pair per argument (same as the value here;
  /// kept under its own name for report plumbing).
  std::map<PairKey, PairKey> witness;
  /// The settled tail of the scan set: the collapsed values are the
  /// constant value of the minimizer over these points.
  VertexList tail;
};

struct CollapseError {
  PairKey sigma, tau;  // offending unsettled pair of pairs
};

/// Collapses a 3-ary 2-bounded normal coloring to a pair coloring along a
/// scan set z: for pairs sigma, tau the collision set {s in z : f(sigma,s)
/// = f(tau,s)} must be settled (all-in or all-out) on the tail quarter of
/// z; the collapsed value of sigma is then the constant value over the
/// tail of the least tau (lexicographically, first coordinate then
/// second) colliding with sigma at that point. Returns the offending pair
/// on a non-settled instance.
std::variant<CollapseResult, CollapseError> collapse_triples(const KBoundedColoring& f,
                                                             const VertexList& z);

/// A set is a rainbow for the collapsed coloring when all its pairs have
/// distinct collapsed values.
bool is_collapsed_rainbow(const CollapseResult& c, const VertexList& r);

}  // namespace finj

#endif
