#ifndef FINJ_COMBINATORICS_HPP
#define FINJ_COMBINATORICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "finj/coloring.hpp"
#include "finj/linear_order.hpp"
#include "finj/set_family.hpp"
#include "finj/tournament.hpp"

namespace finj {

/// True iff no triple of S forms a 3-cycle. Word-level scan: for every
/// u in S and every v beaten by u within S, the S-successors of v must be
/// S-successors of u.
bool is_transitive(const Tournament& t, const VertexList& s);

/// Maximum-cardinality transitive subset, lexicographically least vertex
/// list among the maxima. Exponential DFS with a reach bound; refuses
/// instances above `cap` (default 20).
VertexList max_transitive_subtournament(const Tournament& t, Vertex cap = 20);

/// Interval endpoints live in F extended by two sentinel pseudo-vertices
/// below and above everything.
struct Interval {
  static constexpr std::int64_t kBelowAll = -1;
  static constexpr std::int64_t kAboveAll = INT64_MAX;
  std::int64_t lo = kBelowAll;
  std::int64_t hi = kAboveAll;
  bool operator==(const Interval&) const = default;
};

/// Membership of x in the open interval: beaten by lo (when real) and
/// beating hi (when real).
bool in_interval(const Tournament& t, const Interval& iv, Vertex x);

/// All minimal intervals of a transitive F, in chain order. F empty gives
/// the single unconstrained interval. Throws if F is not transitive.
std::vector<Interval> minimal_intervals(const Tournament& t, const VertexList& f);

/// Sorts a transitive set into its beat order (first element beats all).
VertexList chain_order(const Tournament& t, VertexList f);

/// Every element of e beats every element of f (vacuously true when
/// either side is empty).
bool beats(const Tournament& t, const VertexList& e, const VertexList& f);

struct MonotoneReport {
  std::uint32_t ascending_length = 0;
  std::uint32_t descending_length = 0;
  VertexList ascending_witness;   // positions, increasing, order-increasing
  VertexList descending_witness;  // positions, increasing, order-decreasing
};

/// Longest subsequences increasing in position and monotone in the order,
/// by the quadratic DP; witness ties broken toward the earliest positions.
MonotoneReport longest_monotone(const LinearOrderPrefix& l);

/// Least color of the palette missing from f([A]^2), if any.
std::optional<Color> is_thin(const FiniteColoring2& f, const VertexList& a);

struct HomogeneityReport {
  bool homogeneous = false;
  std::optional<Color> color;  // set when |A| >= 2 and homogeneous
};

/// Sets with at most one element are homogeneous by convention with no
/// color determined yet.
HomogeneityReport is_homogeneous(const FiniteColoring2& f, const VertexList& a);

enum class CohesiveSide : std::uint8_t { kInside, kOutside };

struct CohesiveVerdict {
  CohesiveSide side = CohesiveSide::kInside;
  std::uint32_t exceptions = 0;
};

/// Per family member, the side (member or complement) minimizing the
/// number of C-elements falling outside it; ties go to "inside".
std::vector<CohesiveVerdict> cohesive_report(const VertexList& c, const SetFamily& family);

}  // namespace finj

#endif
