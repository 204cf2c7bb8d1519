#ifndef FINJ_BRIDGES_HPP
#define FINJ_BRIDGES_HPP

#include <cstdint>
#include <vector>

#include "finj/combinatorics.hpp"
#include "finj/sdnr.hpp"
#include "finj/set_family.hpp"

namespace finj {

/// 2-coloring as a tournament: for x < y the edge runs upward exactly
/// when the pair has color 1. Throws unless the palette is exactly 2.
Tournament coloring_to_tournament(const FiniteColoring2& f);

/// Reads the tournament back into the coloring it encodes.
FiniteColoring2 tournament_to_coloring(const Tournament& t);

/// Family R_e = { s < horizon : table e, on input e, over the oracle
/// "enumerated by stage s", converges to 1 with use at most s }.
SetFamily canonical_cohesive_instance(const std::vector<FunctionalTable>& tables,
                                      const EnumeratedSet& e, Vertex horizon);

struct CohesiveSearchResult {
  VertexList set;
  std::vector<bool> signs;  // signs[i] true = complement side of member i
};

/// Largest intersection over all sign vectors (member or complement per
/// family entry), lexicographically least sign vector on ties. Refuses
/// families above 20 members.
CohesiveSearchResult find_cohesive(const SetFamily& family);

/// Pointwise escape: g(x) = f(x) + 1 disagrees with f everywhere.
std::vector<std::uint32_t> diagonal_escape(const std::vector<std::uint32_t>& f);

}  // namespace finj

#endif
