#ifndef FINJ_EM_WALK_HPP
#define FINJ_EM_WALK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finj/em_condition.hpp"

namespace finj {

struct WalkStep {
  std::uint32_t step = 0;
  std::string op;  // "register" | "block" | "point"
  std::vector<Vertex> sigma;
  std::uint32_t core_size = 0;
  std::uint32_t reservoir_size = 0;
  BehaviorVector chosen = 0;

  std::string line() const;  // "step | op | sigma | |F| | |X| | rho"
};

struct WalkResult {
  EMCondition final_condition;
  VertexList g;  // the final core
  std::vector<WalkStep> steps;
  bool target_reached = false;
  bool transitivity_checked = false;  // per-tournament recheck of g passed
  std::string diagnostic;
};

struct WalkParams {
  std::uint32_t target = 8;
  std::uint32_t chunk = 64;
  std::vector<std::uint32_t> arrivals;  // step at which tournament nu registers
};

/// Alternates registrations (at their arrival steps) with extensions until
/// the reservoir is exhausted or the core reaches the target. Block steps
/// use an adaptive chunk small enough that the behavior-key space cannot
/// shred the reservoir, and a block outcome is taken only when it leaves
/// at least the one-point pigeonhole floor (|X|-1) / 2^k; otherwise the
/// walk falls back to a one-point step, so the log-base-2^k reservoir
/// guarantee survives every step.
template <TournamentLike T>
WalkResult em_walk(const std::vector<T>& ts, Vertex horizon, WalkParams params);

// explicit instantiations live in em_walk.cpp
extern template WalkResult em_walk<Tournament>(const std::vector<Tournament>&, Vertex,
                                               WalkParams);
extern template WalkResult em_walk<SeededTournament>(const std::vector<SeededTournament>&,
                                                     Vertex, WalkParams);

}  // namespace finj

#endif
