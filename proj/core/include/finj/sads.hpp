#ifndef FINJ_SADS_HPP
#define FINJ_SADS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finj/candidates.hpp"
#include "finj/linear_order.hpp"
#include "finj/trace.hpp"

namespace finj {

/// Linear-order diagonalizer. Builds a set U and the order L in which a
/// smaller element sits below a larger one exactly when it was in U at
/// the larger one's arrival; U's final members form the ascending part.
///
/// Requirements per candidate e: R(2e) wants a Z_e element inside U,
/// R(2e+1) wants one outside. At stage s (element s arriving):
///   1. order: u <L s iff u in U, for all u < s;
///   2. every requirement is evaluated directly against the current U
///      over decided points a < s, and the stage is noted for those
///      currently satisfied;
///   3. the least unsatisfied R(i) claims the least decision-maker u
///      with i <= u <= s (strictly less under the strict_lt option)
///      whose side disagrees with the requirement (inside for odd i,
///      outside for even i) and which is beyond the requirement's last
///      satisfaction stage; the claim flips [u, s] to the wanted side
///      and converts (u, s] to followers of u. One claim per stage.
///
/// The last-satisfaction threshold is the finite remnant of the paper's
/// per-decision-maker truth approximation: a requirement that was ever
/// satisfied at stage t stops disturbing decision-makers <= t, so its
/// claims migrate upward and every element's membership settles once the
/// candidate approximations do. Without it two requirements over one
/// candidate flip a common interval forever.
struct SadsOptions {
  bool strict_lt = false;  // claim threshold i < u instead of i <= u
};

struct SadsRun {
  Vertex horizon = 0;
  std::vector<bits::Word> final_u;
  LinearOrderPrefix order;
  Delta2Approx u_history;      // membership flips of U per element
  std::vector<Vertex> follows; // final follower map (self = decision-maker)
  struct Claim {
    Stage stage;
    std::uint32_t requirement;
    Vertex decision_maker;
  };
  std::vector<Claim> claims;
  struct Satisfaction {
    std::uint32_t requirement = 0;
    bool satisfied = false;
    Vertex witness = 0;
  };
  std::vector<Satisfaction> satisfaction;  // final, indexed by requirement
  PriorityTrace trace;
};

SadsRun run_sads(const CandidateFamily& z, Vertex horizon, SadsOptions opts = {});

struct SadsReport {
  bool order_transitive = false;      // exhaustive triple scan, word-level
  bool flips_bounded = false;         // per-element flips <= claims touching it
  bool followers_monotone = false;    // pointers only move to smaller indices
  std::uint32_t omega_part_bound = 0; // max elements not above a final-U member
  bool replay_consistent = false;
  struct CandidateVerdict {
    std::uint32_t e = 0;
    Stage quiescence = 0;     // last claim stage of requirements j < 2e
    std::uint32_t tail = 0;   // final Z_e elements past quiescence
    bool hits_inside = false;
    bool hits_outside = false;
    bool ok = false;          // tail < threshold or both sides hit
  };
  std::vector<CandidateVerdict> candidates;
  std::uint32_t tail_threshold = 16;
  bool all_ok() const;
};

/// Replays the trace (claims and flips) against an independent
/// re-derivation, proves the order transitive by an exhaustive scan,
/// bounds flips by claims, and checks the two-sided intersection property
/// for every candidate with enough elements past higher-priority
/// quiescence.
SadsReport verify_sads(const SadsRun& run, const CandidateFamily& z,
                       SadsOptions opts = {});

}  // namespace finj

#endif
