#ifndef FINJ_STS_HPP
#define FINJ_STS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finj/candidates.hpp"
#include "finj/trace.hpp"

namespace finj {

/// Stable thin-set diagonalizer. Builds a color sequence c on [0, H) so
/// that no candidate set with survivors past its activation tail avoids
/// any color.
///
/// Requirement R(e,i), one per candidate index e and color i, ordered by
/// the Cantor pairing <e,i>: "some a has a in Z_e and c(a) = i". At stage
/// s the least-priority unsatisfied requirement with <e,i> < s claims the
/// stage and c(s) = i; with no claimant c(s) = 0. Requirement truth is
/// evaluated directly against the c built so far, so satisfaction can be
/// lost when an approximated candidate drops a witness; the trace records
/// an INJURE then.
struct StsRun {
  Vertex horizon = 0;
  Color colors = 1;
  std::vector<Color> c;  // c[s] for s < horizon
  struct Satisfaction {
    std::uint32_t e = 0;
    Color i = 0;
    bool satisfied = false;
    Vertex witness = 0;  // valid when satisfied
  };
  std::vector<Satisfaction> satisfaction;  // final state, priority order
  PriorityTrace trace;
};

StsRun run_sts(const CandidateFamily& z, Color colors, Vertex horizon);

enum class StsVerdict : std::uint8_t { kSatisfied, kExcusedFinite, kFailed };

struct StsRequirementReport {
  std::uint32_t e = 0;
  Color i = 0;
  StsVerdict verdict = StsVerdict::kFailed;
  Vertex witness = 0;          // satisfied case
  Stage excuse_stage = 0;      // excused case: tail (excuse_stage, H) misses Z_e
  std::string detail;
  std::size_t trace_line = 0;  // 0-based index into the trace, or npos
};

struct StsReport {
  std::vector<StsRequirementReport> requirements;
  bool replay_consistent = false;   // trace matches an independent re-derivation
  bool thin_bridge_ok = false;      // sets thin for h are thin for c on the window
  Vertex thin_bridge_window = 0;
  bool all_ok() const;
};

/// Replays the trace against an independent evaluation of the activation
/// rule, reports per-requirement verdicts, and checks the stable-pairs
/// bridge on a small window: every color a 4-set avoids under
/// h = to_stable_pairs(c) is avoided by c on the set minus its maximum.
StsReport verify_sts(const StsRun& run, const CandidateFamily& z);

}  // namespace finj

#endif
