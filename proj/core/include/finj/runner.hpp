#ifndef FINJ_RUNNER_HPP
#define FINJ_RUNNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finj/scenario.hpp"

namespace finj {

/// Verification surface of one run. The serialized form excludes wall
/// time, so regenerating a report from a persisted trace is byte-exact.
struct RunReport {
  std::string engine;
  std::string digest;
  struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  struct Verdict {
    std::string name;
    std::string status;  // SATISFIED / EXCUSED / FAILED / PAIRED / ...
    std::string detail;
    std::size_t trace_line = 0;  // 1-based into the trace event block; 0 = none
  };
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  double wall_ms = 0;  // console only, never serialized

  bool all_pass(bool strict = false) const;
  std::string serialize() const;
  static RunReport parse(const std::string& text);
  std::string human_table() const;
};

struct RunOutcome {
  RunReport report;
  std::string trace_text;  // full persisted trace file contents
};

/// Runs the scenario's engine, verifies, and builds the report and the
/// persisted trace (header with the embedded canonical scenario, then the
/// event block).
RunOutcome run_scenario(const Scenario& sc);

/// Re-derives the report from a persisted trace alone: regenerates the
/// deterministic inputs from the embedded scenario, re-runs the engine,
/// demands the regenerated event block equal the persisted one line for
/// line, and verifies as run_scenario does. Corrupt, truncated or
/// foreign-engine traces raise errors naming the spot.
RunReport replay_trace(const std::string& trace_text);

/// Extracts the embedded scenario from a trace.
Scenario scenario_of_trace(const std::string& trace_text);

}  // namespace finj

#endif
