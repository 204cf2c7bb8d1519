#ifndef FINJ_SDNR_HPP
#define FINJ_SDNR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finj/limit_approx.hpp"
#include "finj/trace.hpp"

namespace finj {

/// Oracle-prefix bit string.
struct OraclePrefix {
  std::uint32_t length = 0;
  std::vector<bits::Word> data;

  static OraclePrefix from_string(const std::string& bits01);
  std::string to_string() const;
  bool bit(std::uint32_t i) const { return bits::test(data, i); }
  // prefix relation (this extends or equals other when other is shorter)
  bool comparable(const OraclePrefix& o) const;
  bool operator==(const OraclePrefix&) const = default;
};

/// Lookup-table model of an oracle functional: per input, a list of
/// (oracle prefix, output). The declared use on an input is the length of
/// the matching prefix. Validation requires matching entries of one input
/// to be incomparable or equal-valued, and every use at least the input.
class FunctionalTable {
 public:
  struct Entry {
    OraclePrefix prefix;
    std::uint32_t value = 0;
  };

  void add(Vertex input, OraclePrefix prefix, std::uint32_t value);

  /// Applies the table to an oracle bit string: shortest prefix matching
  /// the oracle with length <= max_use wins. Consistency makes all
  /// matches agree on the value anyway.
  struct Application {
    std::uint32_t value = 0;
    std::uint32_t use = 0;        // matched prefix length
    OraclePrefix matched;
  };
  std::optional<Application> apply(Vertex input, const std::vector<bits::Word>& oracle,
                                   std::uint32_t max_use) const;

  const std::vector<Vertex>& inputs() const { return inputs_; }

  /// Throws on inconsistent entries or a use below the input.
  void validate() const;

 private:
  std::vector<Vertex> inputs_;  // sorted, unique
  std::vector<std::vector<Entry>> entries_;  // parallel to inputs_
};

/// Anti-diagonalizer run: builds f on [0, H) so that no registered
/// functional applied to the oracle approximation diagonalizes against f.
///
/// Strategy e, in priority order, wants f to agree with functional e
/// somewhere. At each stage it seeks the least a >= e not restrained by
/// higher-priority strategies with the functional converging on the
/// current oracle (use at most the stage) and use below the settling time
/// of a in the enumeration; it then restrains a and commits f(a) to the
/// computed value. The strategy resets, releasing the restraint, when a
/// higher-priority strategy restrains the same point or the matched
/// prefix or settling time changes. Uncommitted points carry 0.
struct SdnrRun {
  Vertex horizon = 0;
  std::vector<std::uint32_t> final_f;
  Delta2Approx f_history;  // value flips of f per point
  struct RestraintSpan {
    std::uint32_t e = 0;
    Vertex a = 0;
    Stage from = 0;
    Stage to = 0;  // exclusive; horizon when still active at the end
    std::uint32_t value = 0;
  };
  std::vector<RestraintSpan> restraints;
  std::uint32_t injuries = 0;
  PriorityTrace trace;
};

SdnrRun run_sdnr(const std::vector<FunctionalTable>& functionals, const Delta2Approx& d,
                 const EnumeratedSet& e, Vertex horizon);

struct SdnrReport {
  struct StrategyVerdict {
    std::uint32_t e = 0;
    bool has_witness = false;   // some a in E with settling past the use
    bool agrees = false;        // final f(a) equals the functional's value there
    Vertex agree_at = 0;
    bool ok = false;            // no witness, or agreement found
  };
  std::vector<StrategyVerdict> strategies;
  struct RestraintClass {
    std::uint32_t e = 0;
    Vertex a = 0;
    bool cofinite_within_horizon = false;  // active through the last stage
    std::uint32_t stages = 0;
  };
  std::vector<RestraintClass> restraint_classes;
  bool divergent_released = false;  // non-converging functionals hold nothing at the end
  bool flips_bounded = false;       // per-point f flips <= 1 + injuries touching it
  bool commits_realized = false;    // committed values appear in f during the span
  bool all_ok() const;
};

SdnrReport verify_sdnr(const SdnrRun& run, const std::vector<FunctionalTable>& functionals,
                       const Delta2Approx& d, const EnumeratedSet& e);

}  // namespace finj

#endif
