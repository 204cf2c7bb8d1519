#ifndef FINJ_LIMIT_APPROX_HPP
#define FINJ_LIMIT_APPROX_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "finj/coloring.hpp"

namespace finj {

using Stage = std::uint32_t;

/// Stage-indexed value function with finitely many changes per point.
/// Every point starts at 0; an event (x, s, v) makes the value v from
/// stage s on. Events must change the value, so the declared events are
/// exactly the discontinuities.
class Delta2Approx {
 public:
  struct Event {
    Vertex point;
    Stage stage;
    std::uint32_t value;
    bool operator==(const Event&) const = default;
  };

  Delta2Approx() = default;
  explicit Delta2Approx(Vertex horizon) : h_(horizon) {}

  Vertex horizon() const { return h_; }

  /// Stages must be strictly increasing per point and below the horizon;
  /// consecutive values per point must differ.
  void add_event(Vertex point, Stage stage, std::uint32_t value);

  /// Last event value at stage <= s, else 0. Throws if s >= horizon.
  std::uint32_t value_at(Vertex x, Stage s) const;

  /// (value after the last event, stage of that event); (0, 0) if none.
  std::pair<std::uint32_t, Stage> limit_report(Vertex x) const;

  std::uint32_t flip_count(Vertex x) const;
  std::uint32_t max_value() const;

  /// Events of a given stage in insertion order, for stage machines.
  std::vector<Event> events_at_stage(Stage s) const;
  const std::vector<Event>& events(Vertex x) const;

  /// Lines "point stage value" after an "approx <H> <count>" header.
  std::string serialize() const;
  static Delta2Approx deserialize(std::istream& in);

  bool operator==(const Delta2Approx&) const = default;

 private:
  Vertex h_ = 0;
  std::vector<std::vector<Event>> per_point_;
  static const std::vector<Event> kNoEvents;
};

/// h(x, s) = value of the approximation at point x, stage s, on pairs
/// x < s below the horizon. The palette is one past the largest value.
FiniteColoring2 to_stable_pairs(const Delta2Approx& c);

struct StabilityReport {
  /// Points whose column is not constant on [H - tail, H).
  VertexList unstable;
};

/// Reads an approximation back off a pair coloring: per point, the column
/// changes become events; a nonzero initial column value becomes a stage-0
/// event (the stage at which it really arose is not visible in the pairs).
/// Columns not constant on the tail window are reported unstable.
std::pair<Delta2Approx, StabilityReport> from_stable_pairs(const FiniteColoring2& h,
                                                           Stage tail);

/// Monotone enumeration of a set: (element, stage) pairs, each element
/// at most once, stages nondecreasing in list order.
class EnumeratedSet {
 public:
  EnumeratedSet() = default;

  void add(Vertex element, Stage stage);

  /// Least enumeration stage <= s of x, if any.
  std::optional<Stage> theta(Vertex x, Stage s) const;

  bool contains_by(Vertex x, Stage s) const { return theta(x, s).has_value(); }

  const std::vector<std::pair<Vertex, Stage>>& entries() const { return entries_; }

  /// Lines "element stage" after an "enumset <count>" header.
  std::string serialize() const;
  static EnumeratedSet deserialize(std::istream& in);

 private:
  std::vector<std::pair<Vertex, Stage>> entries_;  // list order = enumeration order
};

/// Double-limit value grid g(m, s, t) stored as one approximation layer
/// per outer index t. Kept for scenario authors who want the two-step
/// limit shape; the stage machines evaluate their requirements directly.
class DoubleLimitApprox {
 public:
  DoubleLimitApprox() = default;
  DoubleLimitApprox(Vertex horizon, Stage layers);

  Vertex horizon() const { return h_; }
  Stage layers() const { return static_cast<Stage>(layers_.size()); }

  Delta2Approx& layer(Stage t) { return layers_.at(t); }
  const Delta2Approx& layer(Stage t) const { return layers_.at(t); }

  std::uint32_t value_at(Vertex m, Stage s, Stage t) const {
    return layers_.at(t).value_at(m, s);
  }

  /// Inner limit per layer, then the value the layer limits settle to,
  /// with the first layer index from which they are constant.
  std::pair<std::uint32_t, Stage> outer_limit(Vertex m) const;

  /// Number of layers whose inner limit differs from the next layer's.
  std::uint32_t layer_changes(Vertex m) const;

 private:
  Vertex h_ = 0;
  std::vector<Delta2Approx> layers_;
};

}  // namespace finj

#endif
