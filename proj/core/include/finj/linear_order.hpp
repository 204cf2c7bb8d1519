#ifndef FINJ_LINEAR_ORDER_HPP
#define FINJ_LINEAR_ORDER_HPP

#include "finj/tournament.hpp"

namespace finj {

/// Linear order on [0, N): a tournament whose relation is transitive.
/// The checked constructor rejects 3-cycles; engines that prove
/// transitivity elsewhere can adopt a relation unchecked.
class LinearOrderPrefix {
 public:
  LinearOrderPrefix() = default;

  /// Validates transitivity; throws std::invalid_argument on a 3-cycle.
  static LinearOrderPrefix checked(Tournament rel);

  /// Adopts the relation as-is. The caller owns the transitivity proof
  /// (the verifiers re-scan regardless).
  static LinearOrderPrefix unchecked(Tournament rel);

  Vertex size() const { return rel_.size(); }
  bool less(Vertex x, Vertex y) const { return rel_.beats(x, y); }
  const Tournament& relation() const { return rel_; }

 private:
  explicit LinearOrderPrefix(Tournament rel) : rel_(std::move(rel)) {}
  Tournament rel_;
};

/// Order of type "ascending block then descending block": members of
/// ascending_part come below everything else and increase left to right;
/// non-members decrease. Used by generators and the order diagnostics.
LinearOrderPrefix split_order(Vertex n, const std::vector<bits::Word>& ascending_part);

}  // namespace finj

#endif
