#ifndef FINJ_CANDIDATES_HPP
#define FINJ_CANDIDATES_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "finj/limit_approx.hpp"

namespace finj {

/// Candidate set: either a static vertex list or a stage-dependent 0/1
/// membership approximation.
class Candidate {
 public:
  static Candidate fixed(VertexList elements, Vertex horizon);
  static Candidate approximated(Delta2Approx membership);

  bool member(Vertex a, Stage s) const;
  bool final_member(Vertex a, Stage last_stage) const { return member(a, last_stage); }
  bool is_static() const { return std::holds_alternative<StaticSet>(rep_); }

  /// Underlying approximation, or nullptr for a static set.
  const Delta2Approx* approx() const;

  Vertex horizon() const;

 private:
  struct StaticSet {
    Vertex horizon;
    std::vector<bits::Word> members;
  };
  std::variant<StaticSet, Delta2Approx> rep_;
};

/// Candidate sets Z_0..Z_{n-1}, indices dense.
using CandidateFamily = std::vector<Candidate>;

/// Cantor pairing; requirement priority is the pairing value.
inline std::uint64_t cantor_pair(std::uint64_t e, std::uint64_t i) {
  return (e + i) * (e + i + 1) / 2 + i;
}

}  // namespace finj

#endif
