#ifndef FINJ_TOURNAMENT_HPP
#define FINJ_TOURNAMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "finj/bits.hpp"

namespace finj {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

/// Complete irreflexive antisymmetric relation on [0, N), stored as one
/// word-packed row per vertex: bit y of row x is 1 iff x beats y.
/// Rows make beat-set intersections O(N/64), which is what the condition
/// calculus and the subtournament searches are bound by.
class Tournament {
 public:
  Tournament() = default;

  /// All edges point downward (y beats x for x < y) until oriented.
  explicit Tournament(Vertex n);

  Vertex size() const { return n_; }

  /// True iff x beats y. Requires x != y, both < size().
  bool beats(Vertex x, Vertex y) const {
    return bits::test(rows_[x], y);
  }

  /// Orients the pair so that x beats y.
  void set_edge(Vertex x, Vertex y);

  const std::vector<bits::Word>& row(Vertex x) const { return rows_[x]; }

  /// Exhaustive pair scan of the totality/antisymmetry invariant.
  bool well_formed() const;

  void check_vertex(Vertex x, const char* who) const;

  /// Canonical text form: "tournament <N>" then one hex line per row,
  /// most significant nibble first, bit y of row x set iff x beats y.
  std::string serialize() const;
  static Tournament deserialize(std::istream& in);

  bool operator==(const Tournament& o) const = default;

 private:
  Vertex n_ = 0;
  std::vector<std::vector<bits::Word>> rows_;
};

/// Random tournament, every pair oriented by a fair coin.
Tournament random_tournament(Vertex n, Rng& rng);

/// Ascending transitive tournament: x beats y iff x < y.
Tournament ascending_tournament(Vertex n);

/// Tournament whose edges are computed on demand from a seed. Used where
/// the dense representation would not fit (reservoir-scale walks).
class SeededTournament {
 public:
  SeededTournament(Vertex n, std::uint64_t seed) : n_(n), seed_(seed) {}

  Vertex size() const { return n_; }

  bool beats(Vertex x, Vertex y) const {
    Vertex a = x < y ? x : y, b = x < y ? y : x;
    bool low_beats_high = Rng::mix(seed_, a, b) & 1u;
    return (x < y) == low_beats_high;
  }

 private:
  Vertex n_;
  std::uint64_t seed_;
};

template <class T>
concept TournamentLike = requires(const T& t, Vertex x, Vertex y) {
  { t.size() } -> std::convertible_to<Vertex>;
  { t.beats(x, y) } -> std::convertible_to<bool>;
};

}  // namespace finj

#endif
