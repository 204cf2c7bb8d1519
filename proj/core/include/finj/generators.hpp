#ifndef FINJ_GENERATORS_HPP
#define FINJ_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "finj/candidates.hpp"
#include "finj/linear_order.hpp"
#include "finj/rainbow.hpp"
#include "finj/sdnr.hpp"
#include "finj/tournament.hpp"

namespace finj {

/// Deterministic input generators: one seed, one byte stream. Stable
/// generators record the plan they committed to so the verifiers can
/// check verdicts against ground truth.

/// Tournament in which every vertex eventually always beats or always
/// loses to later vertices; each settles by horizon/2.
struct StableTournamentPlan {
  std::vector<bool> side;        // true: x eventually beats later vertices
  std::vector<Vertex> settle;    // threshold per vertex
};
std::pair<Tournament, StableTournamentPlan> gen_stable_tournament(Vertex n, Rng& rng);

/// 0/1 membership approximation: up to max_flips alternations per point,
/// all at stages in [1, settle_bound).
Delta2Approx gen_membership(Vertex horizon, std::uint32_t max_flips, Stage settle_bound,
                            Rng& rng);

/// Candidate whose points start inside and all drain out at stages in
/// [horizon/4, settle_bound); its final tail is empty.
Delta2Approx gen_decaying_membership(Vertex horizon, Stage settle_bound, Rng& rng);

/// Static candidate meeting every window of the given length.
VertexList gen_window_hitting(Vertex horizon, Vertex window, Rng& rng);

/// 2-bounded coloring of pairs: colors paired up at random, none used
/// more than twice.
KBoundedColoring gen_2bounded_pairs(Vertex horizon, Rng& rng);

/// Rainbow-stable coloring with its ground-truth plan: points are matched
/// into partner pairs (or left lone); partners share fresh colors at
/// every stage past the threshold, lone points collide with nobody there.
struct RainbowStablePlan {
  std::vector<std::int64_t> partner;  // -1: lone
  Vertex threshold = 0;
};
std::pair<KBoundedColoring, RainbowStablePlan> gen_rainbow_stable(Vertex horizon, Rng& rng);

/// Settled 3-ary 2-bounded normal instance for the collapse: a partial
/// matching on pairs collides on the whole scan tail, everything else
/// stays injective; the plan records the matching.
struct SettledCollapsePlan {
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> twins;
};
std::pair<KBoundedColoring, SettledCollapsePlan> gen_settled_triples(Vertex horizon,
                                                                     Rng& rng);

/// Functional tables for the anti-diagonalizer: per input a in [e, cap),
/// an entry guessing a prefix of the oracle's current or final value with
/// use a..a+spread, so convergence and witnesses are plentiful.
std::vector<FunctionalTable> gen_functionals(std::size_t count, Vertex cap,
                                             std::uint32_t spread, const Delta2Approx& d,
                                             Vertex horizon, Rng& rng);

/// Enumeration of about half the points, each at a stage shortly after
/// its own value (settling time beats small uses).
EnumeratedSet gen_enumeration(Vertex horizon, std::uint32_t lag, Rng& rng);

/// Order of type "ascending block then descending": a random subset forms
/// the ascending part.
LinearOrderPrefix gen_split_order(Vertex n, Rng& rng);

}  // namespace finj

#endif
