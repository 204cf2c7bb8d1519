#ifndef FINJ_EM_CONDITION_HPP
#define FINJ_EM_CONDITION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finj/combinatorics.hpp"
#include "finj/tournament.hpp"

namespace finj {

/// Condition of the multi-tournament extension calculus: an offset per
/// registered tournament, a finite transitive core, and a reservoir above
/// the core. For tournament nu, only the core above offset(nu) counts,
/// every reservoir point extends it transitively, and the reservoir sits
/// inside one minimal interval of it.
struct EMCondition {
  std::vector<Vertex> sigma;  // one offset per registered tournament
  VertexList core;            // F, ascending
  VertexList reservoir;       // X, ascending, elementwise above F

  std::string summary() const;
};

struct ConditionViolation {
  std::size_t tournament = 0;  // nu
  std::string what;
};

/// Behavior vector of the reservoir against a single pivot: bit nu set
/// iff the pivot beats the element in tournament nu. Lexicographic order
/// reads bit 0 first.
using BehaviorVector = std::uint32_t;

bool behavior_lex_less(BehaviorVector a, BehaviorVector b, std::size_t width);

namespace detail {

template <TournamentLike T>
VertexList core_above(const EMCondition& c, std::size_t nu) {
  VertexList out;
  for (Vertex v : c.core)
    if (v > c.sigma[nu]) out.push_back(v);
  return out;
}

}  // namespace detail

/// Checks the full invariant; returns the first violation found, if any.
template <TournamentLike T>
std::optional<ConditionViolation> check_condition(const EMCondition& c,
                                                  const std::vector<T>& ts) {
  if (c.sigma.size() > ts.size())
    return ConditionViolation{0, "more offsets than tournaments"};
  for (std::size_t i = 1; i < c.core.size(); ++i)
    if (c.core[i - 1] >= c.core[i])
      return ConditionViolation{0, "core not ascending"};
  for (std::size_t i = 1; i < c.reservoir.size(); ++i)
    if (c.reservoir[i - 1] >= c.reservoir[i])
      return ConditionViolation{0, "reservoir not ascending"};
  if (!c.core.empty() && !c.reservoir.empty() && c.core.back() >= c.reservoir.front())
    return ConditionViolation{0, "reservoir not above core"};

  for (std::size_t nu = 0; nu < c.sigma.size(); ++nu) {
    const T& t = ts[nu];
    VertexList f = detail::core_above<T>(c, nu);
    // transitive chain of the visible core
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        for (std::size_t k = j + 1; k < f.size(); ++k) {
          Vertex u = f[i], v = f[j], w = f[k];
          bool uv = t.beats(u, v), vw = t.beats(v, w), wu = t.beats(w, u);
          if ((uv && vw && wu) || (!uv && !vw && !wu))
            return ConditionViolation{nu, "core 3-cycle at " + std::to_string(u) + "," +
                                              std::to_string(v) + "," + std::to_string(w)};
        }
    if (f.empty()) continue;
    // chain order: count wins within f
    VertexList chain = f;
    std::sort(chain.begin(), chain.end(), [&](Vertex a, Vertex b) {
      std::uint32_t wa = 0, wb = 0;
      for (Vertex x : f) {
        if (x != a && t.beats(a, x)) ++wa;
        if (x != b && t.beats(b, x)) ++wb;
      }
      return wa > wb;
    });
    // each reservoir point's beaters within the chain must be a prefix of
    // it (single-point transitive extension), and the prefix length must
    // be shared (one minimal interval)
    std::optional<std::size_t> slot;
    for (Vertex x : c.reservoir) {
      std::size_t j = 0;
      while (j < chain.size() && t.beats(chain[j], x)) ++j;
      for (std::size_t k = j; k < chain.size(); ++k)
        if (t.beats(chain[k], x))
          return ConditionViolation{
              nu, "reservoir point " + std::to_string(x) + " breaks transitivity with core"};
      if (!slot) slot = j;
      else if (*slot != j)
        return ConditionViolation{
            nu, "reservoir spans several minimal intervals (point " + std::to_string(x) + ")"};
    }
  }
  return std::nullopt;
}

/// The dichotomy of a valid condition: every visible core element either
/// beats the whole reservoir or is beaten by it, per tournament. A false
/// return on a checked condition indicates an implementation bug.
template <TournamentLike T>
bool verify_beats(const EMCondition& c, const std::vector<T>& ts) {
  for (std::size_t nu = 0; nu < c.sigma.size(); ++nu) {
    const T& t = ts[nu];
    for (Vertex x : detail::core_above<T>(c, nu)) {
      bool all_beat = true, all_beaten = true;
      for (Vertex y : c.reservoir) {
        if (t.beats(x, y)) all_beaten = false;
        else all_beat = false;
      }
      if (!all_beat && !all_beaten) return false;
    }
  }
  return true;
}

/// Registers the next tournament: the offset is the reservoir minimum, so
/// the visible core starts empty for it. Throws on an empty reservoir.
template <TournamentLike T>
EMCondition register_tournament(const EMCondition& c, const std::vector<T>& ts) {
  if (c.reservoir.empty())
    throw std::invalid_argument("register_tournament: empty reservoir");
  if (c.sigma.size() >= ts.size())
    throw std::invalid_argument("register_tournament: no unregistered tournament left");
  EMCondition d = c;
  d.sigma.push_back(c.reservoir.front());
  return d;
}

struct ExtensionOutcome {
  EMCondition condition;
  BehaviorVector chosen = 0;
  std::uint32_t class_size = 0;
};

/// Moves the reservoir minimum into the core and keeps the largest
/// behavior class (lexicographically least vector on ties) as the new
/// reservoir. Throws reservoir exhaustion when every class is smaller
/// than min_keep.
template <TournamentLike T>
ExtensionOutcome one_point_extend(const EMCondition& c, const std::vector<T>& ts,
                                  std::uint32_t min_keep = 1) {
  if (c.reservoir.size() < 2)
    throw std::invalid_argument("one_point_extend: reservoir too small");
  Vertex x = c.reservoir.front();
  const std::size_t k = c.sigma.size();
  std::vector<VertexList> classes(std::size_t{1} << k);
  for (std::size_t i = 1; i < c.reservoir.size(); ++i) {
    Vertex s = c.reservoir[i];
    BehaviorVector rho = 0;
    for (std::size_t nu = 0; nu < k; ++nu)
      if (ts[nu].beats(x, s)) rho |= BehaviorVector{1} << nu;
    classes[rho].push_back(s);
  }
  std::size_t best = 0;
  for (std::size_t rho = 1; rho < classes.size(); ++rho)
    if (classes[rho].size() > classes[best].size() ||
        (classes[rho].size() == classes[best].size() &&
         behavior_lex_less(static_cast<BehaviorVector>(rho),
                           static_cast<BehaviorVector>(best), k)))
      best = rho;
  if (classes[best].size() < min_keep)
    throw std::runtime_error("one_point_extend: reservoir exhausted (largest class " +
                             std::to_string(classes[best].size()) + ")");
  ExtensionOutcome out;
  out.condition.sigma = c.sigma;
  out.condition.core = c.core;
  out.condition.core.push_back(x);
  out.condition.reservoir = std::move(classes[best]);
  out.chosen = static_cast<BehaviorVector>(best);
  out.class_size = static_cast<std::uint32_t>(out.condition.reservoir.size());
  return out;
}

struct BlockPartition {
  std::vector<VertexList> block_classes;  // block split by behavior vs the reservoir
  VertexList reservoir;                   // Y: winning preimage class
  std::vector<BehaviorVector> key;        // behavior of Y against each block element
};

/// Partitions a finite block E of the reservoir by the behavior each
/// later reservoir element shows against all of E, keeps the largest
/// preimage class as the new reservoir Y, and splits E so that class rho
/// is uniform against Y: rho(nu) = 0 classes beat Y in tournament nu,
/// rho(nu) = 1 classes are beaten by it. Extensions then add any
/// simultaneously transitive subset of one class to the core.
template <TournamentLike T>
BlockPartition block_partition(const EMCondition& c, const std::vector<T>& ts,
                               const VertexList& block) {
  const std::size_t k = c.sigma.size();
  if (block.empty()) throw std::invalid_argument("block_partition: empty block");
  for (Vertex v : block) {
    bool in_reservoir = std::binary_search(c.reservoir.begin(), c.reservoir.end(), v);
    if (!in_reservoir)
      throw std::invalid_argument("block_partition: block element " + std::to_string(v) +
                                  " not in reservoir");
  }
  const Vertex block_max = *std::max_element(block.begin(), block.end());
  // key of a reservoir point: behavior vector against each block element
  std::vector<std::pair<std::vector<BehaviorVector>, VertexList>> groups;
  for (Vertex x : c.reservoir) {
    if (x <= block_max) continue;  // keep the new reservoir above the block
    std::vector<BehaviorVector> key(block.size(), 0);
    for (std::size_t bi = 0; bi < block.size(); ++bi)
      for (std::size_t nu = 0; nu < k; ++nu)
        if (ts[nu].beats(x, block[bi])) key[bi] |= BehaviorVector{1} << nu;
    bool placed = false;
    for (auto& [gk, members] : groups)
      if (gk == key) {
        members.push_back(x);
        placed = true;
        break;
      }
    if (!placed) groups.emplace_back(std::move(key), VertexList{x});
  }
  if (groups.empty()) throw std::runtime_error("block_partition: empty class (Y)");

  auto key_less = [&](const std::vector<BehaviorVector>& a,
                      const std::vector<BehaviorVector>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return behavior_lex_less(a[i], b[i], k);
    return false;
  };
  std::size_t best = 0;
  for (std::size_t g = 1; g < groups.size(); ++g)
    if (groups[g].second.size() > groups[best].second.size() ||
        (groups[g].second.size() == groups[best].second.size() &&
         key_less(groups[g].first, groups[best].first)))
      best = g;

  BlockPartition out;
  out.reservoir = groups[best].second;
  out.key = groups[best].first;
  // block element bi belongs to class rho = key[bi]: bit nu records that
  // Y's members beat it, matching the uniformity read above
  out.block_classes.assign(std::size_t{1} << k, {});
  const BehaviorVector mask = k ? static_cast<BehaviorVector>((1u << k) - 1) : 0;
  for (std::size_t bi = 0; bi < block.size(); ++bi) {
    BehaviorVector rho = static_cast<BehaviorVector>(out.key[bi] & mask);
    out.block_classes[rho].push_back(block[bi]);
  }
  return out;
}

/// Simultaneously transitive subset of a class by the documented
/// ascending greedy: admit a point when it closes no 3-cycle with the
/// kept ones in any registered tournament.
template <TournamentLike T>
VertexList greedy_simultaneous_transitive(const std::vector<T>& ts, std::size_t k,
                                          const VertexList& pool) {
  VertexList kept;
  for (Vertex v : pool) {
    bool ok = true;
    for (std::size_t i = 0; i < kept.size() && ok; ++i)
      for (std::size_t j = i + 1; j < kept.size() && ok; ++j)
        for (std::size_t nu = 0; nu < k && ok; ++nu) {
          const T& t = ts[nu];
          Vertex a = kept[i], b = kept[j];
          bool ab = t.beats(a, b), bv = t.beats(b, v), va = t.beats(v, a);
          if ((ab && bv && va) || (!ab && !bv && !va)) ok = false;
        }
    if (ok) kept.push_back(v);
  }
  return kept;
}

/// Extension through a block partition: core grows by a transitive subset
/// of one class, reservoir becomes Y.
template <TournamentLike T>
EMCondition block_extend_with(const EMCondition& c, const BlockPartition& part,
                              const VertexList& f1) {
  EMCondition d;
  d.sigma = c.sigma;
  d.core = c.core;
  d.core.insert(d.core.end(), f1.begin(), f1.end());
  std::sort(d.core.begin(), d.core.end());
  d.reservoir = part.reservoir;
  return d;
}

/// Fresh condition: empty offsets and core, full reservoir [0, n).
EMCondition fresh_condition(Vertex n);

/// Set-encoding tournament: for a < b the edge runs upward exactly when a
/// and b are on the same side of the set.
Tournament encode_set_tournament(const VertexList& x, Vertex n);

}  // namespace finj

#endif
