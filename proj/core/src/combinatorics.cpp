#include "finj/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace finj {

bool is_transitive(const Tournament& t, const VertexList& s) {
  for (Vertex v : s) t.check_vertex(v, "is_transitive");
  if (s.size() <= 2) return true;
  auto in_s = bits::from_elements(s, t.size());
  // u -> v and v -> w with w in S force u -> w.
  for (Vertex u : s) {
    std::vector<bits::Word> succ_u(in_s.size());
    for (std::size_t i = 0; i < in_s.size(); ++i) succ_u[i] = t.row(u)[i] & in_s[i];
    for (Vertex v : s) {
      if (!bits::test(succ_u, v)) continue;
      for (std::size_t i = 0; i < in_s.size(); ++i)
        if ((t.row(v)[i] & in_s[i]) & ~succ_u[i]) return false;
    }
  }
  return true;
}

namespace {

// DFS in increasing vertex order; the first set of each cardinality found
// is the lexicographically least one, so only strict improvements replace
// the incumbent.
struct MaxTransSearch {
  const Tournament& t;
  VertexList current, best;

  bool extends_ok(Vertex v) const {
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Vertex a = current[i], b = current[j];
        // orient the pair, then check v closes no cycle
        if (t.beats(a, b)) {
          if (t.beats(b, v) && t.beats(v, a)) return false;
        } else {
          if (t.beats(a, v) && t.beats(v, b)) return false;
        }
      }
    return true;
  }

  void go(Vertex next) {
    if (current.size() > best.size()) best = current;
    for (Vertex v = next; v < t.size(); ++v) {
      if (current.size() + (t.size() - v) <= best.size()) return;
      if (!extends_ok(v)) continue;
      current.push_back(v);
      go(v + 1);
      current.pop_back();
    }
  }
};

}  // namespace

VertexList max_transitive_subtournament(const Tournament& t, Vertex cap) {
  if (t.size() > cap)
    throw std::invalid_argument("max_transitive_subtournament: size " +
                                std::to_string(t.size()) + " exceeds cap " +
                                std::to_string(cap));
  MaxTransSearch search{t, {}, {}};
  search.go(0);
  return search.best;
}

bool in_interval(const Tournament& t, const Interval& iv, Vertex x) {
  if (iv.lo != Interval::kBelowAll &&
      !t.beats(static_cast<Vertex>(iv.lo), x)) return false;
  if (iv.hi != Interval::kAboveAll &&
      !t.beats(x, static_cast<Vertex>(iv.hi))) return false;
  return true;
}

VertexList chain_order(const Tournament& t, VertexList f) {
  // In a transitive tournament, beat-count within F is a ranking.
  std::vector<std::pair<std::uint32_t, Vertex>> ranked;
  ranked.reserve(f.size());
  for (Vertex v : f) {
    std::uint32_t wins = 0;
    for (Vertex w : f)
      if (w != v && t.beats(v, w)) ++wins;
    ranked.emplace_back(wins, v);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  VertexList out;
  out.reserve(f.size());
  for (auto& [wins, v] : ranked) out.push_back(v);
  return out;
}

std::vector<Interval> minimal_intervals(const Tournament& t, const VertexList& f) {
  if (!is_transitive(t, f))
    throw std::invalid_argument("minimal_intervals: F is not transitive");
  VertexList chain = chain_order(t, f);
  std::vector<Interval> out;
  std::int64_t prev = Interval::kBelowAll;
  for (Vertex v : chain) {
    out.push_back({prev, static_cast<std::int64_t>(v)});
    prev = static_cast<std::int64_t>(v);
  }
  out.push_back({prev, Interval::kAboveAll});
  return out;
}

bool beats(const Tournament& t, const VertexList& e, const VertexList& f) {
  for (Vertex v : e) t.check_vertex(v, "beats");
  for (Vertex v : f) t.check_vertex(v, "beats");
  auto targets = bits::from_elements(f, t.size());
  for (Vertex x : e) {
    const auto& row = t.row(x);
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (targets[i] & ~row[i]) return false;
  }
  return true;
}

namespace {

// dp over positions; cmp(x, y) true when y may follow x
template <class Cmp>
std::pair<std::uint32_t, VertexList> longest_chain(Vertex n, Cmp cmp) {
  std::vector<std::uint32_t> len(n, 1);
  std::vector<std::int64_t> prev(n, -1);
  std::uint32_t best = n ? 1 : 0;
  std::int64_t best_at = n ? 0 : -1;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j)
      if (cmp(j, i) && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = j;
      }
    if (len[i] > best) {
      best = len[i];
      best_at = i;
    }
  }
  VertexList witness;
  for (std::int64_t at = best_at; at >= 0; at = prev[at])
    witness.push_back(static_cast<Vertex>(at));
  std::reverse(witness.begin(), witness.end());
  return {best, witness};
}

}  // namespace

MonotoneReport longest_monotone(const LinearOrderPrefix& l) {
  MonotoneReport r;
  auto [alen, awit] = longest_chain(l.size(), [&](Vertex a, Vertex b) { return l.less(a, b); });
  auto [dlen, dwit] = longest_chain(l.size(), [&](Vertex a, Vertex b) { return l.less(b, a); });
  r.ascending_length = alen;
  r.ascending_witness = std::move(awit);
  r.descending_length = dlen;
  r.descending_witness = std::move(dwit);
  return r;
}

std::optional<Color> is_thin(const FiniteColoring2& f, const VertexList& a) {
  std::vector<bool> seen(f.palette(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      seen[f.color(a[i], a[j])] = true;
  for (Color c = 0; c < f.palette(); ++c)
    if (!seen[c]) return c;
  return std::nullopt;
}

HomogeneityReport is_homogeneous(const FiniteColoring2& f, const VertexList& a) {
  if (a.size() <= 1) return {true, std::nullopt};
  Color c = f.color(a[0], a[1]);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (f.color(a[i], a[j]) != c) return {false, std::nullopt};
  return {true, c};
}

std::vector<CohesiveVerdict> cohesive_report(const VertexList& c, const SetFamily& family) {
  std::vector<CohesiveVerdict> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto r = family.member_bits(i);
    std::uint32_t inside = 0;
    for (Vertex x : c)
      if (x < family.universe() && bits::test(r, x)) ++inside;
    std::uint32_t miss_inside = static_cast<std::uint32_t>(c.size()) - inside;  // |C \ R|
    std::uint32_t miss_outside = inside;                                        // |C ∩ R|
    if (miss_inside <= miss_outside)
      out.push_back({CohesiveSide::kInside, miss_inside});
    else
      out.push_back({CohesiveSide::kOutside, miss_outside});
  }
  return out;
}

}  // namespace finj
