#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "finj/bridges.hpp"
#include "finj/combinatorics.hpp"
#include "finj/generators.hpp"

using namespace finj;

namespace {

// ---- independent oracles ---------------------------------------------------

bool oracle_transitive(const Tournament& t, const VertexList& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < s.size(); ++k) {
        Vertex u = s[i], v = s[j], w = s[k];
        if (u == v || v == w || u == w) continue;
        if (t.beats(u, v) && t.beats(v, w) && t.beats(w, u)) return false;
      }
  return true;
}

// full mask enumeration; maximum size, lexicographically least list
VertexList oracle_max_transitive(const Tournament& t) {
  VertexList best;
  const Vertex n = t.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexList s;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u) s.push_back(v);
    if (!oracle_transitive(t, s)) continue;
    if (s.size() > best.size() || (s.size() == best.size() && s < best)) best = s;
  }
  return best;
}

bool oracle_beats(const Tournament& t, const VertexList& e, const VertexList& f) {
  for (Vertex x : e)
    for (Vertex y : f)
      if (!t.beats(x, y)) return false;
  return true;
}

std::vector<Interval> oracle_minimal_intervals(const Tournament& t, const VertexList& f) {
  std::vector<std::int64_t> ends = {Interval::kBelowAll, Interval::kAboveAll};
  for (Vertex v : f) ends.push_back(static_cast<std::int64_t>(v));
  auto edge = [&](std::int64_t a, std::int64_t b) {
    if (a == b) return false;
    if (a == Interval::kBelowAll) return b != Interval::kBelowAll;
    if (b == Interval::kAboveAll) return a != Interval::kAboveAll;
    if (a == Interval::kAboveAll || b == Interval::kBelowAll) return false;
    return t.beats(static_cast<Vertex>(a), static_cast<Vertex>(b));
  };
  std::vector<Interval> out;
  for (std::int64_t a : ends)
    for (std::int64_t b : ends) {
      if (!edge(a, b)) continue;
      bool minimal = true;
      for (Vertex c : f)
        if (edge(a, c) && edge(c, b)) minimal = false;
      if (minimal) out.push_back({a, b});
    }
  return out;
}

std::uint32_t oracle_longest_monotone(const LinearOrderPrefix& l, bool ascending) {
  const Vertex n = l.size();
  std::uint32_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexList s;
    for (Vertex v = 0; v < n; ++v)
      if ((mask >> v) & 1u) s.push_back(v);
    bool mono = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      mono = mono && (ascending ? l.less(s[i], s[i + 1]) : l.less(s[i + 1], s[i]));
    if (mono) best = std::max<std::uint32_t>(best, s.size());
  }
  return best;
}

}  // namespace

TEST_CASE("tournament stores exactly one direction per pair") {
  Rng rng(7);
  Tournament t = random_tournament(256, rng);
  CHECK(t.well_formed());
  for (Vertex x = 0; x < t.size(); ++x)
    for (Vertex y = 0; y < t.size(); ++y) {
      if (x == y) continue;
      CHECK(t.beats(x, y) != t.beats(y, x));
    }
}

TEST_CASE("tournament serialization round trip") {
  Rng rng(11);
  Tournament t = random_tournament(37, rng);
  std::istringstream in(t.serialize());
  Tournament back = Tournament::deserialize(in);
  CHECK(back == t);
}

TEST_CASE("is_transitive rejects the minimal violation") {
  Tournament t(3);
  t.set_edge(0, 1);
  t.set_edge(1, 2);
  t.set_edge(2, 0);
  CHECK_FALSE(is_transitive(t, {0, 1, 2}));
}

TEST_CASE("sets of size at most two are transitive") {
  Rng rng(3);
  Tournament t = random_tournament(10, rng);
  CHECK(is_transitive(t, {}));
  CHECK(is_transitive(t, {4}));
  CHECK(is_transitive(t, {2, 9}));
}

TEST_CASE("is_transitive agrees with the triple-loop oracle") {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    Tournament t = random_tournament(10, rng);
    VertexList s;
    for (Vertex v = 0; v < 10; ++v)
      if (rng.coin()) s.push_back(v);
    CHECK(is_transitive(t, s) == oracle_transitive(t, s));
  }
}

TEST_CASE("max transitive set of a 3-cycle is the lex-least pair") {
  Tournament t(3);
  t.set_edge(0, 1);
  t.set_edge(1, 2);
  t.set_edge(2, 0);
  CHECK(max_transitive_subtournament(t) == VertexList{0, 1});
}

TEST_CASE("a transitive tournament is its own maximum") {
  Tournament t = ascending_tournament(8);
  CHECK(max_transitive_subtournament(t).size() == 8);
}

TEST_CASE("max transitive matches exhaustive enumeration on 12 vertices") {
  Rng rng(17);
  for (int round = 0; round < 50; ++round) {
    Tournament t = random_tournament(12, rng);
    VertexList got = max_transitive_subtournament(t);
    VertexList want = oracle_max_transitive(t);
    CHECK(got == want);
    CHECK(is_transitive(t, got));
  }
}

TEST_CASE("max transitive refuses instances above the cap") {
  Rng rng(1);
  Tournament t = random_tournament(24, rng);
  CHECK_THROWS_AS(max_transitive_subtournament(t), std::invalid_argument);
}

TEST_CASE("minimal intervals of the empty core") {
  Rng rng(2);
  Tournament t = random_tournament(6, rng);
  auto ivs = minimal_intervals(t, {});
  REQUIRE(ivs.size() == 1);
  CHECK(ivs[0] == Interval{Interval::kBelowAll, Interval::kAboveAll});
}

TEST_CASE("minimal intervals of a two-element core") {
  Tournament t(4);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) t.set_edge(x, y);
  auto ivs = minimal_intervals(t, {1, 2});
  REQUIRE(ivs.size() == 3);
  CHECK(ivs[0] == Interval{Interval::kBelowAll, 1});
  CHECK(ivs[1] == Interval{1, 2});
  CHECK(ivs[2] == Interval{2, Interval::kAboveAll});
}

TEST_CASE("minimal intervals of a chain skip the long interval") {
  // chain 5 -> 2 -> 7 inside a bigger tournament
  Rng rng(23);
  for (int round = 0; round < 20; ++round) {
    Tournament t = random_tournament(9, rng);
    VertexList f = {2, 5, 7};
    if (!is_transitive(t, f)) continue;
    auto got = minimal_intervals(t, f);
    auto want = oracle_minimal_intervals(t, f);
    CHECK(got.size() == 4);
    // same set of intervals regardless of order
    for (const auto& iv : want)
      CHECK(std::count(got.begin(), got.end(), iv) == 1);
    CHECK(got.size() == want.size());
    // no returned interval contains a core element
    for (const auto& iv : got)
      for (Vertex c : f)
        CHECK_FALSE(in_interval(t, iv, c));
  }
}

TEST_CASE("beats is vacuous on an empty attacker") {
  Rng rng(4);
  Tournament t = random_tournament(8, rng);
  CHECK(beats(t, {}, {0, 1, 2}));
  CHECK(beats(t, {3}, {}));
}

TEST_CASE("beats agrees with the double loop") {
  Rng rng(9);
  for (int round = 0; round < 100; ++round) {
    Tournament t = random_tournament(16, rng);
    VertexList e, f;
    for (int i = 0; i < 5; ++i) {
      e.push_back(static_cast<Vertex>(rng.below(16)));
      f.push_back(static_cast<Vertex>(rng.below(16)));
    }
    CHECK(beats(t, e, f) == oracle_beats(t, e, f));
  }
}

TEST_CASE("longest monotone on the natural order") {
  std::vector<bits::Word> all(bits::words_for(10), 0);
  for (Vertex i = 0; i < 10; ++i) bits::set(all, i);
  LinearOrderPrefix nat = split_order(10, all);
  auto r = longest_monotone(nat);
  CHECK(r.ascending_length == 10);
  CHECK(r.descending_length == 1);
}

TEST_CASE("longest monotone on the reversed order") {
  std::vector<bits::Word> none(bits::words_for(10), 0);
  LinearOrderPrefix rev = split_order(10, none);
  auto r = longest_monotone(rev);
  CHECK(r.descending_length == 10);
  CHECK(r.ascending_length == 1);
}

TEST_CASE("longest monotone meets the (r-1)(s-1)+1 bound and the subset oracle") {
  Rng rng(31);
  for (int round = 0; round < 100; ++round) {
    LinearOrderPrefix l = gen_split_order(10, rng);
    auto r = longest_monotone(l);
    CHECK(std::max(r.ascending_length, r.descending_length) >= 4);
    CHECK(r.ascending_length == oracle_longest_monotone(l, true));
    CHECK(r.descending_length == oracle_longest_monotone(l, false));
    // witnesses are genuine monotone subsequences
    for (std::size_t i = 0; i + 1 < r.ascending_witness.size(); ++i) {
      CHECK(r.ascending_witness[i] < r.ascending_witness[i + 1]);
      CHECK(l.less(r.ascending_witness[i], r.ascending_witness[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < r.descending_witness.size(); ++i) {
      CHECK(r.descending_witness[i] < r.descending_witness[i + 1]);
      CHECK(l.less(r.descending_witness[i + 1], r.descending_witness[i]));
    }
  }
}

TEST_CASE("thin sets: constant colorings avoid color 1") {
  FiniteColoring2 f(8, 2);
  auto avoided = is_thin(f, {0, 2, 4, 6});
  REQUIRE(avoided.has_value());
  CHECK(*avoided == 1);
}

TEST_CASE("thin sets: none when every color is realized") {
  FiniteColoring2 f(4, 2);
  f.set_color(0, 1, 0);
  f.set_color(0, 2, 1);
  f.set_color(1, 2, 0);
  CHECK_FALSE(is_thin(f, {0, 1, 2}).has_value());
}

TEST_CASE("thin verdicts agree with a direct scan on random colorings") {
  Rng rng(41);
  for (int round = 0; round < 50; ++round) {
    FiniteColoring2 f = random_coloring2(12, 3, rng);
    VertexList a;
    for (Vertex v = 0; v < 12; ++v)
      if (rng.coin()) a.push_back(v);
    auto avoided = is_thin(f, a);
    std::set<Color> seen;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) seen.insert(f.color(a[i], a[j]));
    if (avoided) {
      CHECK(seen.count(*avoided) == 0);
      for (Color c = 0; c < *avoided; ++c) CHECK(seen.count(c) == 1);
    } else {
      CHECK(seen.size() == 3);
    }
  }
}

TEST_CASE("homogeneous: small sets by convention, constant colorings by color") {
  FiniteColoring2 f(6, 4);
  for (Vertex y = 1; y < 6; ++y)
    for (Vertex x = 0; x < y; ++x) f.set_color(x, y, 3);
  auto tiny = is_homogeneous(f, {2});
  CHECK(tiny.homogeneous);
  CHECK_FALSE(tiny.color.has_value());
  auto full = is_homogeneous(f, {0, 1, 2, 3});
  CHECK(full.homogeneous);
  CHECK(full.color == Color{3});
}

TEST_CASE("homogeneous search agrees with exhaustive enumeration on 12 points") {
  Rng rng(43);
  for (int round = 0; round < 20; ++round) {
    FiniteColoring2 f = random_coloring2(12, 2, rng);
    // exhaustive search for a largest homogeneous set
    VertexList best;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
      VertexList s;
      for (Vertex v = 0; v < 12; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
      if (s.size() <= best.size()) continue;
      bool homog = true;
      for (std::size_t i = 0; i < s.size() && homog; ++i)
        for (std::size_t j = i + 1; j < s.size() && homog; ++j)
          homog = f.color(s[i], s[j]) == f.color(s[0], s[1]);
      if (homog) best = s;
    }
    CHECK(is_homogeneous(f, best).homogeneous);
    CHECK(best.size() >= 3);  // Ramsey guarantees at least log-size sets
  }
}

TEST_CASE("cohesive report prefers the inside of a clean member") {
  SetFamily fam(100);
  VertexList evens;
  for (Vertex v = 0; v < 100; v += 2) evens.push_back(v);
  fam.add(evens);
  VertexList c(evens.begin() + 1, evens.end());
  auto rep = cohesive_report(c, fam);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].side == CohesiveSide::kInside);
  CHECK(rep[0].exceptions == 0);
}

TEST_CASE("cohesive report ties go inside") {
  SetFamily fam(100);
  VertexList evens;
  for (Vertex v = 0; v < 100; v += 2) evens.push_back(v);
  fam.add(evens);
  VertexList c;  // 50 on each side
  for (Vertex v = 0; v < 100; ++v) c.push_back(v);
  auto rep = cohesive_report(c, fam);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].side == CohesiveSide::kInside);
  CHECK(rep[0].exceptions == 50);
}

TEST_CASE("coloring serialization round trip") {
  Rng rng(51);
  FiniteColoring2 f = random_coloring2(15, 5, rng);
  std::istringstream in(f.serialize());
  CHECK(FiniteColoring2::deserialize(in) == f);
}

TEST_CASE("set family serialization round trip") {
  SetFamily fam(40);
  fam.add({1, 5, 9});
  fam.add({});
  fam.add({0, 39});
  std::istringstream in(fam.serialize());
  SetFamily back = SetFamily::deserialize(in);
  REQUIRE(back.size() == 3);
  CHECK(back.member(0) == VertexList{1, 5, 9});
  CHECK(back.member(1).empty());
  CHECK(back.member(2) == VertexList{0, 39});
}
