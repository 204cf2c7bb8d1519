#include <doctest.h>

#include <sstream>

#include "finj/generators.hpp"
#include "finj/limit_approx.hpp"

using namespace finj;

namespace {

// replay oracle: walk the full event list in stage order
std::uint32_t oracle_value_at(const Delta2Approx& a, Vertex x, Stage s) {
  std::uint32_t v = 0;
  for (Stage t = 0; t <= s; ++t)
    for (const auto& e : a.events(x))
      if (e.stage == t) v = e.value;
  return v;
}

Delta2Approx random_approx(Vertex horizon, std::uint32_t max_flips, Stage settle, Rng& rng) {
  Delta2Approx a(horizon);
  for (Vertex p = 0; p < horizon; ++p) {
    std::uint32_t flips = static_cast<std::uint32_t>(rng.below(max_flips + 1));
    Stage s = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t i = 0; i < flips; ++i) {
      s += 1 + static_cast<Stage>(rng.below(8));
      if (s >= settle) break;
      std::uint32_t v = prev;
      while (v == prev) v = static_cast<std::uint32_t>(rng.below(5));
      a.add_event(p, s, v);
      prev = v;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("value_at of an empty approximation is zero") {
  Delta2Approx a(10);
  CHECK(a.value_at(3, 0) == 0);
  CHECK(a.value_at(3, 9) == 0);
  CHECK_THROWS_AS(a.value_at(3, 10), std::out_of_range);
}

TEST_CASE("value_at around a single event") {
  Delta2Approx a(12);
  a.add_event(2, 5, 7);
  CHECK(a.value_at(2, 4) == 0);
  CHECK(a.value_at(2, 5) == 7);
  CHECK(a.value_at(2, 11) == 7);
}

TEST_CASE("value_at equals the linear replay on random event lists") {
  Rng rng(61);
  for (int round = 0; round < 30; ++round) {
    Delta2Approx a = random_approx(40, 4, 40, rng);
    for (Vertex x = 0; x < 40; x += 3)
      for (Stage s = 0; s < 40; s += 5) CHECK(a.value_at(x, s) == oracle_value_at(a, x, s));
  }
}

TEST_CASE("events must change the value and advance the stage") {
  Delta2Approx a(10);
  a.add_event(1, 3, 2);
  CHECK_THROWS_AS(a.add_event(1, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(a.add_event(1, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(a.add_event(1, 2, 9), std::invalid_argument);
}

TEST_CASE("limit report: empty, single flip, random replay") {
  Delta2Approx a(30);
  CHECK(a.limit_report(7) == std::pair<std::uint32_t, Stage>{0, 0});
  a.add_event(7, 11, 3);
  CHECK(a.limit_report(7) == std::pair<std::uint32_t, Stage>{3, 11});
  Rng rng(67);
  for (int round = 0; round < 20; ++round) {
    Delta2Approx b = random_approx(25, 5, 25, rng);
    for (Vertex x = 0; x < 25; ++x)
      CHECK(b.limit_report(x).first == oracle_value_at(b, x, 24));
  }
}

TEST_CASE("to_stable_pairs: constant approximation gives constant columns") {
  Delta2Approx a(8);
  FiniteColoring2 h = to_stable_pairs(a);
  for (Vertex s = 1; s < 8; ++s)
    for (Vertex x = 0; x < s; ++x) CHECK(h.color(x, s) == 0);
}

TEST_CASE("to_stable_pairs: one flip freezes the column past its stage") {
  Delta2Approx a(10);
  a.add_event(2, 6, 4);
  FiniteColoring2 h = to_stable_pairs(a);
  for (Vertex s = 3; s < 6; ++s) CHECK(h.color(2, s) == 0);
  for (Vertex s = 6; s < 10; ++s) CHECK(h.color(2, s) == 4);
}

TEST_CASE("round trip reproduces limits: 500 random budgeted approximations") {
  Rng rng(71);
  const Vertex horizon = 64;
  const Stage tail = horizon / 2;
  for (int round = 0; round < 500; ++round) {
    Delta2Approx a = random_approx(horizon, 5, horizon / 2, rng);
    auto [rec, report] = from_stable_pairs(to_stable_pairs(a), tail);
    CHECK(report.unstable.empty());
    for (Vertex x = 0; x + 1 < horizon; ++x) {
      auto [v0, s0] = a.limit_report(x);
      auto [v1, s1] = rec.limit_report(x);
      CHECK(v0 == v1);
      // stages past the first column cell are visible in the pairs
      if (s0 > x + 1) CHECK(s0 == s1);
    }
  }
}

TEST_CASE("from_stable_pairs reports alternating columns unstable") {
  FiniteColoring2 h(12, 2);
  for (Vertex s = 1; s < 12; ++s)
    for (Vertex x = 0; x < s; ++x) h.set_color(x, s, x == 3 ? s % 2 : 0);
  auto [rec, report] = from_stable_pairs(h, 4);
  REQUIRE(report.unstable.size() == 1);
  CHECK(report.unstable[0] == 3);
}

TEST_CASE("from_stable_pairs on a constant coloring settles at zero") {
  FiniteColoring2 h(9, 3);
  auto [rec, report] = from_stable_pairs(h, 3);
  CHECK(report.unstable.empty());
  for (Vertex x = 0; x < 9; ++x)
    CHECK(rec.limit_report(x) == std::pair<std::uint32_t, Stage>{0, 0});
}

TEST_CASE("theta: never enumerated, enumerated late, monotone in the stage") {
  EnumeratedSet e;
  e.add(4, 3);
  e.add(9, 6);
  CHECK_FALSE(e.theta(5, 100).has_value());
  CHECK(e.theta(4, 10) == Stage{3});
  CHECK_FALSE(e.theta(4, 2).has_value());
  for (Stage s = 0; s < 20; ++s) {
    auto th = e.theta(9, s);
    if (th) {
      for (Stage t = s; t < 20; ++t) CHECK(e.theta(9, t) == th);
      break;
    }
  }
}

TEST_CASE("theta agrees with a linear scan on generated enumerations") {
  Rng rng(73);
  EnumeratedSet e = gen_enumeration(60, 10, rng);
  for (Vertex x = 0; x < 60; x += 2)
    for (Stage s = 0; s < 60; s += 7) {
      std::optional<Stage> want;
      for (const auto& [el, st] : e.entries())
        if (el == x && st <= s && !want) want = st;
      CHECK(e.theta(x, s) == want);
    }
}

TEST_CASE("enumerated sets reject repeats and decreasing stages") {
  EnumeratedSet e;
  e.add(1, 4);
  CHECK_THROWS_AS(e.add(1, 6), std::invalid_argument);
  CHECK_THROWS_AS(e.add(2, 3), std::invalid_argument);
}

TEST_CASE("approximation and enumeration text round trips") {
  Rng rng(79);
  Delta2Approx a = random_approx(20, 3, 20, rng);
  std::istringstream in(a.serialize());
  CHECK(Delta2Approx::deserialize(in) == a);

  EnumeratedSet e = gen_enumeration(30, 5, rng);
  std::istringstream in2(e.serialize());
  EnumeratedSet back = EnumeratedSet::deserialize(in2);
  CHECK(back.entries() == e.entries());
}

TEST_CASE("double-limit grid: outer limit over layers") {
  DoubleLimitApprox g(10, 4);
  g.layer(2).add_event(5, 1, 1);
  g.layer(3).add_event(5, 2, 1);
  auto [v, settled] = g.outer_limit(5);
  CHECK(v == 1);
  CHECK(settled == 2);
  CHECK(g.layer_changes(5) == 1);
  CHECK(g.value_at(5, 0, 2) == 0);
  CHECK(g.value_at(5, 1, 2) == 1);
}
