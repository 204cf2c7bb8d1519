#include <doctest.h>

#include <set>
#include <tuple>

#include "finj/generators.hpp"
#include "finj/sads.hpp"

using namespace finj;

namespace {

// Naive replay of the documented stage semantics: plain containers,
// linear scans, no bitsets. Independent of the engine's code paths.
struct NaiveSads {
  std::set<Vertex> u;
  std::vector<std::pair<std::uint32_t, Vertex>> claims;  // (requirement, dm)
  std::vector<std::vector<bool>> below;                  // below[x][y]: x <L y

  NaiveSads(const CandidateFamily& z, Vertex horizon, bool strict_lt = false) {
    below.assign(horizon, std::vector<bool>(horizon, false));
    std::vector<std::int64_t> last_sat(2 * z.size(), -1);
    std::set<Vertex> dms;
    for (Vertex s = 0; s < horizon; ++s) {
      for (Vertex x = 0; x < s; ++x) {
        if (u.count(x)) below[x][s] = true;
        else below[s][x] = true;
      }
      dms.insert(s);
      std::vector<bool> sat(2 * z.size(), false);
      for (std::uint32_t i = 0; i < 2 * z.size(); ++i) {
        bool want_in = i % 2 == 0;
        for (Vertex a = 0; a < s && !sat[i]; ++a)
          if (z[i / 2].member(a, s) && (u.count(a) > 0) == want_in) sat[i] = true;
        if (sat[i]) last_sat[i] = s;
      }
      std::int64_t req = -1;
      Vertex dm = 0;
      for (Vertex cand : dms) {
        for (std::uint32_t i = 0; i < 2 * z.size() && req < 0; ++i) {
          bool eligible = strict_lt ? i < cand : i <= cand;
          if (!eligible || sat[i]) continue;
          if (last_sat[i] >= static_cast<std::int64_t>(cand)) continue;
          bool want_in = i % 2 == 0;
          if ((u.count(cand) > 0) == want_in) continue;
          req = i;
          dm = cand;
        }
        if (req >= 0) break;
      }
      if (req >= 0) {
        claims.emplace_back(static_cast<std::uint32_t>(req), dm);
        bool want_in = req % 2 == 0;
        for (Vertex v = dm; v <= s; ++v) {
          if (want_in) u.insert(v);
          else u.erase(v);
        }
        for (auto it = dms.upper_bound(dm); it != dms.end();) it = dms.erase(it);
      }
    }
  }
};

bool oracle_no_3cycle(const LinearOrderPrefix& l) {
  for (Vertex a = 0; a < l.size(); ++a)
    for (Vertex b = 0; b < l.size(); ++b)
      for (Vertex c = 0; c < l.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        if (l.less(a, b) && l.less(b, c) && l.less(c, a)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("empty family: U stays empty, later elements sit below earlier ones") {
  SadsRun run = run_sads({}, 24);
  CHECK(bits::count(run.final_u) == 0);
  CHECK(run.claims.empty());
  for (Vertex x = 0; x < 24; ++x)
    for (Vertex y = x + 1; y < 24; ++y) CHECK(run.order.less(y, x));
  SadsReport rep = verify_sads(run, {});
  CHECK(rep.all_ok());
  CHECK(rep.omega_part_bound == 0);
}

TEST_CASE("hand replay: the full candidate pins 0 inside and 1 outside") {
  CandidateFamily z;
  VertexList all(32);
  for (Vertex i = 0; i < 32; ++i) all[i] = i;
  z.push_back(Candidate::fixed(all, 32));
  SadsRun run = run_sads(z, 32);

  // R(0) claims decision-maker 0 at stage 0 and pushes it into U; from
  // stage 1 element 0 witnesses R(0); from stage 2 element 1, still
  // outside, witnesses R(1); nothing acts again.
  REQUIRE(run.claims.size() == 1);
  CHECK(run.claims[0].stage == 0);
  CHECK(run.claims[0].requirement == 0);
  CHECK(run.claims[0].decision_maker == 0);
  CHECK(bits::to_elements(run.final_u, 32) == VertexList{0});

  REQUIRE(run.satisfaction.size() == 2);
  CHECK(run.satisfaction[0].satisfied);
  CHECK(run.satisfaction[0].witness == 0);
  CHECK(run.satisfaction[1].satisfied);
  CHECK(run.satisfaction[1].witness == 1);

  // 0 ascends below everything, the rest descend
  for (Vertex y = 1; y < 32; ++y) CHECK(run.order.less(0, y));
  for (Vertex x = 1; x < 32; ++x)
    for (Vertex y = x + 1; y < 32; ++y) CHECK(run.order.less(y, x));

  CHECK(verify_sads(run, z).all_ok());
}

TEST_CASE("hand replay: two-element candidate settles after migrating upward") {
  CandidateFamily z;
  z.push_back(Candidate::fixed({5, 9}, 12));
  SadsRun run = run_sads(z, 12);

  // early push/pull dance at decision-maker 1, then R(0), damped past its
  // stage-6 satisfaction, walks fresh decision-makers 7, 8 and catches 9
  const std::vector<std::tuple<Stage, std::uint32_t, Vertex>> expected = {
      {0, 0, 0}, {1, 0, 1}, {2, 1, 1}, {3, 0, 1}, {4, 1, 1},
      {5, 0, 1}, {6, 1, 1}, {7, 0, 7}, {8, 0, 8}, {9, 0, 9},
  };
  REQUIRE(run.claims.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(run.claims[i].stage == std::get<0>(expected[i]));
    CHECK(run.claims[i].requirement == std::get<1>(expected[i]));
    CHECK(run.claims[i].decision_maker == std::get<2>(expected[i]));
  }
  CHECK(bits::to_elements(run.final_u, 12) == VertexList{0, 7, 8, 9});
  CHECK(run.satisfaction[0].satisfied);
  CHECK(run.satisfaction[0].witness == 9);
  CHECK(run.satisfaction[1].satisfied);
  CHECK(run.satisfaction[1].witness == 5);
  // followers of the stage-6 block
  for (Vertex v = 2; v <= 6; ++v) CHECK(run.follows[v] == 1);
  CHECK(run.follows[7] == 7);
  CHECK(verify_sads(run, z).all_ok());
}

TEST_CASE("engine matches the naive replay on scripted and random families") {
  Rng rng(211);
  for (int round = 0; round < 12; ++round) {
    CandidateFamily z;
    std::size_t count = 1 + rng.below(3);
    for (std::size_t e = 0; e < count; ++e) {
      if (rng.coin()) {
        VertexList xs;
        for (Vertex v = 0; v < 48; ++v)
          if (rng.below(4) == 0) xs.push_back(v);
        z.push_back(Candidate::fixed(std::move(xs), 48));
      } else {
        z.push_back(Candidate::approximated(gen_membership(48, 3, 24, rng)));
      }
    }
    SadsRun run = run_sads(z, 48);
    NaiveSads naive(z, 48);
    REQUIRE(run.claims.size() == naive.claims.size());
    for (std::size_t i = 0; i < run.claims.size(); ++i) {
      CHECK(run.claims[i].requirement == naive.claims[i].first);
      CHECK(run.claims[i].decision_maker == naive.claims[i].second);
    }
    CHECK(bits::to_elements(run.final_u, 48) ==
          VertexList(naive.u.begin(), naive.u.end()));
    for (Vertex x = 0; x < 48; ++x)
      for (Vertex y = 0; y < 48; ++y)
        if (x != y) CHECK(run.order.less(x, y) == naive.below[x][y]);
  }
}

TEST_CASE("two-candidate scripted run: order 3-cycle-free, both sides hit") {
  CandidateFamily z;
  z.push_back(Candidate::fixed({5, 9}, 24));
  z.push_back(Candidate::fixed({7}, 24));
  SadsRun run = run_sads(z, 24);
  NaiveSads naive(z, 24);
  REQUIRE(run.claims.size() == naive.claims.size());
  CHECK(oracle_no_3cycle(run.order));
  SadsReport rep = verify_sads(run, z);
  CHECK(rep.order_transitive);
  CHECK(rep.flips_bounded);
  CHECK(rep.followers_monotone);
  // Z_0 has two elements and must end split across U
  CHECK(run.satisfaction[0].satisfied);
  CHECK(run.satisfaction[1].satisfied);
}

TEST_CASE("random runs: transitivity oracle, claim bounds, verifier") {
  Rng rng(223);
  for (int round = 0; round < 8; ++round) {
    CandidateFamily z;
    for (int e = 0; e < 3; ++e)
      z.push_back(Candidate::approximated(gen_membership(64, 3, 32, rng)));
    SadsRun run = run_sads(z, 64);
    CHECK(oracle_no_3cycle(run.order));
    SadsReport rep = verify_sads(run, z);
    CHECK(rep.order_transitive);
    CHECK(rep.flips_bounded);
    CHECK(rep.followers_monotone);
    CHECK(rep.replay_consistent);
  }
}

TEST_CASE("strict attention threshold shifts the first claim") {
  CandidateFamily z;
  VertexList all(16);
  for (Vertex i = 0; i < 16; ++i) all[i] = i;
  z.push_back(Candidate::fixed(all, 16));
  SadsOptions strict;
  strict.strict_lt = true;
  SadsRun run = run_sads(z, 16, strict);
  // with i < u, decision-maker 0 cannot be claimed by R(0); the first
  // claim lands on 1
  REQUIRE_FALSE(run.claims.empty());
  CHECK(run.claims[0].decision_maker == 1);
  NaiveSads naive(z, 16, true);
  REQUIRE(run.claims.size() == naive.claims.size());
  for (std::size_t i = 0; i < run.claims.size(); ++i)
    CHECK(run.claims[i].decision_maker == naive.claims[i].second);
}

TEST_CASE("final-U elements sit below all but boundedly many others") {
  Rng rng(227);
  CandidateFamily z;
  for (int e = 0; e < 2; ++e)
    z.push_back(Candidate::approximated(gen_membership(96, 2, 48, rng)));
  SadsRun run = run_sads(z, 96);
  SadsReport rep = verify_sads(run, z);
  for (Vertex x = 0; x < 96; ++x) {
    if (!bits::test(run.final_u, x)) continue;
    std::uint32_t above = 0;
    for (Vertex y = 0; y < 96; ++y)
      if (y != x && !run.order.less(x, y)) ++above;
    CHECK(above <= rep.omega_part_bound);
  }
}
