#include <doctest.h>

#include <stdexcept>

#include "finj/generators.hpp"
#include "finj/sdnr.hpp"

using namespace finj;

TEST_CASE("prefix parsing, comparability and table validation") {
  OraclePrefix p = OraclePrefix::from_string("0110");
  CHECK(p.length == 4);
  CHECK(p.to_string() == "0110");
  CHECK(p.comparable(OraclePrefix::from_string("01")));
  CHECK(p.comparable(OraclePrefix::from_string("011010")));
  CHECK_FALSE(p.comparable(OraclePrefix::from_string("1")));

  FunctionalTable f;
  f.add(2, OraclePrefix::from_string("0101"), 3);
  f.add(2, OraclePrefix::from_string("0101110"), 3);  // extension, same value
  f.add(2, OraclePrefix::from_string("11"), 9);       // incomparable
  CHECK_NOTHROW(f.validate());

  FunctionalTable bad_use;
  bad_use.add(5, OraclePrefix::from_string("011"), 1);  // use 3 < input 5
  CHECK_THROWS_AS(bad_use.validate(), std::invalid_argument);

  FunctionalTable inconsistent;
  inconsistent.add(1, OraclePrefix::from_string("01"), 3);
  inconsistent.add(1, OraclePrefix::from_string("0101"), 4);
  CHECK_THROWS_AS(inconsistent.validate(), std::invalid_argument);
}

TEST_CASE("table application picks the shortest matching prefix") {
  FunctionalTable f;
  f.add(1, OraclePrefix::from_string("01"), 5);
  f.add(1, OraclePrefix::from_string("0110"), 5);
  std::vector<bits::Word> oracle(1, 0);
  bits::set(oracle, 1);  // oracle = 0110...
  bits::set(oracle, 2);
  auto app = f.apply(1, oracle, 64);
  REQUIRE(app.has_value());
  CHECK(app->use == 2);
  CHECK(app->value == 5);
  CHECK_FALSE(f.apply(1, oracle, 1).has_value());  // use cap below the match
  CHECK_FALSE(f.apply(3, oracle, 64).has_value()); // no such input
}

TEST_CASE("no functionals: f stays zero") {
  Delta2Approx d(32);
  EnumeratedSet e;
  SdnrRun run = run_sdnr({}, d, e, 32);
  for (auto v : run.final_f) CHECK(v == 0);
  CHECK(run.injuries == 0);
  SdnrReport rep = verify_sdnr(run, {}, d, e);
  CHECK(rep.all_ok());
}

TEST_CASE("hand replay: constant functional waits for the settling time") {
  // Phi_0(a) = 7 with the all-zero oracle prefix of length a; only a = 0
  // is enumerated, at stage 3, so condition (ii) first holds there.
  std::vector<FunctionalTable> fs(1);
  for (Vertex a = 0; a < 8; ++a)
    fs[0].add(a, OraclePrefix::from_string(std::string(a, '0')), 7);
  Delta2Approx d(32);  // oracle constant zero
  EnumeratedSet e;
  e.add(0, 3);
  SdnrRun run = run_sdnr(fs, d, e, 32);

  CHECK(run.final_f[0] == 7);
  for (Vertex y = 1; y < 32; ++y) CHECK(run.final_f[y] == 0);
  REQUIRE(run.restraints.size() == 1);
  CHECK(run.restraints[0].e == 0);
  CHECK(run.restraints[0].a == 0);
  CHECK(run.restraints[0].from == 3);
  CHECK(run.restraints[0].to == 32);  // active through the horizon
  CHECK(run.injuries == 0);

  SdnrReport rep = verify_sdnr(run, fs, d, e);
  CHECK(rep.all_ok());
  REQUIRE(rep.restraint_classes.size() == 1);
  CHECK(rep.restraint_classes[0].cofinite_within_horizon);
  REQUIRE(rep.strategies.size() == 1);
  CHECK(rep.strategies[0].has_witness);
  CHECK(rep.strategies[0].agrees);
  CHECK(rep.strategies[0].agree_at == 0);
}

TEST_CASE("hand replay: oracle flip under a committed use forces a recommit") {
  // Phi_0(1) = 5 on prefix "0", 9 on prefix "1"; bit 0 of the oracle
  // flips at stage 6, after the stage-4 commitment with theta(1) = 4.
  std::vector<FunctionalTable> fs(1);
  fs[0].add(1, OraclePrefix::from_string("0"), 5);
  fs[0].add(1, OraclePrefix::from_string("1"), 9);
  Delta2Approx d(64);
  d.add_event(0, 6, 1);
  EnumeratedSet e;
  e.add(1, 4);
  SdnrRun run = run_sdnr(fs, d, e, 64);

  CHECK(run.final_f[1] == 9);
  CHECK(run.injuries == 1);
  REQUIRE(run.restraints.size() == 2);
  CHECK(run.restraints[0].a == 1);
  CHECK(run.restraints[0].from == 4);
  CHECK(run.restraints[0].to == 6);
  CHECK(run.restraints[0].value == 5);
  CHECK(run.restraints[1].from == 6);
  CHECK(run.restraints[1].to == 64);
  CHECK(run.restraints[1].value == 9);

  // two value flips at point 1: 0 -> 5 -> 9, bounded by 1 + one injury
  CHECK(run.f_history.flip_count(1) == 2);

  SdnrReport rep = verify_sdnr(run, fs, d, e);
  CHECK(rep.all_ok());
  bool injure_seen = false;
  for (const auto& rec : run.trace.records())
    if (rec.event == TraceEvent::kInjure) {
      CHECK(rec.stage == 6);
      CHECK(payload_value(rec.payload, "a") == 1);
      injure_seen = true;
    }
  CHECK(injure_seen);
}

TEST_CASE("a higher-priority strategy stealing the point injures the lower one") {
  // strategy 1 settles on point 2 first (its condition holds from stage
  // 5); strategy 0 only becomes able at stage 9 and takes the same point
  std::vector<FunctionalTable> fs(2);
  fs[0].add(2, OraclePrefix::from_string("001"), 4);  // matches once bit 2 set
  fs[1].add(2, OraclePrefix::from_string("00"), 8);
  Delta2Approx d(64);
  d.add_event(2, 9, 1);
  EnumeratedSet e;
  e.add(2, 5);
  SdnrRun run = run_sdnr(fs, d, e, 64);

  CHECK(run.final_f[2] == 4);  // the higher strategy's value wins
  bool higher_injury = false;
  for (const auto& rec : run.trace.records())
    if (rec.event == TraceEvent::kInjure &&
        rec.payload.find("reason=higher") != std::string::npos) {
      CHECK(rec.stage == 9);
      CHECK(payload_value(rec.payload, "e") == 1);
      higher_injury = true;
    }
  CHECK(higher_injury);

  SdnrReport rep = verify_sdnr(run, fs, d, e);
  // strategy 1's only witness is the stolen point, so the verifier must
  // report the disagreement rather than paper over it
  REQUIRE(rep.strategies.size() == 2);
  CHECK(rep.strategies[0].agrees);
  CHECK(rep.strategies[1].has_witness);
  CHECK_FALSE(rep.strategies[1].ok);
  CHECK(rep.flips_bounded);
  CHECK(rep.commits_realized);
}

TEST_CASE("generated scenarios: witnessed strategies agree, flips bounded") {
  Rng rng(307);
  for (int round = 0; round < 10; ++round) {
    Rng dr(rng.next());
    Delta2Approx d = gen_membership(128, 1, 64, dr);
    EnumeratedSet e = gen_enumeration(128, 24, dr);
    std::vector<FunctionalTable> fs = gen_functionals(4, 64, 2, d, 128, dr);
    SdnrRun run = run_sdnr(fs, d, e, 128);
    SdnrReport rep = verify_sdnr(run, fs, d, e);
    CHECK(rep.divergent_released);
    CHECK(rep.flips_bounded);
    CHECK(rep.commits_realized);
    for (const auto& sv : rep.strategies) CHECK(sv.ok);
  }
}

TEST_CASE("sdnr runs are deterministic") {
  Rng rng1(311), rng2(311);
  Delta2Approx d1 = gen_membership(96, 1, 48, rng1);
  Delta2Approx d2 = gen_membership(96, 1, 48, rng2);
  EnumeratedSet e1 = gen_enumeration(96, 16, rng1);
  EnumeratedSet e2 = gen_enumeration(96, 16, rng2);
  auto f1 = gen_functionals(3, 48, 2, d1, 96, rng1);
  auto f2 = gen_functionals(3, 48, 2, d2, 96, rng2);
  SdnrRun a = run_sdnr(f1, d1, e1, 96);
  SdnrRun b = run_sdnr(f2, d2, e2, 96);
  CHECK(a.final_f == b.final_f);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace.records()[i].line() == b.trace.records()[i].line());
}
