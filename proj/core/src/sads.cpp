#include "finj/sads.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace finj {

namespace {

struct Machine {
  const CandidateFamily& z;
  const Vertex horizon;
  const SadsOptions opts;
  std::vector<std::vector<std::vector<Delta2Approx::Event>>> buckets;
  std::vector<std::vector<bits::Word>> member;  // memberships at current stage
  std::vector<bits::Word> in_u;
  std::vector<Vertex> follows;
  std::vector<Vertex> decision_makers;  // ascending; conversion truncates
  std::vector<std::int64_t> last_sat;
  std::vector<bool> sat_now;
  std::vector<Vertex> witness_now;

  explicit Machine(const CandidateFamily& zz, Vertex h, SadsOptions o)
      : z(zz), horizon(h), opts(o) {
    buckets.resize(z.size());
    member.resize(z.size());
    for (std::size_t e = 0; e < z.size(); ++e) {
      buckets[e].assign(h, {});
      if (const Delta2Approx* a = z[e].approx())
        for (Vertex x = 0; x < a->horizon(); ++x)
          for (const auto& ev : a->events(x)) buckets[e][ev.stage].push_back(ev);
      member[e].assign(bits::words_for(h), 0);
      for (Vertex a = 0; a < h; ++a)
        if (z[e].member(a, 0)) bits::set(member[e], a);
    }
    in_u.assign(bits::words_for(h), 0);
    follows.resize(h);
    for (Vertex v = 0; v < h; ++v) follows[v] = v;
    last_sat.assign(2 * z.size(), -1);
    sat_now.assign(2 * z.size(), false);
    witness_now.assign(2 * z.size(), 0);
  }

  void apply_stage_events(Stage s) {
    for (std::size_t e = 0; e < z.size(); ++e)
      for (const auto& ev : buckets[e][s])
        bits::assign(member[e], ev.point, ev.value == 1);
  }

  // Direct evaluation over decided points a < s against the current U.
  void evaluate(Vertex s) {
    const std::size_t full_words = s / bits::kWordBits;
    const std::uint32_t rem = s % bits::kWordBits;
    for (std::uint32_t i = 0; i < 2 * z.size(); ++i) {
      std::size_t e = i / 2;
      bool want_in = (i % 2) == 0;
      std::int64_t hit = -1;
      for (std::size_t w = 0; w <= full_words && w < member[e].size(); ++w) {
        bits::Word x = member[e][w] & (want_in ? in_u[w] : ~in_u[w]);
        if (w == full_words) x &= rem ? (bits::Word{1} << rem) - 1 : 0;
        if (x) {
          hit = static_cast<std::int64_t>(w) * bits::kWordBits + std::countr_zero(x);
          break;
        }
      }
      sat_now[i] = hit >= 0;
      if (hit >= 0) {
        witness_now[i] = static_cast<Vertex>(hit);
        last_sat[i] = static_cast<std::int64_t>(s);
      }
    }
  }
};

}  // namespace

SadsRun run_sads(const CandidateFamily& z, Vertex horizon, SadsOptions opts) {
  if (horizon < 1) throw std::invalid_argument("run_sads: horizon must be >= 1");
  SadsRun run;
  run.horizon = horizon;
  run.trace = PriorityTrace("sads");
  run.u_history = Delta2Approx(horizon);

  Machine m(z, horizon, opts);
  Tournament order(horizon);
  const std::uint32_t nreq = static_cast<std::uint32_t>(2 * z.size());

  for (Vertex s = 0; s < horizon; ++s) {
    m.apply_stage_events(s);
    // (1) order the arriving element against every decided one
    for (Vertex u = 0; u < s; ++u) {
      if (bits::test(m.in_u, u)) order.set_edge(u, s);
      else order.set_edge(s, u);
    }
    m.decision_makers.push_back(s);
    // (2) direct requirement evaluation
    m.evaluate(s);
    // (3) one claim: least eligible decision-maker, least requirement there
    std::int64_t claim_req = -1;
    Vertex claim_u = 0;
    for (Vertex u : m.decision_makers) {
      for (std::uint32_t i = 0; i < nreq; ++i) {
        bool eligible = opts.strict_lt ? i < u : i <= u;
        if (!eligible || m.sat_now[i]) continue;
        if (m.last_sat[i] >= static_cast<std::int64_t>(u)) continue;
        bool want_in = (i % 2) == 0;
        if (bits::test(m.in_u, u) == want_in) continue;  // already on the wanted side
        claim_req = i;
        claim_u = u;
        break;
      }
      if (claim_req >= 0) break;
    }
    if (claim_req >= 0) {
      std::uint32_t i = static_cast<std::uint32_t>(claim_req);
      bool want_in = (i % 2) == 0;
      std::ostringstream payload;
      payload << "r=" << i << " u=" << claim_u << " hi=" << s;
      run.trace.add(s, TraceEvent::kClaim, payload.str());
      run.claims.push_back({s, i, claim_u});
      for (Vertex v = claim_u; v <= s; ++v) {
        if (bits::test(m.in_u, v) != want_in) {
          bits::assign(m.in_u, v, want_in);
          run.u_history.add_event(v, s, want_in ? 1 : 0);
          run.trace.add(s, TraceEvent::kUflip,
                        "a=" + std::to_string(v) + " in=" + (want_in ? "1" : "0"));
        }
      }
      // (u, s] follow u and stop being decision-makers
      for (Vertex v = claim_u + 1; v <= s; ++v) m.follows[v] = claim_u;
      while (!m.decision_makers.empty() && m.decision_makers.back() > claim_u)
        m.decision_makers.pop_back();
    }
  }

  run.final_u = m.in_u;
  run.order = LinearOrderPrefix::unchecked(std::move(order));
  run.follows = m.follows;

  const Stage last = horizon - 1;
  for (std::uint32_t i = 0; i < nreq; ++i) {
    SadsRun::Satisfaction sat{i, false, 0};
    std::size_t e = i / 2;
    bool want_in = (i % 2) == 0;
    for (Vertex a = 0; a < horizon && !sat.satisfied; ++a)
      if (z[e].final_member(a, last) && bits::test(m.in_u, a) == want_in) {
        sat.satisfied = true;
        sat.witness = a;
      }
    run.satisfaction.push_back(sat);
    if (sat.satisfied)
      run.trace.add(last, TraceEvent::kSatisfy,
                    "r=" + std::to_string(i) + " a=" + std::to_string(sat.witness));
  }
  return run;
}

bool SadsReport::all_ok() const {
  if (!order_transitive || !flips_bounded || !followers_monotone || !replay_consistent)
    return false;
  for (const auto& c : candidates)
    if (!c.ok) return false;
  return true;
}

SadsReport verify_sads(const SadsRun& run, const CandidateFamily& z, SadsOptions opts) {
  SadsReport report;
  const Vertex horizon = run.horizon;
  const Stage last = horizon ? horizon - 1 : 0;

  // (0) rerun from the inputs; claims, flips and final U must agree
  // record for record (the engine is a pure function of its inputs).
  {
    SadsRun again = run_sads(z, horizon, opts);
    report.replay_consistent = again.final_u == run.final_u &&
                               again.claims.size() == run.claims.size() &&
                               again.u_history == run.u_history;
    if (report.replay_consistent)
      for (std::size_t i = 0; i < again.claims.size(); ++i)
        if (again.claims[i].stage != run.claims[i].stage ||
            again.claims[i].requirement != run.claims[i].requirement ||
            again.claims[i].decision_maker != run.claims[i].decision_maker)
          report.replay_consistent = false;
  }

  // (1) exhaustive transitivity scan over the final order
  {
    const Tournament& t = run.order.relation();
    report.order_transitive = true;
    for (Vertex u = 0; u < horizon && report.order_transitive; ++u) {
      const auto& succ_u = t.row(u);
      for (Vertex v = 0; v < horizon && report.order_transitive; ++v) {
        if (!bits::test(succ_u, v)) continue;
        const auto& succ_v = t.row(v);
        for (std::size_t w = 0; w < succ_u.size(); ++w)
          if (succ_v[w] & ~succ_u[w]) {
            report.order_transitive = false;
            break;
          }
      }
    }
  }

  // (2) per-element flip count bounded by claims touching it
  {
    report.flips_bounded = true;
    std::vector<std::uint32_t> touching(horizon, 0);
    for (const auto& c : run.claims)
      for (Vertex v = c.decision_maker; v <= c.stage && v < horizon; ++v) ++touching[v];
    for (Vertex v = 0; v < horizon; ++v)
      if (run.u_history.flip_count(v) > touching[v]) report.flips_bounded = false;
  }

  // (3) follower pointers only ever move to smaller indices
  {
    report.followers_monotone = true;
    std::vector<Vertex> follows(horizon);
    for (Vertex v = 0; v < horizon; ++v) follows[v] = v;
    for (const auto& c : run.claims)
      for (Vertex v = c.decision_maker + 1; v <= c.stage && v < horizon; ++v) {
        if (c.decision_maker > follows[v]) report.followers_monotone = false;
        follows[v] = c.decision_maker;
      }
    if (follows != run.follows) report.followers_monotone = false;
  }

  // (4) final-U elements are below all but boundedly many others
  {
    std::uint32_t worst = 0;
    for (Vertex x = 0; x < horizon; ++x) {
      if (!bits::test(run.final_u, x)) continue;
      std::uint32_t above = 0;
      for (Vertex y = 0; y < horizon; ++y)
        if (y != x && !run.order.less(x, y)) ++above;
      worst = std::max(worst, above);
    }
    report.omega_part_bound = worst;
  }

  // (5) candidates with enough final elements past higher-priority
  // quiescence must intersect both sides
  for (std::uint32_t e = 0; e < z.size(); ++e) {
    SadsReport::CandidateVerdict v;
    v.e = e;
    Stage q = 0;
    for (const auto& c : run.claims)
      if (c.requirement < 2 * e) q = std::max(q, c.stage);
    v.quiescence = q;
    for (Vertex a = 0; a < horizon; ++a) {
      if (!z[e].final_member(a, last)) continue;
      if (a > q) ++v.tail;
      if (bits::test(run.final_u, a)) v.hits_inside = true;
      else v.hits_outside = true;
    }
    v.ok = v.tail < report.tail_threshold || (v.hits_inside && v.hits_outside);
    report.candidates.push_back(v);
  }
  return report;
}

}  // namespace finj
