#include "finj/sts.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "finj/combinatorics.hpp"

namespace finj {

namespace {

struct Requirement {
  std::uint32_t e;
  Color i;
  std::uint64_t priority;
};

std::vector<Requirement> scheduled_requirements(std::size_t candidates, Color colors,
                                                Vertex horizon) {
  std::vector<Requirement> reqs;
  for (std::uint32_t e = 0; e < candidates; ++e)
    for (Color i = 0; i < colors; ++i) {
      std::uint64_t p = cantor_pair(e, i);
      if (p < horizon) reqs.push_back({e, i, p});
    }
  std::sort(reqs.begin(), reqs.end(),
            [](const Requirement& a, const Requirement& b) { return a.priority < b.priority; });
  return reqs;
}

std::string ei_payload(std::uint32_t e, Color i) {
  std::ostringstream out;
  out << "e=" << e << " i=" << i;
  return out.str();
}

// events grouped by stage, one bucket list per candidate
std::vector<std::vector<std::vector<Delta2Approx::Event>>> stage_buckets(
    const CandidateFamily& z, Vertex horizon) {
  std::vector<std::vector<std::vector<Delta2Approx::Event>>> buckets(z.size());
  for (std::size_t e = 0; e < z.size(); ++e) {
    buckets[e].assign(horizon, {});
    if (const Delta2Approx* a = z[e].approx()) {
      for (Vertex x = 0; x < a->horizon(); ++x)
        for (const auto& ev : a->events(x))
          buckets[e][ev.stage].push_back(ev);
    }
  }
  return buckets;
}

}  // namespace

Candidate Candidate::fixed(VertexList elements, Vertex horizon) {
  Candidate c;
  StaticSet s{horizon, bits::from_elements(elements, horizon)};
  c.rep_ = std::move(s);
  return c;
}

Candidate Candidate::approximated(Delta2Approx membership) {
  Candidate c;
  c.rep_ = std::move(membership);
  return c;
}

bool Candidate::member(Vertex a, Stage s) const {
  if (const auto* st = std::get_if<StaticSet>(&rep_)) {
    return a < st->horizon && bits::test(st->members, a);
  }
  const auto& approx = std::get<Delta2Approx>(rep_);
  return a < approx.horizon() && approx.value_at(a, s) == 1;
}

const Delta2Approx* Candidate::approx() const {
  return std::get_if<Delta2Approx>(&rep_);
}

Vertex Candidate::horizon() const {
  if (const auto* st = std::get_if<StaticSet>(&rep_)) return st->horizon;
  return std::get<Delta2Approx>(rep_).horizon();
}

StsRun run_sts(const CandidateFamily& z, Color colors, Vertex horizon) {
  if (horizon < 1) throw std::invalid_argument("run_sts: horizon must be >= 1");
  if (colors < 1) throw std::invalid_argument("run_sts: need at least one color");
  StsRun run;
  run.horizon = horizon;
  run.colors = colors;
  run.c.assign(horizon, 0);
  run.trace = PriorityTrace("sts");

  auto reqs = scheduled_requirements(z.size(), colors, horizon);
  auto buckets = stage_buckets(z, horizon);

  // witnesses[r] = |{a < s : a in Z_e at the current stage, c(a) = i}|,
  // maintained incrementally from membership events.
  std::vector<std::uint32_t> witnesses(reqs.size(), 0);
  std::vector<std::vector<std::size_t>> req_of_candidate(z.size());
  for (std::size_t r = 0; r < reqs.size(); ++r)
    req_of_candidate[reqs[r].e].push_back(r);

  std::vector<std::vector<bool>> member(z.size());
  for (std::size_t e = 0; e < z.size(); ++e) {
    member[e].assign(horizon, false);
    for (Vertex a = 0; a < horizon; ++a) member[e][a] = z[e].member(a, 0);
  }

  auto bump = [&](std::size_t e, Vertex a, bool now, Vertex s) {
    Color col = run.c[a];
    for (std::size_t r : req_of_candidate[e]) {
      if (reqs[r].i != col) continue;
      if (now) {
        if (witnesses[r]++ == 0)
          run.trace.add(s, TraceEvent::kSatisfy,
                        ei_payload(reqs[r].e, reqs[r].i) + " a=" + std::to_string(a));
      } else {
        if (--witnesses[r] == 0)
          run.trace.add(s, TraceEvent::kInjure,
                        ei_payload(reqs[r].e, reqs[r].i) + " a=" + std::to_string(a));
      }
    }
  };

  for (Vertex s = 0; s < horizon; ++s) {
    if (s > 0) {
      // membership events of stage s; only points already in the witness
      // pool (colored before s-1) shift counts here
      for (std::size_t e = 0; e < z.size(); ++e)
        for (const auto& ev : buckets[e][s]) {
          bool now = ev.value == 1;
          if (member[e][ev.point] == now) continue;
          member[e][ev.point] = now;
          if (ev.point + 1 < s) bump(e, ev.point, now, s);
        }
      // point s-1 received its color at the previous stage; it joins the
      // pool with its stage-s membership
      Vertex a = s - 1;
      for (std::size_t e = 0; e < z.size(); ++e)
        if (member[e][a]) bump(e, a, true, s);
    }
    Color chosen = 0;
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      if (reqs[r].priority >= s) break;
      if (witnesses[r] == 0) {
        chosen = reqs[r].i;
        run.trace.add(s, TraceEvent::kActivate, ei_payload(reqs[r].e, reqs[r].i));
        break;
      }
    }
    run.c[s] = chosen;
    run.trace.add(s, TraceEvent::kAssign,
                  "a=" + std::to_string(s) + " c=" + std::to_string(chosen));
  }

  const Stage last = horizon - 1;
  for (const auto& req : reqs) {
    StsRun::Satisfaction sat{req.e, req.i, false, 0};
    for (Vertex a = 0; a < horizon; ++a)
      if (run.c[a] == req.i && z[req.e].final_member(a, last)) {
        sat.satisfied = true;
        sat.witness = a;
        break;
      }
    run.satisfaction.push_back(sat);
  }
  return run;
}

bool StsReport::all_ok() const {
  if (!replay_consistent || !thin_bridge_ok) return false;
  for (const auto& r : requirements)
    if (r.verdict == StsVerdict::kFailed) return false;
  return true;
}

StsReport verify_sts(const StsRun& run, const CandidateFamily& z) {
  StsReport report;
  const Vertex horizon = run.horizon;
  const Stage last = horizon ? horizon - 1 : 0;
  auto reqs = scheduled_requirements(z.size(), run.colors, horizon);
  auto buckets = stage_buckets(z, horizon);

  // Independent replay with explicit witness sets instead of the engine's
  // counters. Records the activation per stage and, per requirement, the
  // last stage at which it held a witness.
  std::vector<std::set<Vertex>> witness_sets(reqs.size());
  std::vector<std::vector<std::size_t>> req_of_candidate(z.size());
  for (std::size_t r = 0; r < reqs.size(); ++r)
    req_of_candidate[reqs[r].e].push_back(r);
  std::vector<std::vector<bool>> member(z.size());
  for (std::size_t e = 0; e < z.size(); ++e) {
    member[e].assign(horizon, false);
    for (Vertex a = 0; a < horizon; ++a) member[e][a] = z[e].member(a, 0);
  }

  std::vector<Color> c2(horizon, 0);
  std::vector<std::int64_t> activation_at(horizon, -1);  // index into reqs
  std::vector<std::int64_t> last_satisfied(reqs.size(), -1);

  for (Vertex s = 0; s < horizon; ++s) {
    if (s > 0) {
      for (std::size_t e = 0; e < z.size(); ++e)
        for (const auto& ev : buckets[e][s]) {
          bool now = ev.value == 1;
          if (member[e][ev.point] == now) continue;
          member[e][ev.point] = now;
          if (ev.point >= s) continue;
          for (std::size_t r : req_of_candidate[e]) {
            if (reqs[r].i != c2[ev.point]) continue;
            if (now) witness_sets[r].insert(ev.point);
            else witness_sets[r].erase(ev.point);
          }
        }
      Vertex a = s - 1;
      for (std::size_t e = 0; e < z.size(); ++e)
        if (member[e][a])
          for (std::size_t r : req_of_candidate[e])
            if (reqs[r].i == c2[a]) witness_sets[r].insert(a);
    }
    for (std::size_t r = 0; r < reqs.size(); ++r)
      if (!witness_sets[r].empty()) last_satisfied[r] = s;
    Color chosen = 0;
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      if (reqs[r].priority >= s) break;
      if (witness_sets[r].empty()) {
        chosen = reqs[r].i;
        activation_at[s] = static_cast<std::int64_t>(r);
        break;
      }
    }
    c2[s] = chosen;
  }

  report.replay_consistent = c2 == run.c;
  if (report.replay_consistent) {
    std::size_t next = 0;
    for (Vertex s = 0; s < horizon && report.replay_consistent; ++s) {
      if (activation_at[s] < 0) continue;
      const auto& req = reqs[static_cast<std::size_t>(activation_at[s])];
      // find the ACTIVATE record for this stage
      bool found = false;
      while (next < run.trace.records().size() && run.trace.records()[next].stage <= s) {
        const auto& rec = run.trace.records()[next];
        ++next;
        if (rec.stage == s && rec.event == TraceEvent::kActivate) {
          found = rec.payload == ei_payload(req.e, req.i);
          break;
        }
      }
      if (!found) report.replay_consistent = false;
    }
  }

  for (std::size_t r = 0; r < reqs.size(); ++r) {
    const auto& req = reqs[r];
    StsRequirementReport rr;
    rr.e = req.e;
    rr.i = req.i;
    rr.trace_line = static_cast<std::size_t>(-1);
    Vertex witness = 0;
    bool satisfied = false;
    for (Vertex a = 0; a < horizon && !satisfied; ++a)
      if (run.c[a] == req.i && z[req.e].final_member(a, last)) {
        satisfied = true;
        witness = a;
      }
    if (satisfied) {
      rr.verdict = StsVerdict::kSatisfied;
      rr.witness = witness;
      rr.detail = "witness a=" + std::to_string(witness);
      for (std::size_t li = 0; li < run.trace.records().size(); ++li) {
        const auto& rec = run.trace.records()[li];
        if (rec.event == TraceEvent::kSatisfy &&
            payload_value(rec.payload, "e") == req.e &&
            payload_value(rec.payload, "i") == req.i) {
          rr.trace_line = li;
          break;
        }
      }
    } else {
      // s*: start of the terminal continuous-activation run, or of the
      // terminal unsatisfied run when the requirement never reached the
      // front of the queue (shadowed by an eternally active one).
      Stage star = horizon;
      bool shadowed = false;
      for (Vertex s = horizon; s-- > 0;) {
        if (activation_at[s] != static_cast<std::int64_t>(r)) break;
        star = s;
      }
      if (star == horizon) {
        shadowed = true;
        star = static_cast<Stage>(last_satisfied[r] + 1);
      }
      bool tail_empty = true;
      for (Vertex a = star >= horizon ? horizon : star + 1; a < horizon; ++a)
        if (z[req.e].final_member(a, last)) tail_empty = false;
      if (star < horizon && tail_empty) {
        rr.verdict = StsVerdict::kExcusedFinite;
        rr.excuse_stage = star;
        rr.detail = std::string("candidate tail empty past s*=") + std::to_string(star) +
                    (shadowed ? " (shadowed)" : "");
      } else {
        rr.verdict = StsVerdict::kFailed;
        rr.detail = "unsatisfied with live candidate tail";
      }
    }
    report.requirements.push_back(std::move(rr));
  }

  // Thin-set bridge on a window: with h = to_stable_pairs(c as an
  // instantly-settling approximation), every color a 4-set avoids under h
  // must be avoided by c on the set minus its maximum.
  const Vertex window = std::min<Vertex>(horizon, 64);
  report.thin_bridge_window = window;
  report.thin_bridge_ok = true;
  if (window >= 4) {
    Delta2Approx capprox(window);
    for (Vertex a = 0; a < window; ++a)
      if (run.c[a] != 0) capprox.add_event(a, a, run.c[a]);
    FiniteColoring2 h = to_stable_pairs(capprox);
    for (Vertex a = 0; a + 3 < window && report.thin_bridge_ok; ++a)
      for (Vertex b = a + 1; b + 2 < window && report.thin_bridge_ok; ++b)
        for (Vertex cc = b + 1; cc + 1 < window && report.thin_bridge_ok; ++cc)
          for (Vertex d = cc + 1; d < window && report.thin_bridge_ok; ++d) {
            std::vector<bool> seen(h.palette(), false);
            const VertexList quad = {a, b, cc, d};
            for (std::size_t i = 0; i < 4; ++i)
              for (std::size_t j = i + 1; j < 4; ++j)
                seen[h.color(quad[i], quad[j])] = true;
            for (Color col = 0; col < h.palette(); ++col) {
              if (seen[col]) continue;
              bool avoided = run.c[a] != col && run.c[b] != col && run.c[cc] != col;
              if (!avoided) report.thin_bridge_ok = false;
            }
          }
  }
  return report;
}

}  // namespace finj
