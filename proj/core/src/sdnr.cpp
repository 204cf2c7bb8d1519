#include "finj/sdnr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace finj {

OraclePrefix OraclePrefix::from_string(const std::string& bits01) {
  OraclePrefix p;
  p.length = static_cast<std::uint32_t>(bits01.size());
  p.data.assign(bits::words_for(p.length), 0);
  for (std::uint32_t i = 0; i < p.length; ++i) {
    if (bits01[i] == '1') bits::set(p.data, i);
    else if (bits01[i] != '0')
      throw std::invalid_argument("prefix: expected 0/1, got '" + bits01 + "'");
  }
  return p;
}

std::string OraclePrefix::to_string() const {
  std::string s(length, '0');
  for (std::uint32_t i = 0; i < length; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

bool OraclePrefix::comparable(const OraclePrefix& o) const {
  const OraclePrefix& shorter = length <= o.length ? *this : o;
  const OraclePrefix& longer = length <= o.length ? o : *this;
  for (std::uint32_t i = 0; i < shorter.length; ++i)
    if (shorter.bit(i) != longer.bit(i)) return false;
  return true;
}

void FunctionalTable::add(Vertex input, OraclePrefix prefix, std::uint32_t value) {
  auto it = std::lower_bound(inputs_.begin(), inputs_.end(), input);
  std::size_t at = static_cast<std::size_t>(it - inputs_.begin());
  if (it == inputs_.end() || *it != input) {
    inputs_.insert(it, input);
    entries_.insert(entries_.begin() + at, std::vector<Entry>{});
  }
  entries_[at].push_back({std::move(prefix), value});
}

void FunctionalTable::validate() const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    for (const auto& en : entries_[i])
      if (en.prefix.length < inputs_[i])
        throw std::invalid_argument(
            "functional: use " + std::to_string(en.prefix.length) + " below input " +
            std::to_string(inputs_[i]));
    for (std::size_t a = 0; a < entries_[i].size(); ++a)
      for (std::size_t b = a + 1; b < entries_[i].size(); ++b) {
        const auto& ea = entries_[i][a];
        const auto& eb = entries_[i][b];
        if (ea.prefix.comparable(eb.prefix) && ea.value != eb.value)
          throw std::invalid_argument("functional: inconsistent entries on input " +
                                      std::to_string(inputs_[i]));
      }
  }
}

std::optional<FunctionalTable::Application> FunctionalTable::apply(
    Vertex input, const std::vector<bits::Word>& oracle, std::uint32_t max_use) const {
  auto it = std::lower_bound(inputs_.begin(), inputs_.end(), input);
  if (it == inputs_.end() || *it != input) return std::nullopt;
  const auto& entries = entries_[static_cast<std::size_t>(it - inputs_.begin())];
  const Entry* best = nullptr;
  for (const auto& en : entries) {
    if (en.prefix.length > max_use) continue;
    bool match = true;
    for (std::uint32_t i = 0; i < en.prefix.length && match; ++i)
      if (en.prefix.bit(i) != bits::test(oracle, i)) match = false;
    if (match && (!best || en.prefix.length < best->prefix.length)) best = &en;
  }
  if (!best) return std::nullopt;
  return Application{best->value, best->prefix.length, best->prefix};
}

namespace {

struct StrategyState {
  bool active = false;
  Vertex point = 0;
  std::uint32_t value = 0;
  OraclePrefix matched;
  std::optional<Stage> theta_then;
  Stage since = 0;
};

}  // namespace

SdnrRun run_sdnr(const std::vector<FunctionalTable>& functionals, const Delta2Approx& d,
                 const EnumeratedSet& e, Vertex horizon) {
  if (horizon < 1) throw std::invalid_argument("run_sdnr: horizon must be >= 1");
  for (const auto& f : functionals) f.validate();

  SdnrRun run;
  run.horizon = horizon;
  run.trace = PriorityTrace("sdnr");
  run.f_history = Delta2Approx(horizon);

  // oracle approximation as a growing bit array; events per stage
  std::vector<std::vector<Delta2Approx::Event>> d_buckets(horizon);
  for (Vertex x = 0; x < d.horizon(); ++x)
    for (const auto& ev : d.events(x))
      if (ev.stage < horizon) d_buckets[ev.stage].push_back(ev);
  std::vector<bits::Word> oracle(bits::words_for(std::max(horizon, d.horizon())), 0);
  for (Vertex x = 0; x < d.horizon(); ++x)
    if (d.value_at(x, 0) == 1) bits::set(oracle, x);

  std::vector<StrategyState> strat(functionals.size());
  std::vector<std::uint32_t> f_now(horizon, 0);

  auto set_f = [&](Vertex a, std::uint32_t v, Stage s) {
    if (f_now[a] == v) return;
    f_now[a] = v;
    run.f_history.add_event(a, s, v);
  };

  auto release = [&](std::size_t ei, Stage s, const char* reason) {
    auto& st = strat[ei];
    run.restraints.push_back({static_cast<std::uint32_t>(ei), st.point, st.since, s, st.value});
    run.trace.add(s, TraceEvent::kInjure,
                  "e=" + std::to_string(ei) + " a=" + std::to_string(st.point) +
                      " reason=" + reason);
    ++run.injuries;
    st.active = false;
  };

  for (Stage s = 0; s < horizon; ++s) {
    for (const auto& ev : d_buckets[s]) bits::assign(oracle, ev.point, ev.value == 1);

    for (std::size_t ei = 0; ei < strat.size(); ++ei) {
      auto& st = strat[ei];
      if (st.active) {
        // injury checks: same point restrained higher, matched prefix
        // drifted, or settling time changed
        bool higher_took = false;
        for (std::size_t hj = 0; hj < ei && !higher_took; ++hj)
          higher_took = strat[hj].active && strat[hj].point == st.point;
        if (higher_took) {
          release(ei, s, "higher");
        } else {
          auto app = functionals[ei].apply(st.point, oracle, s);
          if (!app || app->matched != st.matched) release(ei, s, "use");
          else if (e.theta(st.point, s) != st.theta_then) release(ei, s, "theta");
        }
      }
      if (!st.active) {
        // seek the least a >= e unrestrained by higher priority with the
        // functional converging and use below the settling time
        for (Vertex a : functionals[ei].inputs()) {
          if (a < ei || a >= horizon) continue;
          bool taken = false;
          for (std::size_t hj = 0; hj < ei && !taken; ++hj)
            taken = strat[hj].active && strat[hj].point == a;
          if (taken) continue;
          auto app = functionals[ei].apply(a, oracle, s);
          if (!app) continue;
          auto th = e.theta(a, s);
          if (!th || app->use >= *th) continue;
          st.active = true;
          st.point = a;
          st.value = app->value;
          st.matched = app->matched;
          st.theta_then = th;
          st.since = s;
          run.trace.add(s, TraceEvent::kRestrain,
                        "e=" + std::to_string(ei) + " a=" + std::to_string(a));
          run.trace.add(s, TraceEvent::kCommit,
                        "e=" + std::to_string(ei) + " a=" + std::to_string(a) +
                            " v=" + std::to_string(app->value));
          break;
        }
      }
    }

    // end of stage: committed points carry their values, the rest 0
    std::vector<bool> committed(horizon, false);
    for (const auto& st : strat)
      if (st.active) {
        set_f(st.point, st.value, s);
        committed[st.point] = true;
      }
    for (Vertex y = 0; y < horizon; ++y)
      if (!committed[y]) set_f(y, 0, s);
  }

  for (std::size_t ei = 0; ei < strat.size(); ++ei)
    if (strat[ei].active)
      run.restraints.push_back(
          {static_cast<std::uint32_t>(ei), strat[ei].point, strat[ei].since, horizon,
           strat[ei].value});

  run.final_f = f_now;
  for (Vertex y = 0; y < horizon; ++y)
    if (f_now[y] != 0)
      run.trace.add(horizon - 1, TraceEvent::kAssign,
                    "a=" + std::to_string(y) + " f=" + std::to_string(f_now[y]));
  return run;
}

bool SdnrReport::all_ok() const {
  if (!divergent_released || !flips_bounded || !commits_realized) return false;
  for (const auto& s : strategies)
    if (!s.ok) return false;
  return true;
}

SdnrReport verify_sdnr(const SdnrRun& run, const std::vector<FunctionalTable>& functionals,
                       const Delta2Approx& d, const EnumeratedSet& e) {
  SdnrReport report;
  const Vertex horizon = run.horizon;
  const Stage last = horizon ? horizon - 1 : 0;

  std::vector<bits::Word> final_oracle(bits::words_for(std::max(horizon, d.horizon())), 0);
  for (Vertex x = 0; x < d.horizon(); ++x)
    if (d.value_at(x, last) == 1) bits::set(final_oracle, x);

  // (1) strategy verdicts: a witness is an enumerated point with settling
  // time past the use of a converging application on the final oracle
  for (std::size_t ei = 0; ei < functionals.size(); ++ei) {
    SdnrReport::StrategyVerdict v;
    v.e = static_cast<std::uint32_t>(ei);
    for (Vertex a : functionals[ei].inputs()) {
      if (a < ei || a >= horizon) continue;
      auto app = functionals[ei].apply(a, final_oracle, last);
      if (!app) continue;
      auto th = e.theta(a, last);
      if (!th || app->use >= *th) continue;
      v.has_witness = true;
      if (run.final_f[a] == app->value) {
        v.agrees = true;
        v.agree_at = a;
        break;
      }
    }
    v.ok = !v.has_witness || v.agrees;
    report.strategies.push_back(v);
  }

  // (2) restraint-stage classification per (e, a): cofinite within the
  // horizon iff a span reaches the last stage; a class active at the end
  // must still converge with a valid witness and agree with f there
  {
    report.divergent_released = true;
    std::vector<SdnrReport::RestraintClass> classes;
    for (const auto& span : run.restraints) {
      bool found = false;
      for (auto& c : classes)
        if (c.e == span.e && c.a == span.a) {
          c.stages += span.to - span.from;
          c.cofinite_within_horizon |= span.to >= horizon;
          found = true;
        }
      if (!found)
        classes.push_back({span.e, span.a, span.to >= horizon, span.to - span.from});
    }
    for (const auto& c : classes) {
      if (!c.cofinite_within_horizon) continue;
      auto app = functionals[c.e].apply(c.a, final_oracle, last);
      auto th = e.theta(c.a, last);
      if (!app || !th || app->use >= *th) report.divergent_released = false;
      else if (run.final_f[c.a] != app->value) report.divergent_released = false;
    }
    report.restraint_classes = std::move(classes);
  }

  // (3) per-point flips bounded by 1 + injuries touching the point
  {
    report.flips_bounded = true;
    std::vector<std::uint32_t> injuries_at(horizon, 0);
    for (const auto& rec : run.trace.records())
      if (rec.event == TraceEvent::kInjure) {
        Vertex a = static_cast<Vertex>(payload_value(rec.payload, "a"));
        if (a < horizon) ++injuries_at[a];
      }
    for (Vertex y = 0; y < horizon; ++y)
      if (run.f_history.flip_count(y) > 1 + injuries_at[y]) report.flips_bounded = false;
  }

  // (4) committed values appear verbatim in f during the whole span
  {
    report.commits_realized = true;
    for (const auto& span : run.restraints) {
      Stage hi = std::min<Stage>(span.to, horizon);
      for (Stage s = span.from; s < hi; ++s)
        if (run.f_history.value_at(span.a, s) != span.value) {
          report.commits_realized = false;
          break;
        }
    }
  }
  return report;
}

}  // namespace finj
