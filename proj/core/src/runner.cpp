#include "finj/runner.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "finj/bridges.hpp"
#include "finj/collapse.hpp"
#include "finj/em_walk.hpp"
#include "finj/generators.hpp"
#include "finj/sads.hpp"
#include "finj/sdnr.hpp"
#include "finj/sts.hpp"

namespace finj {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// ---- input builders ------------------------------------------------------

CandidateFamily build_candidates(const Scenario& sc) {
  CandidateFamily z;
  Rng rng(sc.seed);
  for (const auto& [key, value] : sc.params) {
    if (key == "candidates") {
      auto toks = split_ws(value);
      if (toks.empty()) throw std::runtime_error("scenario: empty 'candidates' spec");
      if (toks[0] == "static-window") {
        if (toks.size() != 3) throw std::runtime_error("scenario: candidates static-window <count> <window>");
        std::uint32_t count = std::stoul(toks[1]);
        Vertex window = std::stoul(toks[2]);
        for (std::uint32_t i = 0; i < count; ++i)
          z.push_back(Candidate::fixed(gen_window_hitting(sc.horizon, window, rng), sc.horizon));
      } else if (toks[0] == "delta2") {
        if (toks.size() != 4) throw std::runtime_error("scenario: candidates delta2 <count> <flips> <settle>");
        std::uint32_t count = std::stoul(toks[1]);
        std::uint32_t flips = std::stoul(toks[2]);
        Stage settle = std::stoul(toks[3]);
        for (std::uint32_t i = 0; i < count; ++i)
          z.push_back(Candidate::approximated(gen_membership(sc.horizon, flips, settle, rng)));
      } else if (toks[0] == "delta2-decaying") {
        if (toks.size() != 4) throw std::runtime_error("scenario: candidates delta2-decaying <count> <flips> <settle>");
        std::uint32_t count = std::stoul(toks[1]);
        std::uint32_t flips = std::stoul(toks[2]);
        Stage settle = std::stoul(toks[3]);
        for (std::uint32_t i = 0; i + 1 < count; ++i)
          z.push_back(Candidate::approximated(
              gen_membership(sc.horizon, flips, sc.horizon / 4, rng)));
        z.push_back(Candidate::approximated(gen_decaying_membership(sc.horizon, settle, rng)));
      } else {
        throw std::runtime_error("scenario: unknown candidates kind '" + toks[0] + "'");
      }
    } else if (key == "candidate") {
      auto toks = split_ws(value);
      if (toks.empty()) throw std::runtime_error("scenario: empty 'candidate' line");
      if (toks[0] == "static") {
        VertexList xs;
        for (std::size_t i = 1; i < toks.size(); ++i) xs.push_back(std::stoul(toks[i]));
        for (Vertex x : xs)
          if (x >= sc.horizon)
            throw std::runtime_error("scenario: candidate element " + std::to_string(x) +
                                     " outside horizon");
        z.push_back(Candidate::fixed(std::move(xs), sc.horizon));
      } else if (toks[0] == "events") {
        Delta2Approx a(sc.horizon);
        for (std::size_t i = 1; i < toks.size(); ++i) {
          auto& t = toks[i];
          std::size_t c1 = t.find(':'), c2 = t.find(':', c1 + 1);
          if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("scenario: candidate event '" + t + "' not p:s:v");
          a.add_event(std::stoul(t.substr(0, c1)), std::stoul(t.substr(c1 + 1, c2 - c1 - 1)),
                      std::stoul(t.substr(c2 + 1)));
        }
        z.push_back(Candidate::approximated(std::move(a)));
      } else {
        throw std::runtime_error("scenario: unknown candidate kind '" + toks[0] + "'");
      }
    }
  }
  return z;
}

Delta2Approx build_oracle(const Scenario& sc) {
  Rng rng(sc.seed ^ 0x6f7261636c65ULL);  // distinct stream per input role
  std::string gen = sc.get("oracle");
  Delta2Approx d(sc.horizon);
  if (!gen.empty()) {
    auto toks = split_ws(gen);
    if (toks.size() != 3 || toks[0] != "gen")
      throw std::runtime_error("scenario: oracle gen <flips> <settle>");
    d = gen_membership(sc.horizon, std::stoul(toks[1]), std::stoul(toks[2]), rng);
  }
  for (const auto& line : sc.all("oracle-event")) {
    auto toks = split_ws(line);
    if (toks.size() != 3) throw std::runtime_error("scenario: oracle-event <p> <s> <v>");
    d.add_event(std::stoul(toks[0]), std::stoul(toks[1]), std::stoul(toks[2]));
  }
  return d;
}

EnumeratedSet build_enumeration(const Scenario& sc) {
  Rng rng(sc.seed ^ 0x656e756dULL);
  std::string gen = sc.get("enumeration");
  if (!gen.empty()) {
    auto toks = split_ws(gen);
    if (toks.size() != 2 || toks[0] != "gen")
      throw std::runtime_error("scenario: enumeration gen <lag>");
    return gen_enumeration(sc.horizon, std::stoul(toks[1]), rng);
  }
  EnumeratedSet es;
  std::vector<std::pair<Stage, Vertex>> entries;
  for (const auto& line : sc.all("enum-event")) {
    auto toks = split_ws(line);
    if (toks.size() != 2) throw std::runtime_error("scenario: enum-event <a> <s>");
    entries.emplace_back(std::stoul(toks[1]), std::stoul(toks[0]));
  }
  std::sort(entries.begin(), entries.end());
  for (auto& [s, a] : entries) es.add(a, s);
  return es;
}

std::vector<FunctionalTable> build_functionals(const Scenario& sc, const Delta2Approx& d,
                                               const char* genkey, const char* inlinekey) {
  Rng rng(sc.seed ^ 0x66756e63ULL);
  std::vector<FunctionalTable> fs;
  std::string gen = sc.get(genkey);
  if (!gen.empty()) {
    auto toks = split_ws(gen);
    if (toks.size() != 4 || toks[0] != "gen")
      throw std::runtime_error(std::string("scenario: ") + genkey + " gen <count> <cap> <spread>");
    fs = gen_functionals(std::stoul(toks[1]), std::stoul(toks[2]), std::stoul(toks[3]), d,
                         sc.horizon, rng);
  }
  for (const auto& line : sc.all(inlinekey)) {
    // e=<e> a=<a> prefix=<bits01|-> v=<val>
    std::uint64_t e = payload_value(line, "e");
    std::uint64_t a = payload_value(line, "a");
    std::uint64_t v = payload_value(line, "v");
    std::string prefix;
    for (auto& tok : split_ws(line))
      if (tok.rfind("prefix=", 0) == 0) prefix = tok.substr(7);
    if (prefix == "-") prefix.clear();
    while (fs.size() <= e) fs.emplace_back();
    fs[e].add(static_cast<Vertex>(a), OraclePrefix::from_string(prefix),
              static_cast<std::uint32_t>(v));
  }
  for (auto& f : fs) f.validate();
  return fs;
}

// ---- report assembly -----------------------------------------------------

void add_check(RunReport& r, const std::string& id, bool pass, const std::string& detail) {
  r.checks.push_back({id, pass, detail});
}

void add_counter(RunReport& r, const std::string& name, std::uint64_t v) {
  r.counters.emplace_back(name, v);
}

// ---- engines -------------------------------------------------------------

struct EngineOutput {
  RunReport report;
  std::vector<std::string> body;  // event block lines
};

EngineOutput run_sts_engine(const Scenario& sc) {
  CandidateFamily z = build_candidates(sc);
  Color colors = static_cast<Color>(sc.get_u64("colors", 2));
  StsRun run = run_sts(z, colors, sc.horizon);
  StsReport rep = verify_sts(run, z);

  EngineOutput out;
  add_check(out.report, "replay", rep.replay_consistent, "independent activation replay");
  add_check(out.report, "thin-bridge", rep.thin_bridge_ok,
            "window " + std::to_string(rep.thin_bridge_window));
  std::uint64_t satisfied = 0, excused = 0, failed = 0;
  for (const auto& rr : rep.requirements) {
    RunReport::Verdict v;
    v.name = "R(e=" + std::to_string(rr.e) + ",i=" + std::to_string(rr.i) + ")";
    v.trace_line = rr.trace_line == static_cast<std::size_t>(-1) ? 0 : rr.trace_line + 1;
    v.detail = rr.detail;
    switch (rr.verdict) {
      case StsVerdict::kSatisfied: v.status = "SATISFIED"; ++satisfied; break;
      case StsVerdict::kExcusedFinite: v.status = "EXCUSED"; ++excused; break;
      case StsVerdict::kFailed: v.status = "FAILED"; ++failed; break;
    }
    out.report.verdicts.push_back(std::move(v));
  }
  add_check(out.report, "requirements", failed == 0,
            std::to_string(satisfied) + " satisfied, " + std::to_string(excused) +
                " excused, " + std::to_string(failed) + " failed");
  std::uint64_t activations = 0, injures = 0;
  for (const auto& rec : run.trace.records()) {
    if (rec.event == TraceEvent::kActivate) ++activations;
    if (rec.event == TraceEvent::kInjure) ++injures;
  }
  add_counter(out.report, "stages", run.horizon);
  add_counter(out.report, "activations", activations);
  add_counter(out.report, "witness-losses", injures);
  for (const auto& rec : run.trace.records()) out.body.push_back(rec.line());
  return out;
}

EngineOutput run_sads_engine(const Scenario& sc) {
  CandidateFamily z = build_candidates(sc);
  SadsOptions opts;
  opts.strict_lt = sc.get("attention") == "strict-lt";
  SadsRun run = run_sads(z, sc.horizon, opts);
  SadsReport rep = verify_sads(run, z, opts);

  EngineOutput out;
  add_check(out.report, "replay", rep.replay_consistent, "engine rerun matches");
  add_check(out.report, "transitive", rep.order_transitive, "exhaustive triple scan");
  add_check(out.report, "flips-bounded", rep.flips_bounded, "flips <= claims touching");
  add_check(out.report, "followers", rep.followers_monotone, "pointers move downward only");
  for (const auto& cv : rep.candidates) {
    RunReport::Verdict v;
    v.name = "Z(" + std::to_string(cv.e) + ")";
    v.status = cv.ok ? (cv.tail >= rep.tail_threshold ? "TWO-SIDED" : "SHORT-TAIL") : "FAILED";
    v.detail = "tail " + std::to_string(cv.tail) + " past quiescence " +
               std::to_string(cv.quiescence) + (cv.hits_inside ? ", hits U" : "") +
               (cv.hits_outside ? ", hits complement" : "");
    out.report.verdicts.push_back(std::move(v));
  }
  bool cands_ok = true;
  for (const auto& cv : rep.candidates) cands_ok = cands_ok && cv.ok;
  add_check(out.report, "candidates", cands_ok,
            "two-sided intersection past quiescence (threshold " +
                std::to_string(rep.tail_threshold) + ")");
  add_counter(out.report, "stages", run.horizon);
  add_counter(out.report, "claims", run.claims.size());
  add_counter(out.report, "omega-part-bound", rep.omega_part_bound);
  for (const auto& rec : run.trace.records()) out.body.push_back(rec.line());
  return out;
}

EngineOutput run_sdnr_engine(const Scenario& sc) {
  Delta2Approx d = build_oracle(sc);
  EnumeratedSet en = build_enumeration(sc);
  std::vector<FunctionalTable> fs = build_functionals(sc, d, "functionals", "functional");
  SdnrRun run = run_sdnr(fs, d, en, sc.horizon);
  SdnrReport rep = verify_sdnr(run, fs, d, en);

  EngineOutput out;
  add_check(out.report, "active-agree", rep.divergent_released,
            "end-active restraints converge and agree");
  add_check(out.report, "flips-bounded", rep.flips_bounded, "flips <= 1 + injuries");
  add_check(out.report, "commits", rep.commits_realized, "committed values realized");
  bool strategies_ok = true;
  for (const auto& sv : rep.strategies) {
    RunReport::Verdict v;
    v.name = "R(" + std::to_string(sv.e) + ")";
    v.status = !sv.has_witness ? "NO-WITNESS" : sv.agrees ? "AGREES" : "FAILED";
    v.detail = sv.has_witness ? "agreement at a=" + std::to_string(sv.agree_at) : "";
    strategies_ok = strategies_ok && sv.ok;
    out.report.verdicts.push_back(std::move(v));
  }
  add_check(out.report, "strategies", strategies_ok, "every witnessed functional agrees");
  for (const auto& rc : rep.restraint_classes) {
    RunReport::Verdict v;
    v.name = "Z(e=" + std::to_string(rc.e) + ",a=" + std::to_string(rc.a) + ")";
    v.status = rc.cofinite_within_horizon ? "COFINITE" : "FINITE";
    v.detail = std::to_string(rc.stages) + " stages restrained";
    out.report.verdicts.push_back(std::move(v));
  }
  add_counter(out.report, "stages", run.horizon);
  add_counter(out.report, "injuries", run.injuries);
  add_counter(out.report, "restraint-spans", run.restraints.size());
  for (const auto& rec : run.trace.records()) out.body.push_back(rec.line());
  return out;
}

EngineOutput run_em_engine(const Scenario& sc) {
  auto tspec = split_ws(sc.get("tournaments"));
  if (tspec.size() != 2 || tspec[0] != "seeded")
    throw std::runtime_error("scenario: tournaments seeded <count>");
  std::size_t count = std::stoul(tspec[1]);
  std::vector<SeededTournament> ts;
  for (std::size_t i = 0; i < count; ++i)
    ts.emplace_back(sc.horizon, sc.seed ^ (0x746f75ULL + i * 0x9e3779b9ULL));
  WalkParams params;
  params.target = static_cast<std::uint32_t>(sc.get_u64("target", 8));
  params.chunk = static_cast<std::uint32_t>(sc.get_u64("chunk", 64));
  auto arrivals = split_ws(sc.get("arrivals"));
  for (auto& a : arrivals) params.arrivals.push_back(std::stoul(a));
  if (params.arrivals.empty()) params.arrivals.assign(count, 0);
  if (params.arrivals.size() != count)
    throw std::runtime_error("scenario: arrivals must list one step per tournament");

  WalkResult res = em_walk(ts, sc.horizon, params);

  EngineOutput out;
  add_check(out.report, "transitive", res.transitivity_checked,
            "core transitive past each offset");
  add_check(out.report, "target", res.target_reached,
            res.target_reached ? "core " + std::to_string(res.g.size())
                               : res.diagnostic);
  // condition validity of the final state
  auto viol = check_condition(res.final_condition, ts);
  add_check(out.report, "condition", !viol.has_value(),
            viol ? viol->what : "final condition valid");
  add_check(out.report, "beats", verify_beats(res.final_condition, ts),
            "core/reservoir dichotomy");
  add_counter(out.report, "steps", res.steps.size());
  add_counter(out.report, "core", res.g.size());
  add_counter(out.report, "reservoir", res.final_condition.reservoir.size());
  for (const auto& step : res.steps) out.body.push_back(step.line());
  std::ostringstream gline;
  gline << "final | G |";
  for (Vertex v : res.g) gline << " " << v;
  out.body.push_back(gline.str());
  std::ostringstream sline;
  sline << "final | sigma |";
  for (Vertex v : res.final_condition.sigma) sline << " " << v;
  out.body.push_back(sline.str());
  return out;
}

EngineOutput run_collapse_engine(const Scenario& sc) {
  Rng rng(sc.seed ^ 0x636f6cULL);
  auto [f, plan] = gen_settled_triples(sc.horizon, rng);
  f.validate();
  VertexList z(sc.horizon);
  for (Vertex i = 0; i < sc.horizon; ++i) z[i] = i;
  auto result = collapse_triples(f, z);

  EngineOutput out;
  if (std::holds_alternative<CollapseError>(result)) {
    const auto& err = std::get<CollapseError>(result);
    add_check(out.report, "settled", false,
              "unsettled pair (" + std::to_string(err.sigma.a) + "," +
                  std::to_string(err.sigma.b) + ")/(" + std::to_string(err.tau.a) + "," +
                  std::to_string(err.tau.b) + ")");
    return out;
  }
  const auto& col = std::get<CollapseResult>(result);
  add_check(out.report, "settled", true, "all collision sets settled on the tail");

  // 2-boundedness was enforced by collapse_triples; count it explicitly
  std::map<PairKey, std::uint32_t> uses;
  bool bounded = true;
  for (const auto& [sigma, v] : col.collapsed)
    if (++uses[v] > 2) bounded = false;
  add_check(out.report, "collapsed-2-bounded", bounded, "");

  // every rainbow of the collapsed coloring within the tail lifts
  bool lifts = true;
  const auto& tail = col.tail;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tail.size()); ++mask) {
    VertexList r;
    for (std::size_t i = 0; i < tail.size(); ++i)
      if ((mask >> i) & 1u) r.push_back(tail[i]);
    if (r.size() < 3) continue;
    if (is_collapsed_rainbow(col, r) && !is_rainbow(f, r)) lifts = false;
  }
  add_check(out.report, "rainbow-lift", lifts, "tail rainbows of the collapse are rainbows");
  add_counter(out.report, "pairs", col.collapsed.size());
  add_counter(out.report, "twins", plan.twins.size());
  add_counter(out.report, "tail", col.tail.size());
  for (const auto& [sigma, v] : col.collapsed) {
    std::ostringstream line;
    line << "pair | (" << sigma.a << "," << sigma.b << ") -> (" << v.a << "," << v.b << ")";
    out.body.push_back(line.str());
  }
  return out;
}

EngineOutput run_cohesive_engine(const Scenario& sc) {
  Delta2Approx d(sc.horizon);  // unused oracle slot for table generation
  EnumeratedSet en = build_enumeration(sc);
  std::vector<FunctionalTable> fs = build_functionals(sc, d, "tables", "table");
  SetFamily fam = canonical_cohesive_instance(fs, en, sc.horizon);
  CohesiveSearchResult res = find_cohesive(fam);
  auto verdicts = cohesive_report(res.set, fam);

  EngineOutput out;
  bool zero_exceptions = true;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    RunReport::Verdict v;
    v.name = "R(" + std::to_string(i) + ")";
    v.status = verdicts[i].side == CohesiveSide::kInside ? "INSIDE" : "OUTSIDE";
    v.detail = std::to_string(verdicts[i].exceptions) + " exceptions";
    if (verdicts[i].exceptions != 0) zero_exceptions = false;
    out.report.verdicts.push_back(std::move(v));
  }
  add_check(out.report, "zero-exceptions", zero_exceptions,
            "search output cohesive with no exceptions");
  add_counter(out.report, "members", fam.size());
  add_counter(out.report, "set-size", res.set.size());
  {
    std::ostringstream line;
    line << "cohesive | signs |";
    for (bool s : res.signs) line << " " << (s ? 1 : 0);
    out.body.push_back(line.str());
    std::ostringstream sline;
    sline << "cohesive | set |";
    for (Vertex v : res.set) sline << " " << v;
    out.body.push_back(sline.str());
  }
  return out;
}

EngineOutput run_engine(const Scenario& sc) {
  switch (sc.engine) {
    case Engine::kSts: return run_sts_engine(sc);
    case Engine::kSads: return run_sads_engine(sc);
    case Engine::kSdnr: return run_sdnr_engine(sc);
    case Engine::kEmWalk: return run_em_engine(sc);
    case Engine::kCollapse: return run_collapse_engine(sc);
    case Engine::kCohesive: return run_cohesive_engine(sc);
  }
  throw std::logic_error("run_engine: unreachable");
}

}  // namespace

bool RunReport::all_pass(bool strict) const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& v : verdicts) {
    if (v.status == "FAILED") return false;
    if (strict && v.status.find("UNDETERMINED") != std::string::npos) return false;
  }
  return true;
}

std::string RunReport::serialize() const {
  std::ostringstream out;
  out << "finj-report v1\n";
  out << "engine " << engine << "\n";
  out << "digest " << digest << "\n";
  out << "checks " << checks.size() << "\n";
  for (const auto& c : checks)
    out << c.id << " | " << (c.pass ? "PASS" : "FAIL") << " | " << c.detail << "\n";
  out << "verdicts " << verdicts.size() << "\n";
  for (const auto& v : verdicts)
    out << v.name << " | " << v.status << " | " << v.detail << " | line=" << v.trace_line
        << "\n";
  out << "counters " << counters.size() << "\n";
  for (const auto& [k, v] : counters) out << k << "=" << v << "\n";
  out << "end\n";
  return out.str();
}

RunReport RunReport::parse(const std::string& text) {
  std::istringstream in(text);
  RunReport r;
  std::string line;
  if (!std::getline(in, line) || line != "finj-report v1")
    throw std::runtime_error("report: bad header");
  std::string word;
  in >> word >> r.engine;
  in >> word >> r.digest;
  std::size_t n = 0;
  in >> word >> n;
  in.ignore();
  for (std::size_t i = 0; i < n; ++i) {
    std::getline(in, line);
    auto p1 = line.find(" | ");
    auto p2 = line.find(" | ", p1 + 3);
    r.checks.push_back(
        {line.substr(0, p1), line.substr(p1 + 3, p2 - p1 - 3) == "PASS", line.substr(p2 + 3)});
  }
  in >> word >> n;
  in.ignore();
  for (std::size_t i = 0; i < n; ++i) {
    std::getline(in, line);
    auto p1 = line.find(" | ");
    auto p2 = line.find(" | ", p1 + 3);
    auto p3 = line.rfind(" | line=");
    RunReport::Verdict v;
    v.name = line.substr(0, p1);
    v.status = line.substr(p1 + 3, p2 - p1 - 3);
    v.detail = line.substr(p2 + 3, p3 - p2 - 3);
    v.trace_line = std::stoul(line.substr(p3 + 8));
    r.verdicts.push_back(std::move(v));
  }
  in >> word >> n;
  in.ignore();
  for (std::size_t i = 0; i < n; ++i) {
    std::getline(in, line);
    auto eq = line.rfind('=');
    r.counters.emplace_back(line.substr(0, eq), std::stoull(line.substr(eq + 1)));
  }
  return r;
}

std::string RunReport::human_table() const {
  std::ostringstream out;
  out << "engine " << engine << "  digest " << digest << "\n";
  out << "-- checks --\n";
  for (const auto& c : checks)
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id
        << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  out << "-- verdicts --\n";
  for (const auto& v : verdicts)
    out << "  " << v.name << ": " << v.status
        << (v.detail.empty() ? "" : "  (" + v.detail + ")") << "\n";
  out << "-- counters --\n";
  for (const auto& [k, v] : counters) out << "  " << k << " = " << v << "\n";
  if (wall_ms > 0) out << "-- wall " << wall_ms << " ms (not persisted)\n";
  return out.str();
}

RunOutcome run_scenario(const Scenario& sc) {
  EngineOutput eo = run_engine(sc);
  eo.report.engine = engine_name(sc.engine);
  eo.report.digest = sc.digest();

  std::ostringstream trace;
  trace << "finj-trace v1\n";
  trace << "engine " << engine_name(sc.engine) << "\n";
  trace << "digest " << sc.digest() << "\n";
  std::string canon = sc.canonical();
  std::size_t scenario_lines = static_cast<std::size_t>(
      std::count(canon.begin(), canon.end(), '\n'));
  trace << "scenario-lines " << scenario_lines << "\n";
  trace << canon;
  trace << "events " << eo.body.size() << "\n";
  for (const auto& line : eo.body) trace << line << "\n";
  trace << "end\n";
  return {std::move(eo.report), trace.str()};
}

Scenario scenario_of_trace(const std::string& trace_text) {
  std::istringstream in(trace_text);
  std::string line;
  if (!std::getline(in, line) || line != "finj-trace v1")
    throw std::runtime_error("trace: bad header");
  std::string word, engine, digest;
  in >> word >> engine;
  if (word != "engine") throw std::runtime_error("trace: missing engine");
  in >> word >> digest;
  if (word != "digest") throw std::runtime_error("trace: missing digest");
  std::size_t scenario_lines = 0;
  in >> word >> scenario_lines;
  if (word != "scenario-lines") throw std::runtime_error("trace: missing scenario block");
  in.ignore();
  std::ostringstream scen;
  for (std::size_t i = 0; i < scenario_lines; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("trace: scenario block truncated");
    scen << line << "\n";
  }
  Scenario sc = load_scenario_text(scen.str());
  if (engine != engine_name(sc.engine))
    throw std::runtime_error("trace: engine mismatch (trace '" + engine + "', scenario '" +
                             engine_name(sc.engine) + "')");
  if (digest != sc.digest()) throw std::runtime_error("trace: digest mismatch");
  return sc;
}

RunReport replay_trace(const std::string& trace_text) {
  Scenario sc = scenario_of_trace(trace_text);

  // read the persisted event block
  std::istringstream in(trace_text);
  std::string line;
  std::size_t scenario_lines = 0;
  std::size_t declared = 0;
  // skip header: 4 lines + scenario block
  std::getline(in, line);
  for (int i = 0; i < 3; ++i) {
    std::getline(in, line);
    if (line.rfind("scenario-lines ", 0) == 0) scenario_lines = std::stoul(line.substr(15));
  }
  for (std::size_t i = 0; i < scenario_lines; ++i) std::getline(in, line);
  if (!std::getline(in, line) || line.rfind("events ", 0) != 0)
    throw std::runtime_error("trace: missing events header");
  declared = std::stoul(line.substr(7));
  std::vector<std::string> persisted;
  bool saw_end = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      saw_end = true;
      break;
    }
    persisted.push_back(line);
  }
  if (!saw_end || persisted.size() != declared) {
    std::string at = "line " + std::to_string(persisted.size() + 1);
    if (!persisted.empty()) {
      // name the first missing stage when the lines carry one
      const std::string& lastline = persisted.back();
      auto cut = lastline.find(' ');
      if (cut != std::string::npos) {
        try {
          at = "stage " + std::to_string(std::stoul(lastline.substr(0, cut)) + 1);
        } catch (const std::exception&) {
        }
      }
    }
    throw std::runtime_error("trace: truncated (expected " + std::to_string(declared) +
                             " events, found " + std::to_string(persisted.size()) +
                             "; first missing at " + at + ")");
  }

  EngineOutput eo = run_engine(sc);
  if (eo.body != persisted) {
    std::size_t at = 0;
    while (at < eo.body.size() && at < persisted.size() && eo.body[at] == persisted[at]) ++at;
    throw std::runtime_error("trace: event line " + std::to_string(at + 1) +
                             " does not replay");
  }
  eo.report.engine = engine_name(sc.engine);
  eo.report.digest = sc.digest();
  return eo.report;
}

}  // namespace finj
