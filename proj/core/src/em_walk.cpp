#include "finj/em_walk.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace finj {

std::string WalkStep::line() const {
  std::ostringstream out;
  out << step << " | " << op << " | ";
  for (std::size_t i = 0; i < sigma.size(); ++i) out << (i ? "," : "") << sigma[i];
  if (sigma.empty()) out << "-";
  out << " | " << core_size << " | " << reservoir_size << " | " << chosen;
  return out.str();
}

namespace {

void record(WalkResult& r, std::uint32_t step, const char* op, const EMCondition& c,
            BehaviorVector chosen) {
  WalkStep ws;
  ws.step = step;
  ws.op = op;
  ws.sigma = c.sigma;
  ws.core_size = static_cast<std::uint32_t>(c.core.size());
  ws.reservoir_size = static_cast<std::uint32_t>(c.reservoir.size());
  ws.chosen = chosen;
  r.steps.push_back(std::move(ws));
}

// floor(log_{2^k} n), 0 for n == 0
std::uint32_t floor_log(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) return 0;
  std::uint32_t b = static_cast<std::uint32_t>(std::bit_width(n)) - 1;
  return b / static_cast<std::uint32_t>(k);
}

}  // namespace

// Potential argument behind the reservoir guarantee: with k tournaments
// registered, a one-point step keeps |F| + floor(log_{2^k}|X|) from
// decreasing (largest of 2^k classes over |X|-1 points), and a block step
// is only accepted when its explicit gain/decay comparison does the same.
// A walk started with reservoir N and all registrations in place
// therefore ends with |G| >= floor(log_{2^k} N) unless the target stops
// it earlier.
template <TournamentLike T>
WalkResult em_walk(const std::vector<T>& ts, Vertex horizon, WalkParams params) {
  WalkResult result;
  EMCondition c = fresh_condition(horizon);
  std::uint32_t step = 0;
  std::size_t registered = 0;
  if (params.arrivals.size() != ts.size())
    throw std::invalid_argument("em_walk: need one arrival step per tournament");

  auto register_due = [&]() {
    while (registered < ts.size() && params.arrivals[registered] <= step &&
           !c.reservoir.empty()) {
      c = register_tournament(c, ts);
      ++registered;
      record(result, step, "register", c, 0);
    }
  };

  register_due();
  while (c.core.size() < params.target && c.reservoir.size() > 1) {
    ++step;
    register_due();
    const std::size_t k = c.sigma.size();

    // chunk small enough that the behavior-key space (2^k per element)
    // stays well under the reservoir
    std::uint32_t m = 1;
    if (k > 0) {
      while (m < params.chunk) {
        long double keys = 1;
        for (std::uint32_t i = 0; i < m + 1; ++i) keys *= static_cast<long double>(1u << k);
        if (keys * 16 > static_cast<long double>(c.reservoir.size())) break;
        ++m;
      }
    } else {
      m = std::min<std::uint32_t>(params.chunk,
                                  static_cast<std::uint32_t>(c.reservoir.size() - 1));
    }
    m = std::min<std::uint32_t>(m, static_cast<std::uint32_t>(c.reservoir.size() - 1));

    bool block_taken = false;
    if (m > 1) {
      VertexList block(c.reservoir.begin(), c.reservoir.begin() + m);
      BlockPartition part = block_partition(c, ts, block);
      std::size_t best = 0;
      for (std::size_t rho = 1; rho < part.block_classes.size(); ++rho)
        if (part.block_classes[rho].size() > part.block_classes[best].size() ||
            (part.block_classes[rho].size() == part.block_classes[best].size() &&
             behavior_lex_less(static_cast<BehaviorVector>(rho),
                               static_cast<BehaviorVector>(best), k)))
          best = rho;
      VertexList f1 = greedy_simultaneous_transitive(ts, k, part.block_classes[best]);
      bool keeps_potential =
          !f1.empty() &&
          f1.size() + floor_log(part.reservoir.size(), k) >=
              floor_log(c.reservoir.size(), k);
      if (keeps_potential) {
        c = block_extend_with<T>(c, part, f1);
        record(result, step, "block", c, static_cast<BehaviorVector>(best));
        block_taken = true;
      }
    }
    if (!block_taken) {
      ExtensionOutcome out = one_point_extend(c, ts, 1);
      c = std::move(out.condition);
      record(result, step, "point", c, out.chosen);
    }
  }

  result.final_condition = c;
  result.g = c.core;
  result.target_reached = c.core.size() >= params.target;
  if (!result.target_reached)
    result.diagnostic = "reservoir exhausted at core size " +
                        std::to_string(c.core.size()) + " (target " +
                        std::to_string(params.target) + ")";

  // recheck: the core above each offset is transitive per tournament
  result.transitivity_checked = true;
  for (std::size_t nu = 0; nu < c.sigma.size(); ++nu) {
    VertexList visible;
    for (Vertex v : c.core)
      if (v > c.sigma[nu]) visible.push_back(v);
    for (std::size_t i = 0; i < visible.size(); ++i)
      for (std::size_t j = i + 1; j < visible.size(); ++j)
        for (std::size_t l = j + 1; l < visible.size(); ++l) {
          Vertex u = visible[i], v = visible[j], w = visible[l];
          bool uv = ts[nu].beats(u, v), vw = ts[nu].beats(v, w), wu = ts[nu].beats(w, u);
          if ((uv && vw && wu) || (!uv && !vw && !wu)) result.transitivity_checked = false;
        }
  }
  return result;
}

template WalkResult em_walk<Tournament>(const std::vector<Tournament>&, Vertex, WalkParams);
template WalkResult em_walk<SeededTournament>(const std::vector<SeededTournament>&, Vertex,
                                              WalkParams);

}  // namespace finj
