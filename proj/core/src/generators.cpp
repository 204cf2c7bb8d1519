#include "finj/generators.hpp"

#include <algorithm>
#include <set>

#include "finj/linear_order.hpp"

namespace finj {

std::pair<Tournament, StableTournamentPlan> gen_stable_tournament(Vertex n, Rng& rng) {
  StableTournamentPlan plan;
  plan.side.resize(n);
  plan.settle.resize(n);
  for (Vertex x = 0; x < n; ++x) {
    plan.side[x] = rng.coin();
    plan.settle[x] = static_cast<Vertex>(rng.below(std::max<Vertex>(n / 2, 1)));
  }
  Tournament t(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      bool x_beats;
      if (y >= plan.settle[x]) x_beats = plan.side[x];
      else x_beats = rng.coin();
      if (x_beats) t.set_edge(x, y);
      else t.set_edge(y, x);
    }
  return {std::move(t), std::move(plan)};
}

Delta2Approx gen_membership(Vertex horizon, std::uint32_t max_flips, Stage settle_bound,
                            Rng& rng) {
  Delta2Approx a(horizon);
  settle_bound = std::min<Stage>(settle_bound, horizon);
  for (Vertex p = 0; p < horizon; ++p) {
    std::uint32_t flips = static_cast<std::uint32_t>(rng.below(max_flips + 1));
    if (flips == 0) continue;
    std::set<Stage> stages;
    while (stages.size() < flips && stages.size() < settle_bound - 1)
      stages.insert(static_cast<Stage>(1 + rng.below(settle_bound - 1)));
    std::uint32_t v = 1;
    for (Stage s : stages) {
      a.add_event(p, s, v);
      v = 1 - v;
    }
  }
  return a;
}

Delta2Approx gen_decaying_membership(Vertex horizon, Stage settle_bound, Rng& rng) {
  Delta2Approx a(horizon);
  const Stage lo = std::max<Stage>(horizon / 4, 2);
  settle_bound = std::max<Stage>(std::min<Stage>(settle_bound, horizon), lo + 1);
  for (Vertex p = 0; p < horizon; ++p) {
    if (rng.below(4) == 0) continue;  // a quarter never join
    a.add_event(p, 1, 1);
    a.add_event(p, static_cast<Stage>(lo + rng.below(settle_bound - lo)), 0);
  }
  return a;
}

VertexList gen_window_hitting(Vertex horizon, Vertex window, Rng& rng) {
  VertexList out;
  for (Vertex base = 0; base < horizon; base += window) {
    Vertex span = std::min<Vertex>(window, horizon - base);
    out.push_back(base + static_cast<Vertex>(rng.below(span)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KBoundedColoring gen_2bounded_pairs(Vertex horizon, Rng& rng) {
  KBoundedColoring f(2, horizon, 2);
  Color next = 0;
  std::vector<Color> once_used;  // colors used exactly once so far
  for (Vertex y = 1; y < horizon; ++y)
    for (Vertex x = 0; x < y; ++x) {
      if (!once_used.empty() && rng.coin()) {
        std::size_t at = rng.below(once_used.size());
        f.set_color2(x, y, once_used[at]);
        once_used[at] = once_used.back();
        once_used.pop_back();
      } else {
        f.set_color2(x, y, next);
        once_used.push_back(next);
        ++next;
      }
    }
  return f;
}

std::pair<KBoundedColoring, RainbowStablePlan> gen_rainbow_stable(Vertex horizon, Rng& rng) {
  RainbowStablePlan plan;
  plan.partner.assign(horizon, -1);
  plan.threshold = horizon / 2;
  // random partial matching
  VertexList pool(horizon);
  for (Vertex i = 0; i < horizon; ++i) pool[i] = i;
  for (Vertex i = 0; i < horizon; ++i) std::swap(pool[i], pool[rng.below(horizon)]);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
    if (rng.coin()) continue;  // both lone
    plan.partner[pool[i]] = pool[i + 1];
    plan.partner[pool[i + 1]] = pool[i];
  }
  KBoundedColoring f(2, horizon, 2);
  Color next = 0;
  // pair {x, s}: in the stable zone partners mirror each other, lone
  // points take fresh colors; below the threshold everything is fresh
  // except an occasional harmless pairing
  for (Vertex s = 1; s < horizon; ++s) {
    std::vector<std::int64_t> assigned(s, -1);
    for (Vertex x = 0; x < s; ++x) {
      if (assigned[x] >= 0) {
        f.set_color2(x, s, static_cast<Color>(assigned[x]));
        continue;
      }
      std::int64_t p = plan.partner[x];
      bool stable_zone = s >= plan.threshold;
      if (stable_zone && p >= 0 && p < s && p != s && assigned[p] < 0) {
        f.set_color2(x, s, next);
        assigned[p] = next;
        ++next;
      } else {
        f.set_color2(x, s, next);
        ++next;
      }
    }
  }
  return {std::move(f), std::move(plan)};
}

std::pair<KBoundedColoring, SettledCollapsePlan> gen_settled_triples(Vertex horizon,
                                                                     Rng& rng) {
  SettledCollapsePlan plan;
  // partial matching on pairs; twins collide at every scan point
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex b = 1; b < horizon; ++b)
    for (Vertex a = 0; a < b; ++a) pairs.emplace_back(a, b);
  // twins confined below horizon/2, so every scan-tail point sees the
  // collision and the instance settles
  std::vector<std::int64_t> twin(pairs.size(), -1);
  const Vertex twin_cap = horizon / 2;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (twin[i] >= 0 || pairs[i].second >= twin_cap || rng.below(4) != 0) continue;
    for (std::size_t tries = 0; tries < 8; ++tries) {
      std::size_t j = rng.below(pairs.size());
      if (j == i || twin[j] >= 0 || pairs[j].second >= twin_cap) continue;
      auto [a1, b1] = pairs[i];
      auto [a2, b2] = pairs[j];
      if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
      twin[i] = static_cast<std::int64_t>(j);
      twin[j] = static_cast<std::int64_t>(i);
      plan.twins.emplace_back(pairs[i], pairs[j]);
      break;
    }
  }
  KBoundedColoring f(3, horizon, 2);
  Color next = 0;
  // triple {x, y, s} with s the maximum: twins {x,y} ~ {u,v} share the
  // color when all four avoid s; everything else is fresh
  for (Vertex s = 2; s < horizon; ++s) {
    std::vector<std::vector<std::int64_t>> assigned(s, std::vector<std::int64_t>(s, -1));
    for (Vertex y = 1; y < s; ++y)
      for (Vertex x = 0; x < y; ++x) {
        if (assigned[x][y] >= 0) {
          f.set_color3(x, y, s, static_cast<Color>(assigned[x][y]));
          continue;
        }
        std::size_t idx = static_cast<std::size_t>(y) * (y - 1) / 2 + x;
        std::int64_t tw = twin[idx];
        if (tw >= 0) {
          auto [u, v] = pairs[static_cast<std::size_t>(tw)];
          if (v < s && u != s && v != s) {
            f.set_color3(x, y, s, next);
            assigned[u][v] = next;
            ++next;
            continue;
          }
        }
        f.set_color3(x, y, s, next);
        ++next;
      }
  }
  return {std::move(f), std::move(plan)};
}

std::vector<FunctionalTable> gen_functionals(std::size_t count, Vertex cap,
                                             std::uint32_t spread, const Delta2Approx& d,
                                             Vertex horizon, Rng& rng) {
  std::vector<FunctionalTable> out(count);
  const Stage last = horizon - 1;
  // strategies own disjoint inputs (a mod count), one entry per input, so
  // a vacated point is only ever retaken by its own strategy
  for (std::size_t e = 0; e < count; ++e) {
    for (Vertex a = static_cast<Vertex>(e); a < cap; ++a) {
      if (a % count != e) continue;
      if (rng.below(3) == 0) continue;  // leave some inputs divergent
      std::uint32_t use = a + static_cast<std::uint32_t>(rng.below(spread + 1));
      std::string prefix;
      bool guess_final = rng.coin();
      for (std::uint32_t i = 0; i < use; ++i) {
        std::uint32_t bit;
        if (guess_final)
          bit = i < d.horizon() ? d.value_at(i, last) : 0;
        else
          bit = i < d.horizon() ? d.value_at(i, 0) : 0;
        prefix.push_back(bit ? '1' : '0');
      }
      out[e].add(a, OraclePrefix::from_string(prefix),
                 static_cast<std::uint32_t>(1 + rng.below(9)));
    }
    out[e].validate();
  }
  return out;
}

EnumeratedSet gen_enumeration(Vertex horizon, std::uint32_t lag, Rng& rng) {
  EnumeratedSet es;
  // enumerate in stage order; element a enters at a stage in (a, a+lag]
  std::vector<std::pair<Stage, Vertex>> entries;
  for (Vertex a = 0; a < horizon; ++a) {
    if (rng.coin()) continue;
    Stage s = static_cast<Stage>(a + 1 + rng.below(lag));
    if (s >= horizon) continue;
    entries.emplace_back(s, a);
  }
  std::sort(entries.begin(), entries.end());
  for (auto& [s, a] : entries) es.add(a, s);
  return es;
}

LinearOrderPrefix gen_split_order(Vertex n, Rng& rng) {
  std::vector<bits::Word> part(bits::words_for(n), 0);
  for (Vertex i = 0; i < n; ++i)
    if (rng.coin()) bits::set(part, i);
  return split_order(n, part);
}

}  // namespace finj
