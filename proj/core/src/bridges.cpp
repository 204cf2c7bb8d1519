#include "finj/bridges.hpp"

#include <stdexcept>

namespace finj {

Tournament coloring_to_tournament(const FiniteColoring2& f) {
  if (f.palette() != 2)
    throw std::invalid_argument("coloring_to_tournament: palette must be exactly 2");
  Tournament t(f.horizon());
  for (Vertex y = 1; y < f.horizon(); ++y)
    for (Vertex x = 0; x < y; ++x) {
      if (f.color(x, y) == 1) t.set_edge(x, y);
      else t.set_edge(y, x);
    }
  return t;
}

FiniteColoring2 tournament_to_coloring(const Tournament& t) {
  FiniteColoring2 f(t.size(), 2);
  for (Vertex y = 1; y < t.size(); ++y)
    for (Vertex x = 0; x < y; ++x)
      f.set_color(x, y, t.beats(x, y) ? 1 : 0);
  return f;
}

SetFamily canonical_cohesive_instance(const std::vector<FunctionalTable>& tables,
                                      const EnumeratedSet& e, Vertex horizon) {
  SetFamily fam(horizon);
  for (std::size_t idx = 0; idx < tables.size(); ++idx) {
    tables[idx].validate();
    VertexList r;
    for (Vertex s = 0; s < horizon; ++s) {
      // oracle: characteristic bits of the enumerated-by-s set
      std::vector<bits::Word> oracle(bits::words_for(horizon), 0);
      for (const auto& [el, st] : e.entries()) {
        if (st > s) break;
        if (el < horizon) bits::set(oracle, el);
      }
      auto app = tables[idx].apply(static_cast<Vertex>(idx), oracle, s);
      if (app && app->value == 1) r.push_back(s);
    }
    fam.add(std::move(r));
  }
  return fam;
}

CohesiveSearchResult find_cohesive(const SetFamily& family) {
  const std::size_t k = family.size();
  if (k > 20) throw std::invalid_argument("find_cohesive: family too large (max 20)");
  const Vertex n = family.universe();
  std::vector<std::vector<bits::Word>> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = family.member_bits(i);

  std::vector<bool> best_signs(k, false);
  std::vector<bits::Word> best(bits::words_for(n), 0);
  std::uint32_t best_count = 0;
  bool first = true;

  std::vector<bool> signs(k, false);
  const std::size_t total = std::size_t{1} << k;
  for (std::size_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < k; ++i) signs[i] = (mask >> i) & 1u;
    std::vector<bits::Word> cur(bits::words_for(n), ~bits::Word{0});
    if (n % bits::kWordBits)
      cur.back() = (bits::Word{1} << (n % bits::kWordBits)) - 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t w = 0; w < cur.size(); ++w)
        cur[w] &= signs[i] ? ~members[i][w] : members[i][w];
    if (n % bits::kWordBits)
      cur.back() &= (bits::Word{1} << (n % bits::kWordBits)) - 1;
    std::uint32_t count = bits::count(cur);
    bool better = count > best_count;
    if (!better && count == best_count && !first) {
      // lexicographic on the sign sequence, member side first
      for (std::size_t i = 0; i < k; ++i) {
        if (signs[i] != best_signs[i]) {
          better = !signs[i];
          break;
        }
      }
    }
    if (first || better) {
      best_signs = signs;
      best = cur;
      best_count = count;
      first = false;
    }
  }
  return {bits::to_elements(best, n), best_signs};
}

std::vector<std::uint32_t> diagonal_escape(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i] + 1;
  return g;
}

}  // namespace finj
