#include "finj/collapse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <variant>

namespace finj {

namespace {

// least tau <=_lex sigma with f(sigma, s) = f(tau, s); sigma itself
// always qualifies
PairKey minimizer(const KBoundedColoring& f, PairKey sigma, Vertex s) {
  Color want = f.color3(sigma.a, sigma.b, s);
  for (Vertex ta = 0; ta <= sigma.a; ++ta)
    for (Vertex tb = ta + 1; tb < f.horizon(); ++tb) {
      PairKey tau{ta, tb};
      if (sigma < tau) break;
      if (ta == s || tb == s) continue;
      if (f.color3(ta, tb, s) == want) return tau;
    }
  return sigma;
}

}  // namespace

std::variant<CollapseResult, CollapseError> collapse_triples(const KBoundedColoring& f,
                                                             const VertexList& z) {
  if (f.arity() != 3) throw std::invalid_argument("collapse_triples: arity-3 input required");
  if (f.bound() != 2) throw std::invalid_argument("collapse_triples: 2-bounded input required");
  if (auto w = is_normal(f))
    throw std::invalid_argument("collapse_triples: input not normal");
  if (z.size() < 4) throw std::invalid_argument("collapse_triples: scan set too small");

  const std::size_t tail_len = (z.size() + 3) / 4;
  VertexList tail(z.end() - static_cast<std::ptrdiff_t>(tail_len), z.end());

  const Vertex h = f.horizon();
  // settledness of every collision set on the tail
  for (Vertex sa = 0; sa < h; ++sa)
    for (Vertex sb = sa + 1; sb < h; ++sb)
      for (Vertex ta = 0; ta < h; ++ta)
        for (Vertex tb = ta + 1; tb < h; ++tb) {
          PairKey sigma{sa, sb}, tau{ta, tb};
          if (!(tau < sigma)) continue;
          bool any_in = false, any_out = false;
          for (Vertex s : tail) {
            if (s == sa || s == sb || s == ta || s == tb) continue;
            bool collide = f.color3(sa, sb, s) == f.color3(ta, tb, s);
            (collide ? any_in : any_out) = true;
          }
          if (any_in && any_out) return CollapseError{sigma, tau};
        }

  CollapseResult out;
  out.tail = tail;
  for (Vertex sa = 0; sa < h; ++sa)
    for (Vertex sb = sa + 1; sb < h; ++sb) {
      PairKey sigma{sa, sb};
      std::optional<PairKey> value;
      for (Vertex s : tail) {
        if (s == sa || s == sb) continue;
        PairKey m = minimizer(f, sigma, s);
        if (!value) value = m;
        else if (*value != m) return CollapseError{sigma, m};
      }
      if (!value) value = sigma;  // tail entirely inside the pair; degenerate
      out.collapsed[sigma] = *value;
      out.witness[sigma] = *value;
    }

  // 2-boundedness of the collapsed coloring
  std::map<PairKey, std::uint32_t> uses;
  for (const auto& [sigma, v] : out.collapsed)
    if (++uses[v] > 2)
      throw std::runtime_error("collapse_triples: collapsed coloring exceeds 2-boundedness");
  return out;
}

bool is_collapsed_rainbow(const CollapseResult& c, const VertexList& r) {
  std::set<PairKey> seen;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      Vertex a = std::min(r[i], r[j]), b = std::max(r[i], r[j]);
      auto it = c.collapsed.find({a, b});
      if (it == c.collapsed.end()) return false;
      if (!seen.insert(it->second).second) return false;
    }
  return true;
}

}  // namespace finj
