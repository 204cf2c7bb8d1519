#include "finj/em_condition.hpp"

#include <sstream>

namespace finj {

std::string EMCondition::summary() const {
  std::ostringstream out;
  out << "sigma=[";
  for (std::size_t i = 0; i < sigma.size(); ++i) out << (i ? " " : "") << sigma[i];
  out << "] |F|=" << core.size() << " |X|=" << reservoir.size();
  return out.str();
}

bool behavior_lex_less(BehaviorVector a, BehaviorVector b, std::size_t width) {
  for (std::size_t nu = 0; nu < width; ++nu) {
    bool ba = (a >> nu) & 1u, bb = (b >> nu) & 1u;
    if (ba != bb) return !ba;
  }
  return false;
}

EMCondition fresh_condition(Vertex n) {
  EMCondition c;
  c.reservoir.resize(n);
  for (Vertex i = 0; i < n; ++i) c.reservoir[i] = i;
  return c;
}

Tournament encode_set_tournament(const VertexList& x, Vertex n) {
  auto in = bits::from_elements(x, n);
  Tournament t(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      bool same_side = bits::test(in, a) == bits::test(in, b);
      if (same_side) t.set_edge(a, b);
      else t.set_edge(b, a);
    }
  return t;
}

}  // namespace finj
