#include "finj/linear_order.hpp"

#include <stdexcept>

#include "finj/combinatorics.hpp"

namespace finj {

LinearOrderPrefix LinearOrderPrefix::checked(Tournament rel) {
  VertexList all(rel.size());
  for (Vertex i = 0; i < rel.size(); ++i) all[i] = i;
  if (!is_transitive(rel, all))
    throw std::invalid_argument("linear order: relation has a 3-cycle");
  return LinearOrderPrefix(std::move(rel));
}

LinearOrderPrefix LinearOrderPrefix::unchecked(Tournament rel) {
  return LinearOrderPrefix(std::move(rel));
}

LinearOrderPrefix split_order(Vertex n, const std::vector<bits::Word>& ascending_part) {
  Tournament rel(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      bool xin = bits::test(ascending_part, x);
      bool yin = bits::test(ascending_part, y);
      bool x_below = xin && !yin ? true : !xin && yin ? false : xin;  // both in: x<y wins
      if (!xin && !yin) x_below = false;  // descending block
      if (x_below) rel.set_edge(x, y); else rel.set_edge(y, x);
    }
  return LinearOrderPrefix::unchecked(std::move(rel));
}

}  // namespace finj
