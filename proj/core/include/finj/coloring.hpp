#ifndef FINJ_COLORING_HPP
#define FINJ_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "finj/tournament.hpp"

namespace finj {

using Color = std::uint32_t;

/// Total coloring of pairs {x < y} below a horizon H with palette [0, k).
class FiniteColoring2 {
 public:
  FiniteColoring2() = default;
  FiniteColoring2(Vertex horizon, Color palette);

  Vertex horizon() const { return h_; }
  Color palette() const { return k_; }

  Color color(Vertex x, Vertex y) const;
  void set_color(Vertex x, Vertex y, Color c);

  /// "horizon <H> palette <k>" then one "x y color" triple per line.
  std::string serialize() const;
  static FiniteColoring2 deserialize(std::istream& in);

  bool operator==(const FiniteColoring2& o) const = default;

 private:
  std::size_t index(Vertex x, Vertex y) const;  // requires x < y

  Vertex h_ = 0;
  Color k_ = 1;
  std::vector<Color> table_;
};

FiniteColoring2 random_coloring2(Vertex horizon, Color palette, Rng& rng);

}  // namespace finj

#endif
