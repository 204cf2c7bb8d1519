#include "finj/coloring.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace finj {

FiniteColoring2::FiniteColoring2(Vertex horizon, Color palette)
    : h_(horizon), k_(palette) {
  if (palette == 0) throw std::invalid_argument("coloring: empty palette");
  table_.assign(static_cast<std::size_t>(horizon) * (horizon ? horizon - 1 : 0) / 2, 0);
}

std::size_t FiniteColoring2::index(Vertex x, Vertex y) const {
  // pairs ordered by larger element then smaller: {0,1},{0,2},{1,2},{0,3},...
  return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
}

Color FiniteColoring2::color(Vertex x, Vertex y) const {
  if (x > y) std::swap(x, y);
  if (x == y || y >= h_)
    throw std::out_of_range("coloring: bad pair (" + std::to_string(x) + "," +
                            std::to_string(y) + ") below horizon " + std::to_string(h_));
  return table_[index(x, y)];
}

void FiniteColoring2::set_color(Vertex x, Vertex y, Color c) {
  if (x > y) std::swap(x, y);
  if (x == y || y >= h_)
    throw std::out_of_range("coloring: bad pair");
  if (c >= k_)
    throw std::invalid_argument("coloring: color " + std::to_string(c) +
                                " outside palette " + std::to_string(k_));
  table_[index(x, y)] = c;
}

std::string FiniteColoring2::serialize() const {
  std::ostringstream out;
  out << "coloring2 horizon " << h_ << " palette " << k_ << "\n";
  for (Vertex y = 1; y < h_; ++y)
    for (Vertex x = 0; x < y; ++x)
      out << x << " " << y << " " << table_[index(x, y)] << "\n";
  return out.str();
}

FiniteColoring2 FiniteColoring2::deserialize(std::istream& in) {
  std::string tag, hk, pk;
  Vertex h = 0;
  Color k = 0;
  if (!(in >> tag >> hk >> h >> pk >> k) || tag != "coloring2" || hk != "horizon" ||
      pk != "palette")
    throw std::runtime_error("coloring2: bad header");
  FiniteColoring2 f(h, k);
  for (Vertex y = 1; y < h; ++y)
    for (Vertex x = 0; x < y; ++x) {
      Vertex a, b;
      Color c;
      if (!(in >> a >> b >> c))
        throw std::runtime_error("coloring2: truncated table");
      f.set_color(a, b, c);
    }
  return f;
}

FiniteColoring2 random_coloring2(Vertex horizon, Color palette, Rng& rng) {
  FiniteColoring2 f(horizon, palette);
  for (Vertex y = 1; y < horizon; ++y)
    for (Vertex x = 0; x < y; ++x)
      f.set_color(x, y, static_cast<Color>(rng.below(palette)));
  return f;
}

}  // namespace finj
