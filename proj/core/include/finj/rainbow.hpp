#ifndef FINJ_RAINBOW_HPP
#define FINJ_RAINBOW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finj/coloring.hpp"

namespace finj {

/// Coloring of n-subsets (n = 2 or 3) of [0, H) in which every color has
/// at most `bound` preimages. Boundedness is validated on load.
class KBoundedColoring {
 public:
  KBoundedColoring() = default;
  KBoundedColoring(std::uint32_t arity, Vertex horizon, std::uint32_t bound);

  std::uint32_t arity() const { return arity_; }
  Vertex horizon() const { return h_; }
  std::uint32_t bound() const { return bound_; }

  Color color2(Vertex x, Vertex y) const;
  Color color3(Vertex x, Vertex y, Vertex z) const;
  void set_color2(Vertex x, Vertex y, Color c);
  void set_color3(Vertex x, Vertex y, Vertex z, Color c);

  /// Checks every color has at most `bound` preimages; returns an
  /// offending color otherwise.
  std::optional<Color> boundedness_violation() const;
  void validate() const;  // throws on violation

  /// Triples serialized as "x y z color" lines, pairs as "x y color".
  std::string serialize() const;
  static KBoundedColoring deserialize(std::istream& in);

 private:
  std::size_t index2(Vertex x, Vertex y) const;
  std::size_t index3(Vertex x, Vertex y, Vertex z) const;

  std::uint32_t arity_ = 2;
  Vertex h_ = 0;
  std::uint32_t bound_ = 2;
  std::vector<Color> table_;
};

/// No two distinct n-subsets of r share a color.
bool is_rainbow(const KBoundedColoring& f, const VertexList& r);

enum class RainbowStability : std::uint8_t {
  kPaired,        // a fixed partner collides on the whole tail window
  kLone,          // no collision anywhere in the tail window
  kUndetermined,  // neither pattern holds at this horizon
};

struct RainbowStableVerdict {
  RainbowStability kind = RainbowStability::kUndetermined;
  Vertex partner = 0;  // set for kPaired
};

/// Per-point tail classification of a 2-bounded pair coloring: does x
/// share its color with one fixed partner at every tail stage, with
/// nobody, or neither.
std::vector<RainbowStableVerdict> classify_rainbow_stable(const KBoundedColoring& f,
                                                          Vertex tail);

struct NormalityWitness {
  VertexList first, second;  // two tuples with equal color, last coords differ
};

/// Colors collide only at equal last coordinate.
std::optional<NormalityWitness> is_normal(const KBoundedColoring& f);

/// Ascending inclusion-greedy subset on which f stays normal.
VertexList greedy_normal_subset(const KBoundedColoring& f);

}  // namespace finj

#endif
