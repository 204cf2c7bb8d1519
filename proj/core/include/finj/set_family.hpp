#ifndef FINJ_SET_FAMILY_HPP
#define FINJ_SET_FAMILY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "finj/tournament.hpp"

namespace finj {

/// Finite list of subsets R_0..R_{k-1} of [0, N).
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(Vertex universe) : n_(universe) {}

  Vertex universe() const { return n_; }
  std::size_t size() const { return members_.size(); }

  /// Elements must lie in [0, universe); stored sorted and deduplicated.
  void add(VertexList elements);

  const VertexList& member(std::size_t i) const { return members_.at(i); }
  std::vector<bits::Word> member_bits(std::size_t i) const;

  /// "setfamily <N> <k>" then one line of sorted elements per member.
  std::string serialize() const;
  static SetFamily deserialize(std::istream& in);

 private:
  Vertex n_ = 0;
  std::vector<VertexList> members_;
};

}  // namespace finj

#endif
