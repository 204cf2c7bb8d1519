#include "finj/tournament.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace finj {

Tournament::Tournament(Vertex n) : n_(n) {
  rows_.assign(n, std::vector<bits::Word>(bits::words_for(n), 0));
  for (Vertex y = 1; y < n; ++y)
    for (Vertex x = 0; x < y; ++x)
      bits::set(rows_[y], x);
}

void Tournament::set_edge(Vertex x, Vertex y) {
  check_vertex(x, "set_edge");
  check_vertex(y, "set_edge");
  if (x == y) throw std::invalid_argument("set_edge: loop on vertex " + std::to_string(x));
  bits::set(rows_[x], y);
  bits::clear(rows_[y], x);
}

bool Tournament::well_formed() const {
  for (Vertex x = 0; x < n_; ++x) {
    if (bits::test(rows_[x], x)) return false;
    for (Vertex y = x + 1; y < n_; ++y)
      if (bits::test(rows_[x], y) == bits::test(rows_[y], x)) return false;
  }
  return true;
}

void Tournament::check_vertex(Vertex x, const char* who) const {
  if (x >= n_)
    throw std::out_of_range(std::string(who) + ": vertex " + std::to_string(x) +
                            " out of range [0," + std::to_string(n_) + ")");
}

std::string Tournament::serialize() const {
  std::ostringstream out;
  out << "tournament " << n_ << "\n";
  const std::uint32_t digits = (n_ + 3) / 4;
  for (Vertex x = 0; x < n_; ++x) {
    std::string line(digits, '0');
    for (Vertex y = 0; y < n_; ++y) {
      if (!bits::test(rows_[x], y)) continue;
      // digit index from the right end: nibble y/4, bit y%4
      std::uint32_t d = digits - 1 - y / 4;
      std::uint32_t v = line[d] <= '9' ? line[d] - '0' : line[d] - 'a' + 10;
      v |= 1u << (y % 4);
      line[d] = v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
    }
    out << line << "\n";
  }
  return out.str();
}

Tournament Tournament::deserialize(std::istream& in) {
  std::string tag;
  Vertex n = 0;
  if (!(in >> tag >> n) || tag != "tournament")
    throw std::runtime_error("tournament: bad header");
  std::vector<std::vector<bool>> bit(n, std::vector<bool>(n, false));
  const std::uint32_t digits = (n + 3) / 4;
  for (Vertex x = 0; x < n; ++x) {
    std::string line;
    if (!(in >> line) || line.size() != digits)
      throw std::runtime_error("tournament: bad row " + std::to_string(x));
    for (Vertex y = 0; y < n; ++y) {
      char c = line[digits - 1 - y / 4];
      std::uint32_t v = c <= '9' ? c - '0' : c - 'a' + 10;
      bit[x][y] = (v >> (y % 4)) & 1u;
    }
  }
  Tournament t(n);
  for (Vertex x = 0; x < n; ++x) {
    if (bit[x][x]) throw std::runtime_error("tournament: loop in row " + std::to_string(x));
    for (Vertex y = x + 1; y < n; ++y) {
      if (bit[x][y] == bit[y][x])
        throw std::runtime_error("tournament: pair (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") not oriented exactly once");
      if (bit[x][y]) t.set_edge(x, y); else t.set_edge(y, x);
    }
  }
  return t;
}

Tournament random_tournament(Vertex n, Rng& rng) {
  Tournament t(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (rng.coin()) t.set_edge(x, y); else t.set_edge(y, x);
  return t;
}

Tournament ascending_tournament(Vertex n) {
  Tournament t(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      t.set_edge(x, y);
  return t;
}

}  // namespace finj
