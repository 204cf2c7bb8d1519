#include "finj/rainbow.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace finj {

KBoundedColoring::KBoundedColoring(std::uint32_t arity, Vertex horizon, std::uint32_t bound)
    : arity_(arity), h_(horizon), bound_(bound) {
  if (arity != 2 && arity != 3)
    throw std::invalid_argument("kbounded: arity must be 2 or 3");
  if (bound == 0) throw std::invalid_argument("kbounded: bound must be positive");
  std::size_t n = horizon;
  std::size_t cells = arity == 2 ? n * (n ? n - 1 : 0) / 2
                                 : n * (n ? n - 1 : 0) * (n >= 2 ? n - 2 : 0) / 6;
  table_.assign(cells, 0);
}

std::size_t KBoundedColoring::index2(Vertex x, Vertex y) const {
  return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
}

std::size_t KBoundedColoring::index3(Vertex x, Vertex y, Vertex z) const {
  auto c2 = [](std::size_t n) { return n * (n - 1) / 2; };
  auto c3 = [](std::size_t n) { return n * (n - 1) * (n - 2) / 6; };
  return c3(z) + c2(y) + x;
}

Color KBoundedColoring::color2(Vertex x, Vertex y) const {
  if (arity_ != 2) throw std::logic_error("kbounded: color2 on arity-3 coloring");
  if (x > y) std::swap(x, y);
  if (x == y || y >= h_) throw std::out_of_range("kbounded: bad pair");
  return table_[index2(x, y)];
}

Color KBoundedColoring::color3(Vertex x, Vertex y, Vertex z) const {
  if (arity_ != 3) throw std::logic_error("kbounded: color3 on arity-2 coloring");
  Vertex v[3] = {x, y, z};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2] || v[2] >= h_)
    throw std::out_of_range("kbounded: bad triple");
  return table_[index3(v[0], v[1], v[2])];
}

void KBoundedColoring::set_color2(Vertex x, Vertex y, Color c) {
  if (arity_ != 2) throw std::logic_error("kbounded: set_color2 on arity-3 coloring");
  if (x > y) std::swap(x, y);
  if (x == y || y >= h_) throw std::out_of_range("kbounded: bad pair");
  table_[index2(x, y)] = c;
}

void KBoundedColoring::set_color3(Vertex x, Vertex y, Vertex z, Color c) {
  if (arity_ != 3) throw std::logic_error("kbounded: set_color3 on arity-2 coloring");
  Vertex v[3] = {x, y, z};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2] || v[2] >= h_)
    throw std::out_of_range("kbounded: bad triple");
  table_[index3(v[0], v[1], v[2])] = c;
}

std::optional<Color> KBoundedColoring::boundedness_violation() const {
  std::unordered_map<Color, std::uint32_t> uses;
  for (Color c : table_)
    if (++uses[c] > bound_) return c;
  return std::nullopt;
}

void KBoundedColoring::validate() const {
  if (auto c = boundedness_violation())
    throw std::invalid_argument("kbounded: color " + std::to_string(*c) + " used more than " +
                                std::to_string(bound_) + " times");
}

std::string KBoundedColoring::serialize() const {
  std::ostringstream out;
  out << "kbounded arity " << arity_ << " horizon " << h_ << " bound " << bound_ << "\n";
  if (arity_ == 2) {
    for (Vertex y = 1; y < h_; ++y)
      for (Vertex x = 0; x < y; ++x)
        out << x << " " << y << " " << table_[index2(x, y)] << "\n";
  } else {
    for (Vertex z = 2; z < h_; ++z)
      for (Vertex y = 1; y < z; ++y)
        for (Vertex x = 0; x < y; ++x)
          out << x << " " << y << " " << z << " " << table_[index3(x, y, z)] << "\n";
  }
  return out.str();
}

KBoundedColoring KBoundedColoring::deserialize(std::istream& in) {
  std::string tag, ak, hk, bk;
  std::uint32_t arity = 0, bound = 0;
  Vertex h = 0;
  if (!(in >> tag >> ak >> arity >> hk >> h >> bk >> bound) || tag != "kbounded" ||
      ak != "arity" || hk != "horizon" || bk != "bound")
    throw std::runtime_error("kbounded: bad header");
  KBoundedColoring f(arity, h, bound);
  if (arity == 2) {
    for (Vertex y = 1; y < h; ++y)
      for (Vertex x = 0; x < y; ++x) {
        Vertex a, b;
        Color c;
        if (!(in >> a >> b >> c)) throw std::runtime_error("kbounded: truncated");
        f.set_color2(a, b, c);
      }
  } else {
    for (Vertex z = 2; z < h; ++z)
      for (Vertex y = 1; y < z; ++y)
        for (Vertex x = 0; x < y; ++x) {
          Vertex a, b, cc;
          Color c;
          if (!(in >> a >> b >> cc >> c)) throw std::runtime_error("kbounded: truncated");
          f.set_color3(a, b, cc, c);
        }
  }
  f.validate();
  return f;
}

bool is_rainbow(const KBoundedColoring& f, const VertexList& r) {
  if (r.size() < f.arity()) return true;
  std::unordered_set<Color> seen;
  if (f.arity() == 2) {
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j)
        if (!seen.insert(f.color2(r[i], r[j])).second) return false;
  } else {
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j)
        for (std::size_t k = j + 1; k < r.size(); ++k)
          if (!seen.insert(f.color3(r[i], r[j], r[k])).second) return false;
  }
  return true;
}

std::vector<RainbowStableVerdict> classify_rainbow_stable(const KBoundedColoring& f,
                                                          Vertex tail) {
  if (f.arity() != 2) throw std::invalid_argument("classify_rainbow_stable: arity 2 only");
  if (f.bound() != 2) throw std::invalid_argument("classify_rainbow_stable: 2-bounded only");
  const Vertex h = f.horizon();
  if (tail == 0 || tail > h) throw std::invalid_argument("classify_rainbow_stable: bad tail");
  const Vertex lo = h - tail;
  std::vector<RainbowStableVerdict> out(h);
  // 2-boundedness makes the stage collision partner unique: the other
  // preimage of f(x,s) must itself contain s to collide at stage s.
  auto partner_at = [&](Vertex x, Vertex s) -> std::optional<Vertex> {
    for (Vertex y = 0; y < h; ++y) {
      if (y == x || y == s) continue;
      if (f.color2(x, s) == f.color2(y, s)) return y;
    }
    return std::nullopt;
  };
  for (Vertex x = 0; x < h; ++x) {
    std::optional<Vertex> candidate;
    for (Vertex s = lo; s < h && !candidate; ++s) {
      if (s == x) continue;
      candidate = partner_at(x, s);
    }
    if (!candidate) {
      out[x].kind = RainbowStability::kLone;
      continue;
    }
    bool paired = true;
    for (Vertex s = lo; s < h && paired; ++s) {
      if (s == x || s == *candidate) continue;
      paired = f.color2(x, s) == f.color2(*candidate, s);
    }
    if (paired) {
      out[x].kind = RainbowStability::kPaired;
      out[x].partner = *candidate;
    } else {
      out[x].kind = RainbowStability::kUndetermined;
    }
  }
  return out;
}

std::optional<NormalityWitness> is_normal(const KBoundedColoring& f) {
  // collision classes per color; normal iff each class has one last coord
  std::map<Color, VertexList> last_of;  // color -> tuple (first seen)
  const Vertex h = f.horizon();
  if (f.arity() == 2) {
    std::map<Color, std::pair<Vertex, Vertex>> seen;
    for (Vertex y = 1; y < h; ++y)
      for (Vertex x = 0; x < y; ++x) {
        Color c = f.color2(x, y);
        auto it = seen.find(c);
        if (it == seen.end()) seen[c] = {x, y};
        else if (it->second.second != y)
          return NormalityWitness{{it->second.first, it->second.second}, {x, y}};
      }
    return std::nullopt;
  }
  std::map<Color, std::array<Vertex, 3>> seen;
  for (Vertex z = 2; z < h; ++z)
    for (Vertex y = 1; y < z; ++y)
      for (Vertex x = 0; x < y; ++x) {
        Color c = f.color3(x, y, z);
        auto it = seen.find(c);
        if (it == seen.end()) seen[c] = {x, y, z};
        else if (it->second[2] != z)
          return NormalityWitness{{it->second[0], it->second[1], it->second[2]}, {x, y, z}};
      }
  return std::nullopt;
}

VertexList greedy_normal_subset(const KBoundedColoring& f) {
  if (f.bound() > 2)
    throw std::invalid_argument("greedy_normal_subset: 2-bounded colorings only");
  VertexList kept;
  // color -> last coordinate within the kept set
  std::map<Color, Vertex> last_coord;
  const Vertex h = f.horizon();
  for (Vertex p = 0; p < h; ++p) {
    std::vector<std::pair<Color, Vertex>> added;
    bool ok = true;
    if (f.arity() == 2) {
      for (std::size_t i = 0; i < kept.size() && ok; ++i) {
        Color c = f.color2(kept[i], p);
        Vertex last = p;  // p is the max, every kept element is below it
        auto it = last_coord.find(c);
        if (it != last_coord.end() && it->second != last) ok = false;
        else added.emplace_back(c, last);
      }
    } else {
      for (std::size_t i = 0; i < kept.size() && ok; ++i)
        for (std::size_t j = i + 1; j < kept.size() && ok; ++j) {
          Color c = f.color3(kept[i], kept[j], p);
          Vertex last = p;
          auto it = last_coord.find(c);
          if (it != last_coord.end() && it->second != last) ok = false;
          else added.emplace_back(c, last);
        }
    }
    // also the tuples added now must not collide among themselves at
    // different last coords; they all end at p, so they cannot
    if (ok) {
      kept.push_back(p);
      for (auto& [c, last] : added) last_coord.emplace(c, last);
    }
  }
  return kept;
}

}  // namespace finj
