#include "finj/set_family.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace finj {

void SetFamily::add(VertexList elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.back() >= n_)
    throw std::out_of_range("setfamily: element " + std::to_string(elements.back()) +
                            " outside universe " + std::to_string(n_));
  members_.push_back(std::move(elements));
}

std::vector<bits::Word> SetFamily::member_bits(std::size_t i) const {
  return bits::from_elements(members_.at(i), n_);
}

std::string SetFamily::serialize() const {
  std::ostringstream out;
  out << "setfamily " << n_ << " " << members_.size() << "\n";
  for (const auto& m : members_) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m[j];
    out << "\n";
  }
  return out.str();
}

SetFamily SetFamily::deserialize(std::istream& in) {
  std::string tag;
  Vertex n = 0;
  std::size_t k = 0;
  if (!(in >> tag >> n >> k) || tag != "setfamily")
    throw std::runtime_error("setfamily: bad header");
  in.ignore();
  SetFamily fam(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("setfamily: truncated");
    std::istringstream row(line);
    VertexList xs;
    Vertex x;
    while (row >> x) xs.push_back(x);
    fam.add(std::move(xs));
  }
  return fam;
}

}  // namespace finj
