#include "finj/limit_approx.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace finj {

const std::vector<Delta2Approx::Event> Delta2Approx::kNoEvents;

void Delta2Approx::add_event(Vertex point, Stage stage, std::uint32_t value) {
  if (point >= h_ || stage >= h_)
    throw std::out_of_range("approx: event (" + std::to_string(point) + "," +
                            std::to_string(stage) + ") outside horizon " +
                            std::to_string(h_));
  if (per_point_.size() <= point) per_point_.resize(point + 1);
  auto& evs = per_point_[point];
  std::uint32_t prev_value = evs.empty() ? 0 : evs.back().value;
  if (!evs.empty() && evs.back().stage >= stage)
    throw std::invalid_argument("approx: stages not increasing at point " +
                                std::to_string(point));
  if (value == prev_value)
    throw std::invalid_argument("approx: event repeats value at point " +
                                std::to_string(point));
  evs.push_back({point, stage, value});
}

std::uint32_t Delta2Approx::value_at(Vertex x, Stage s) const {
  if (s >= h_) throw std::out_of_range("approx: stage " + std::to_string(s) +
                                       " outside horizon " + std::to_string(h_));
  if (x >= per_point_.size()) return 0;
  std::uint32_t v = 0;
  for (const auto& e : per_point_[x]) {
    if (e.stage > s) break;
    v = e.value;
  }
  return v;
}

std::pair<std::uint32_t, Stage> Delta2Approx::limit_report(Vertex x) const {
  if (x >= per_point_.size() || per_point_[x].empty()) return {0, 0};
  const auto& last = per_point_[x].back();
  return {last.value, last.stage};
}

std::uint32_t Delta2Approx::flip_count(Vertex x) const {
  return x < per_point_.size() ? static_cast<std::uint32_t>(per_point_[x].size()) : 0;
}

std::uint32_t Delta2Approx::max_value() const {
  std::uint32_t m = 0;
  for (const auto& evs : per_point_)
    for (const auto& e : evs) m = std::max(m, e.value);
  return m;
}

std::vector<Delta2Approx::Event> Delta2Approx::events_at_stage(Stage s) const {
  std::vector<Event> out;
  for (const auto& evs : per_point_)
    for (const auto& e : evs)
      if (e.stage == s) out.push_back(e);
  return out;
}

const std::vector<Delta2Approx::Event>& Delta2Approx::events(Vertex x) const {
  return x < per_point_.size() ? per_point_[x] : kNoEvents;
}

std::string Delta2Approx::serialize() const {
  std::size_t count = 0;
  for (const auto& evs : per_point_) count += evs.size();
  std::ostringstream out;
  out << "approx " << h_ << " " << count << "\n";
  for (const auto& evs : per_point_)
    for (const auto& e : evs)
      out << e.point << " " << e.stage << " " << e.value << "\n";
  return out.str();
}

Delta2Approx Delta2Approx::deserialize(std::istream& in) {
  std::string tag;
  Vertex h = 0;
  std::size_t count = 0;
  if (!(in >> tag >> h >> count) || tag != "approx")
    throw std::runtime_error("approx: bad header");
  Delta2Approx a(h);
  for (std::size_t i = 0; i < count; ++i) {
    Vertex p;
    Stage s;
    std::uint32_t v;
    if (!(in >> p >> s >> v)) throw std::runtime_error("approx: truncated events");
    a.add_event(p, s, v);
  }
  return a;
}

FiniteColoring2 to_stable_pairs(const Delta2Approx& c) {
  FiniteColoring2 h(c.horizon(), c.max_value() + 1);
  for (Vertex s = 1; s < c.horizon(); ++s)
    for (Vertex x = 0; x < s; ++x)
      h.set_color(x, s, c.value_at(x, s));
  return h;
}

std::pair<Delta2Approx, StabilityReport> from_stable_pairs(const FiniteColoring2& h,
                                                           Stage tail) {
  const Vertex horizon = h.horizon();
  if (tail >= horizon) throw std::invalid_argument("from_stable_pairs: tail >= horizon");
  Delta2Approx rec(horizon);
  StabilityReport report;
  for (Vertex x = 0; x + 1 < horizon; ++x) {
    std::uint32_t v = h.color(x, x + 1);
    if (v != 0) rec.add_event(x, 0, v);
    for (Vertex s = x + 2; s < horizon; ++s) {
      std::uint32_t w = h.color(x, s);
      if (w != v) {
        rec.add_event(x, s, w);
        v = w;
      }
    }
    bool stable = true;
    Vertex lo = std::max<Vertex>(x + 1, horizon - tail);
    for (Vertex s = lo; s < horizon; ++s)
      if (h.color(x, s) != h.color(x, horizon - 1)) stable = false;
    if (!stable) report.unstable.push_back(x);
  }
  return {std::move(rec), std::move(report)};
}

void EnumeratedSet::add(Vertex element, Stage stage) {
  if (!entries_.empty() && entries_.back().second > stage)
    throw std::invalid_argument("enumset: stages must be nondecreasing");
  for (const auto& [e, s] : entries_)
    if (e == element)
      throw std::invalid_argument("enumset: element " + std::to_string(element) +
                                  " enumerated twice");
  entries_.emplace_back(element, stage);
}

std::optional<Stage> EnumeratedSet::theta(Vertex x, Stage s) const {
  for (const auto& [e, t] : entries_) {
    if (t > s) break;
    if (e == x) return t;
  }
  return std::nullopt;
}

std::string EnumeratedSet::serialize() const {
  std::ostringstream out;
  out << "enumset " << entries_.size() << "\n";
  for (const auto& [e, s] : entries_) out << e << " " << s << "\n";
  return out.str();
}

EnumeratedSet EnumeratedSet::deserialize(std::istream& in) {
  std::string tag;
  std::size_t count = 0;
  if (!(in >> tag >> count) || tag != "enumset")
    throw std::runtime_error("enumset: bad header");
  EnumeratedSet es;
  for (std::size_t i = 0; i < count; ++i) {
    Vertex e;
    Stage s;
    if (!(in >> e >> s)) throw std::runtime_error("enumset: truncated");
    es.add(e, s);
  }
  return es;
}

DoubleLimitApprox::DoubleLimitApprox(Vertex horizon, Stage layers) : h_(horizon) {
  layers_.assign(layers, Delta2Approx(horizon));
}

std::pair<std::uint32_t, Stage> DoubleLimitApprox::outer_limit(Vertex m) const {
  if (layers_.empty()) return {0, 0};
  std::uint32_t v = layers_.back().limit_report(m).first;
  Stage settled = 0;
  for (Stage t = static_cast<Stage>(layers_.size()); t-- > 0;) {
    if (layers_[t].limit_report(m).first != v) {
      settled = t + 1;
      break;
    }
  }
  return {v, settled};
}

std::uint32_t DoubleLimitApprox::layer_changes(Vertex m) const {
  std::uint32_t c = 0;
  for (Stage t = 1; t < layers_.size(); ++t)
    if (layers_[t].limit_report(m).first != layers_[t - 1].limit_report(m).first) ++c;
  return c;
}

}  // namespace finj
