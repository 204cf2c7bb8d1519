#include "finj/trace.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace finj {

namespace {
constexpr std::array<const char*, 8> kNames = {
    "ACTIVATE", "SATISFY", "CLAIM", "RESTRAIN", "COMMIT", "INJURE", "UFLIP", "ASSIGN"};
}

const char* trace_event_name(TraceEvent e) {
  return kNames[static_cast<std::size_t>(e)];
}

TraceEvent trace_event_from(const std::string& name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<TraceEvent>(i);
  throw std::runtime_error("trace: unknown event '" + name + "'");
}

std::string TraceRecord::line() const {
  std::ostringstream out;
  out << stage << " | " << engine << " | " << trace_event_name(event) << " | " << payload;
  return out.str();
}

TraceRecord TraceRecord::parse(const std::string& line) {
  TraceRecord r;
  std::size_t p0 = line.find(" | ");
  if (p0 == std::string::npos) throw std::runtime_error("trace: malformed line '" + line + "'");
  std::size_t p1 = line.find(" | ", p0 + 3);
  if (p1 == std::string::npos) throw std::runtime_error("trace: malformed line '" + line + "'");
  std::size_t p2 = line.find(" | ", p1 + 3);
  if (p2 == std::string::npos) throw std::runtime_error("trace: malformed line '" + line + "'");
  r.stage = static_cast<std::uint32_t>(std::stoul(line.substr(0, p0)));
  r.engine = line.substr(p0 + 3, p1 - p0 - 3);
  r.event = trace_event_from(line.substr(p1 + 3, p2 - p1 - 3));
  r.payload = line.substr(p2 + 3);
  return r;
}

void PriorityTrace::add(std::uint32_t stage, TraceEvent event, std::string payload) {
  records_.push_back({stage, engine_, event, std::move(payload)});
}

std::uint64_t payload_value(const std::string& payload, const std::string& key) {
  std::istringstream in(payload);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind(key + "=", 0) == 0)
      return std::stoull(tok.substr(key.size() + 1));
  }
  throw std::runtime_error("trace: payload '" + payload + "' missing key " + key);
}

bool payload_has(const std::string& payload, const std::string& key) {
  std::istringstream in(payload);
  std::string tok;
  while (in >> tok)
    if (tok.rfind(key + "=", 0) == 0) return true;
  return false;
}

}  // namespace finj
