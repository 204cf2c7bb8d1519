#ifndef FINJ_TRACE_HPP
#define FINJ_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace finj {

/// Stage-event record types shared by the engines. The payload is a
/// canonical "key=value" token list; bit-exact replayability of the
/// serialized form is part of the trace contract.
enum class TraceEvent : std::uint8_t {
  kActivate,
  kSatisfy,
  kClaim,
  kRestrain,
  kCommit,
  kInjure,
  kUflip,
  kAssign,
};

const char* trace_event_name(TraceEvent e);
TraceEvent trace_event_from(const std::string& name);

struct TraceRecord {
  std::uint32_t stage = 0;
  std::string engine;
  TraceEvent event = TraceEvent::kAssign;
  std::string payload;

  std::string line() const;  // "stage | engine | event | payload"
  static TraceRecord parse(const std::string& line);
  bool operator==(const TraceRecord&) const = default;
};

/// Append-only log of stage events; the audit trail every verifier
/// consumes.
class PriorityTrace {
 public:
  PriorityTrace() = default;
  explicit PriorityTrace(std::string engine) : engine_(std::move(engine)) {}

  const std::string& engine() const { return engine_; }

  void add(std::uint32_t stage, TraceEvent event, std::string payload);

  const std::vector<TraceRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

 private:
  std::string engine_;
  std::vector<TraceRecord> records_;
};

/// Reads "key=value" tokens out of a payload; throws on a missing key.
std::uint64_t payload_value(const std::string& payload, const std::string& key);
bool payload_has(const std::string& payload, const std::string& key);

}  // namespace finj

#endif
