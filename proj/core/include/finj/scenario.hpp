#ifndef FINJ_SCENARIO_HPP
#define FINJ_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace finj {

enum class Engine : std::uint8_t { kSts, kSads, kSdnr, kEmWalk, kCollapse, kCohesive };

const char* engine_name(Engine e);
Engine engine_from(const std::string& name);

/// Structured-text scenario: a versioned header line, then "key value..."
/// lines shared across engines with an engine discriminator. Keys may
/// repeat (inline inputs). Comments (#) and blank lines are dropped by
/// the canonical form; the digest is computed over it.
struct Scenario {
  Engine engine = Engine::kSts;
  std::uint32_t horizon = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;  // file order

  bool has(const std::string& key) const;
  /// First value of the key, or the fallback.
  std::string get(const std::string& key, const std::string& fallback = "") const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<std::string> all(const std::string& key) const;

  /// Canonical serialization: header, engine, horizon, seed, then params
  /// in file order, one per line, single-space separated.
  std::string canonical() const;
  std::string digest() const;  // 16 hex digits over the canonical form
};

/// Parses and validates. Unknown engines, missing horizon and malformed
/// inline inputs are errors naming the field or line.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

std::string fnv1a_hex(const std::string& data);

}  // namespace finj

#endif
