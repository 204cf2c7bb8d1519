#include "finj/scenario.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace finj {

namespace {
constexpr std::array<const char*, 6> kEngineNames = {"sts",     "sads",     "sdnr",
                                                     "em-walk", "collapse", "cohesive"};
}

const char* engine_name(Engine e) { return kEngineNames[static_cast<std::size_t>(e)]; }

Engine engine_from(const std::string& name) {
  for (std::size_t i = 0; i < kEngineNames.size(); ++i)
    if (name == kEngineNames[i]) return static_cast<Engine>(i);
  throw std::runtime_error("scenario: unknown engine '" + name + "'");
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
  return out.str();
}

bool Scenario::has(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return true;
  return false;
}

std::string Scenario::get(const std::string& key, const std::string& fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

std::uint64_t Scenario::get_u64(const std::string& key, std::uint64_t fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return std::stoull(v);
  return fallback;
}

std::vector<std::string> Scenario::all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : params)
    if (k == key) out.push_back(v);
  return out;
}

std::string Scenario::canonical() const {
  std::ostringstream out;
  out << "finj-scenario v1\n";
  out << "engine " << engine_name(engine) << "\n";
  out << "horizon " << horizon << "\n";
  out << "seed " << seed << "\n";
  for (const auto& [k, v] : params) out << k << (v.empty() ? "" : " " + v) << "\n";
  return out.str();
}

std::string Scenario::digest() const { return fnv1a_hex(canonical()); }

Scenario load_scenario(std::istream& in) {
  Scenario sc;
  std::string line;
  std::size_t lineno = 0;
  bool header_ok = false, engine_ok = false, horizon_ok = false;
  while (std::getline(in, line)) {
    ++lineno;
    // trim
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line[0] == '#') continue;
    if (!header_ok) {
      if (line != "finj-scenario v1")
        throw std::runtime_error("scenario line " + std::to_string(lineno) +
                                 ": expected header 'finj-scenario v1'");
      header_ok = true;
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest[0] == ' ') rest = rest.substr(1);
    if (key == "engine") {
      sc.engine = engine_from(rest);
      engine_ok = true;
    } else if (key == "horizon") {
      try {
        sc.horizon = static_cast<std::uint32_t>(std::stoul(rest));
      } catch (const std::exception&) {
        throw std::runtime_error("scenario line " + std::to_string(lineno) +
                                 ": field 'horizon' needs a number");
      }
      horizon_ok = true;
    } else if (key == "seed") {
      sc.seed = std::stoull(rest);
    } else {
      sc.params.emplace_back(key, rest);
    }
  }
  if (!header_ok) throw std::runtime_error("scenario: missing header 'finj-scenario v1'");
  if (!engine_ok) throw std::runtime_error("scenario: missing field 'engine'");
  if (!horizon_ok) throw std::runtime_error("scenario: missing field 'horizon'");
  if (sc.horizon == 0) throw std::runtime_error("scenario: field 'horizon' must be positive");
  return sc;
}

Scenario load_scenario_text(const std::string& text) {
  std::istringstream in(text);
  return load_scenario(in);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("scenario: cannot open '" + path + "'");
  return load_scenario(in);
}

}  // namespace finj
