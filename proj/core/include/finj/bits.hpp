#ifndef FINJ_BITS_HPP
#define FINJ_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace finj {

/// Word-packed bit vectors used for vertex sets and tournament rows.
/// All operations assume both operands were sized for the same universe.
namespace bits {

using Word = std::uint64_t;
constexpr std::uint32_t kWordBits = 64;

inline std::size_t words_for(std::uint32_t n) {
  return (static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits;
}

inline bool test(const std::vector<Word>& w, std::uint32_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set(std::vector<Word>& w, std::uint32_t i) {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void clear(std::vector<Word>& w, std::uint32_t i) {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline void assign(std::vector<Word>& w, std::uint32_t i, bool v) {
  if (v) set(w, i); else clear(w, i);
}

inline std::uint32_t count(const std::vector<Word>& w) {
  std::uint32_t c = 0;
  for (Word x : w) c += static_cast<std::uint32_t>(std::popcount(x));
  return c;
}

/// a ⊆ b
inline bool subset_of(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool intersects(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// Sets bits in [lo, hi] (inclusive). Caller guarantees hi < universe size.
inline void set_range(std::vector<Word>& w, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t i = lo; i <= hi; ++i) set(w, i);
}

inline void clear_range(std::vector<Word>& w, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t i = lo; i <= hi; ++i) clear(w, i);
}

inline std::vector<std::uint32_t> to_elements(const std::vector<Word>& w,
                                              std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (test(w, i)) out.push_back(i);
  return out;
}

inline std::vector<Word> from_elements(const std::vector<std::uint32_t>& xs,
                                       std::uint32_t n) {
  std::vector<Word> w(words_for(n), 0);
  for (auto x : xs) set(w, x);
  return w;
}

}  // namespace bits

/// Deterministic splitmix64 generator. The standard <random> engines are
/// avoided for anything that reaches persisted traces: distribution output
/// must be identical across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  bool coin() { return next() & 1u; }

  /// Stateless hash for lazily-defined structures (edge oracles).
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1) + 0xc2b2ae3d27d4eb4fULL * (c + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace finj

#endif
