#ifndef FANFORGE_COMMON_HPP
#define FANFORGE_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanforge {

// Ground sets are indexed 0..n-1 and subsets are bitmasks.
// Everything in this library assumes n <= kMaxElements.
using Subset = std::uint32_t;

inline constexpr int kMaxElements = 24;

// Thrown when the caller hands us something malformed: unknown labels,
// out-of-range parameters, files that do not parse.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when inputs are well-formed but violate a structural
// precondition (disconnected graph, non-modular flat, ...).
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a configured resource ceiling is exceeded. Callers must
// treat this as "undecided", never as a negative result.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline int popcount(Subset x) { return std::popcount(x); }

inline Subset bit(int i) { return Subset{1} << i; }

inline bool contains(Subset set, int i) { return (set >> i) & 1u; }

inline int lowest_bit(Subset x) { return std::countr_zero(x); }

// Elements of `set`, lowest index first.
inline std::vector<int> set_elements(Subset set) {
  std::vector<int> out;
  while (set != 0) {
    int i = lowest_bit(set);
    out.push_back(i);
    set &= set - 1;
  }
  return out;
}

inline Subset subset_from(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= bit(e);
  return s;
}

// 64-bit FNV-1a; used for content hashes that must be stable across runs.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t hash_bytes(const void* data, std::size_t len,
                                std::uint64_t seed = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fanforge

#endif  // FANFORGE_COMMON_HPP
