#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace contuda {

using Rng = std::mt19937_64;

// FNV-1a, used both for seed derivation and as a cheap content checksum.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
  return fnv1a(s.data(), s.size(), seed);
}

// Derives an independent stream seed from (base, tag), so that e.g. data
// splitting, augmentation and weight init never share a stream.
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
  std::uint64_t h = fnv1a(tag);
  h ^= base + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline Rng make_rng(std::uint64_t base, const std::string& tag) {
  return Rng(derive_seed(base, tag));
}

}  // namespace contuda
