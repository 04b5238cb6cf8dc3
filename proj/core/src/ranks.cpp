#include "zdst/ranks.hpp"

#include <bit>

namespace zdst {

const char* to_string(RankPolicy p) {
  switch (p) {
    case RankPolicy::random_store:
      return "random_store";
    case RankPolicy::hash_store:
      return "hash_store";
    case RankPolicy::hash_recompute:
      return "hash_recompute";
  }
  return "?";
}

Rank random_rank(std::mt19937_64& rng) {
  std::uint64_t word = rng();
  while (word == 0) word = rng();
  return static_cast<Rank>(std::countr_zero(word));
}

Rank hash_rank(std::uint64_t key_bits, std::uint64_t multiplier) {
  const std::uint64_t product = key_bits * multiplier;
  if (product == 0) return 0;
  return static_cast<Rank>(std::countr_zero(product));
}

std::uint64_t draw_multiplier(std::uint64_t seed) {
  std::mt19937_64 g(seed ^ 0x5bd1e995u);
  return g() | 1u;
}

std::uint64_t border_bits(const Border& b) {
  // splitmix64-style finalizer over the packed border fields
  std::uint64_t h = std::bit_cast<std::uint64_t>(b.key);
  h ^= (static_cast<std::uint64_t>(b.kind) + 1) * 0x9e3779b97f4a7c15ull;
  h ^= b.segment_id + 0xbf58476d1ce4e5b9ull + (h << 6) + (h >> 2);
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

}  // namespace zdst
