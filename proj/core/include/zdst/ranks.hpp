#pragma once

#include <cstdint>
#include <random>

#include "zdst/interval.hpp"

namespace zdst {

/// Ranks follow a geometric distribution with mean 1: rank k is drawn with
/// probability 2^-(k+1), the depth distribution of a perfectly balanced tree.
using Rank = std::uint8_t;

/// How a tree obtains node ranks.
///  - random_store:   draw from the tree's RNG at insertion, keep at the node.
///  - hash_store:     multiply-shift hash of the border, keep at the node.
///  - hash_recompute: same hash, recomputed on every access, nothing stored.
enum class RankPolicy : std::uint8_t {
  random_store,
  hash_store,
  hash_recompute,
};

const char* to_string(RankPolicy p);

/// Geometric(1/2) rank: index of the lowest set bit of a uniform random
/// word. An all-zero word (probability 2^-64) is redrawn rather than capped.
Rank random_rank(std::mt19937_64& rng);

/// Multiply-shift rank: lowest set bit of key_bits * multiplier (mod 2^64).
/// The multiplier must be odd, so the product is zero only for key_bits == 0,
/// which maps to rank 0.
Rank hash_rank(std::uint64_t key_bits, std::uint64_t multiplier);

/// Draws the per-tree odd multiplier from a seed.
std::uint64_t draw_multiplier(std::uint64_t seed);

/// The word that hashing variants feed into hash_rank for a border. Mixes the
/// key's bit pattern with the kind and the segment-id salt so that borders
/// differing only in kind or id still get independent-looking ranks.
std::uint64_t border_bits(const Border& b);

}  // namespace zdst
