#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "zdst/interval.hpp"

namespace zdst {

/// Shape of a generated mixed-operation workload. Everything a generator
/// emits is a pure function of these parameters.
struct WorkloadParams {
  std::uint64_t seed = 1;
  std::uint32_t ops = 200;
  std::uint32_t max_live = 64;   // cap on concurrently stored segments
  bool all_kinds = true;         // all four border kinds (else closed [a,b])
  bool collide_keys = true;      // half the keys come from a coarse grid
  std::size_t weight_dim = 1;
  int weight_min = -4;           // integer weights, so cancellation is exact
  int weight_max = 4;
  double key_min = 0.0;
  double key_max = 1.0;
};

struct WorkloadOp {
  enum class Kind : std::uint8_t { insert, erase, move };
  Kind kind = Kind::insert;
  Segment seg;  // insert: the segment; move: the new borders under seg.id;
                // erase: only seg.id is meaningful
};

/// Emits a deterministic stream of insert/erase/move operations that is
/// always applicable: erases and moves target live ids, inserts use fresh
/// ids, and the live count respects max_live.
class WorkloadGenerator {
 public:
  explicit WorkloadGenerator(WorkloadParams params);

  /// The next operation, or nullopt once `ops` operations were emitted.
  std::optional<WorkloadOp> next();

  const std::vector<std::uint64_t>& live_ids() const { return live_; }

 private:
  double draw_key();
  Segment draw_segment(std::uint64_t id, std::vector<double> weight);
  std::vector<double> draw_weight();
  std::uint64_t pick_live();

  WorkloadParams params_;
  std::mt19937_64 rng_;
  std::uint32_t emitted_ = 0;
  std::uint64_t next_id_ = 1;
  std::vector<std::uint64_t> live_;
  std::unordered_map<std::uint64_t, std::vector<double>> weights_;
};

/// A benchmark segment: both border keys drawn uniformly from
/// [key_min, key_max), weight components uniform reals. Kinds are closed
/// unless random_kinds is set.
Segment draw_uniform_segment(std::mt19937_64& rng, std::uint64_t id,
                             std::size_t weight_dim, bool random_kinds,
                             double key_min = 0.0, double key_max = 1.0);

}  // namespace zdst
