#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdst/interval.hpp"

namespace zdst {

/// One atom of the partition of the reals induced by a set of border keys:
/// either the point [key, key] or the open gap between two neighbouring keys
/// (unbounded at the ends).
struct ElementaryInterval {
  double low = 0.0;   // meaningless when unbounded_low
  double high = 0.0;  // meaningless when unbounded_high
  bool point = false;
  bool unbounded_low = false;
  bool unbounded_high = false;
  std::vector<std::uint64_t> ids;  // segments stabbing the interval, sorted

  /// A real number inside the interval, if one exists: the point itself, a
  /// gap midpoint, or a value beyond the extreme keys. Gaps between adjacent
  /// representable doubles have no interior and yield nothing.
  std::optional<double> representative() const;
};

/// Brute-force reference: a flat list of segments, queried by linear scan.
/// Insertion order is kept so failing cases replay identically.
class SegmentOracle {
 public:
  void insert(const Segment& seg);
  void erase(std::uint64_t id);
  void move(std::uint64_t id, double low_key, BorderKind low_kind,
            double high_key, BorderKind high_kind);

  /// Ids of all segments containing q, sorted.
  std::vector<std::uint64_t> stab_ids(double q) const;
  /// Componentwise weight sum over all segments containing q.
  std::vector<double> stab_weight(double q, std::size_t dim) const;

  /// The alternating gap/point/gap sequence over all stored border keys,
  /// each with the ids stabbing it.
  std::vector<ElementaryInterval> elementary_sweep() const;

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool contains_segment(std::uint64_t id) const;
  const Segment& segment(std::uint64_t id) const;

 private:
  std::vector<Segment> segments_;
};

}  // namespace zdst
