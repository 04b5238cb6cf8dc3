#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zdst {

/// One endpoint of a segment. Lower kinds open a segment, upper kinds close
/// it. The enumeration order is the tree order of borders sharing a numeric
/// key: "k)" < "[k" < "k]" < "(k". With this order a search for the value k
/// terminates after all closed lower and open upper borders with key k, but
/// before all closed upper and open lower ones.
enum class BorderKind : std::uint8_t {
  open_upper = 0,    // k)
  closed_lower = 1,  // [k
  closed_upper = 2,  // k]
  open_lower = 3,    // (k
};

constexpr bool is_lower_kind(BorderKind k) {
  return k == BorderKind::closed_lower || k == BorderKind::open_lower;
}

constexpr bool is_upper_kind(BorderKind k) { return !is_lower_kind(k); }

const char* to_string(BorderKind k);

/// A segment endpoint as stored in the tree. Borders are totally ordered by
/// (key, kind, segment_id); the segment id breaks ties between otherwise
/// identical borders of distinct segments, so every border in a tree is
/// unique.
struct Border {
  double key = 0.0;
  BorderKind kind = BorderKind::closed_lower;
  std::uint64_t segment_id = 0;
};

std::strong_ordering compare_borders(const Border& a, const Border& b);

inline std::strong_ordering operator<=>(const Border& a, const Border& b) {
  return compare_borders(a, b);
}
inline bool operator==(const Border& a, const Border& b) {
  return compare_borders(a, b) == std::strong_ordering::equal;
}

enum class Direction : std::uint8_t { left, right };

/// Which way a stabbing query for q leaves a node holding the given border.
/// Strict key comparisons decide when the keys differ; at equal keys the
/// query descends right of "[k" and "k)" and left of "k]" and "(k".
Direction query_descend(double q, const Border& node_border);

/// An interval with two borders, a stable id and a weight vector. Use make()
/// to get the invariants checked.
struct Segment {
  std::uint64_t id = 0;
  Border low;
  Border high;
  std::vector<double> weight;

  /// Validates keys (finite), kinds (low opens, high closes) and order
  /// (low < high; the degenerate closed point [x,x] is allowed, empty
  /// combinations like (x,x) are not). Throws std::invalid_argument.
  static Segment make(std::uint64_t id, double low_key, BorderKind low_kind,
                      double high_key, BorderKind high_kind,
                      std::vector<double> weight);

  /// Same checks as make(); used to re-validate hand-built instances.
  void validate() const;
};

/// True iff q lies inside the segment, respecting open/closed ends.
bool stabbing_contains(const Segment& seg, double q);

}  // namespace zdst
