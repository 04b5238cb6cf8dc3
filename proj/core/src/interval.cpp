#include "zdst/interval.hpp"

#include <cmath>
#include <stdexcept>

namespace zdst {

const char* to_string(BorderKind k) {
  switch (k) {
    case BorderKind::open_upper:
      return "open_upper";
    case BorderKind::closed_lower:
      return "closed_lower";
    case BorderKind::closed_upper:
      return "closed_upper";
    case BorderKind::open_lower:
      return "open_lower";
  }
  return "?";
}

std::strong_ordering compare_borders(const Border& a, const Border& b) {
  // Keys are finite by construction, so < is a total order here.
  if (a.key < b.key) return std::strong_ordering::less;
  if (a.key > b.key) return std::strong_ordering::greater;
  if (a.kind != b.kind)
    return static_cast<std::uint8_t>(a.kind) <=> static_cast<std::uint8_t>(b.kind);
  return a.segment_id <=> b.segment_id;
}

Direction query_descend(double q, const Border& node_border) {
  if (q < node_border.key) return Direction::left;
  if (q > node_border.key) return Direction::right;
  switch (node_border.kind) {
    case BorderKind::closed_lower:
    case BorderKind::open_upper:
      return Direction::right;
    case BorderKind::closed_upper:
    case BorderKind::open_lower:
      return Direction::left;
  }
  return Direction::right;
}

Segment Segment::make(std::uint64_t id, double low_key, BorderKind low_kind,
                      double high_key, BorderKind high_kind,
                      std::vector<double> weight) {
  Segment s;
  s.id = id;
  s.low = Border{low_key, low_kind, id};
  s.high = Border{high_key, high_kind, id};
  s.weight = std::move(weight);
  s.validate();
  return s;
}

void Segment::validate() const {
  if (!std::isfinite(low.key) || !std::isfinite(high.key))
    throw std::invalid_argument("segment border keys must be finite");
  if (!is_lower_kind(low.kind))
    throw std::invalid_argument("segment low border must be a lower kind");
  if (!is_upper_kind(high.kind))
    throw std::invalid_argument("segment high border must be an upper kind");
  if (low.segment_id != id || high.segment_id != id)
    throw std::invalid_argument("segment borders must carry the segment id");
  // The kind order makes [x < x] the only legal equal-key combination, which
  // admits the closed point segment [x,x] and rejects the empty ones.
  if (compare_borders(low, high) != std::strong_ordering::less)
    throw std::invalid_argument("segment low border must precede high border");
}

bool stabbing_contains(const Segment& seg, double q) {
  const bool above_low = seg.low.kind == BorderKind::closed_lower
                             ? q >= seg.low.key
                             : q > seg.low.key;
  const bool below_high = seg.high.kind == BorderKind::closed_upper
                              ? q <= seg.high.key
                              : q < seg.high.key;
  return above_low && below_high;
}

}  // namespace zdst
