#include "zdst/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zdst {

std::optional<double> ElementaryInterval::representative() const {
  if (point) return low;
  if (unbounded_low && unbounded_high) return 0.0;
  if (unbounded_low) return high - 1.0;
  if (unbounded_high) return low + 1.0;
  const double mid = low + (high - low) / 2.0;
  if (mid > low && mid < high) return mid;
  const double up = std::nextafter(low, high);
  if (up < high) return up;
  return std::nullopt;
}

void SegmentOracle::insert(const Segment& seg) {
  seg.validate();
  if (contains_segment(seg.id))
    throw std::invalid_argument("segment id already present");
  segments_.push_back(seg);
}

void SegmentOracle::erase(std::uint64_t id) {
  auto it = std::find_if(segments_.begin(), segments_.end(),
                         [&](const Segment& s) { return s.id == id; });
  if (it == segments_.end()) throw std::invalid_argument("unknown segment id");
  segments_.erase(it);
}

void SegmentOracle::move(std::uint64_t id, double low_key, BorderKind low_kind,
                         double high_key, BorderKind high_kind) {
  const Segment& old = segment(id);
  Segment next =
      Segment::make(id, low_key, low_kind, high_key, high_kind, old.weight);
  erase(id);
  segments_.push_back(std::move(next));
}

std::vector<std::uint64_t> SegmentOracle::stab_ids(double q) const {
  std::vector<std::uint64_t> out;
  for (const Segment& s : segments_)
    if (stabbing_contains(s, q)) out.push_back(s.id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> SegmentOracle::stab_weight(double q,
                                               std::size_t dim) const {
  std::vector<double> acc(dim, 0.0);
  for (const Segment& s : segments_) {
    if (!stabbing_contains(s, q)) continue;
    for (std::size_t i = 0; i < dim && i < s.weight.size(); ++i)
      acc[i] += s.weight[i];
  }
  return acc;
}

std::vector<ElementaryInterval> SegmentOracle::elementary_sweep() const {
  std::vector<double> keys;
  keys.reserve(segments_.size() * 2);
  for (const Segment& s : segments_) {
    keys.push_back(s.low.key);
    keys.push_back(s.high.key);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::vector<ElementaryInterval> out;
  auto fill_ids = [&](ElementaryInterval& e) {
    if (auto q = e.representative()) {
      for (const Segment& s : segments_)
        if (stabbing_contains(s, *q)) e.ids.push_back(s.id);
      std::sort(e.ids.begin(), e.ids.end());
    }
  };

  if (keys.empty()) {
    ElementaryInterval all;
    all.unbounded_low = all.unbounded_high = true;
    fill_ids(all);
    out.push_back(std::move(all));
    return out;
  }

  ElementaryInterval head;
  head.unbounded_low = true;
  head.high = keys.front();
  fill_ids(head);
  out.push_back(std::move(head));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    ElementaryInterval pt;
    pt.point = true;
    pt.low = pt.high = keys[i];
    fill_ids(pt);
    out.push_back(std::move(pt));
    ElementaryInterval gap;
    gap.low = keys[i];
    if (i + 1 < keys.size()) {
      gap.high = keys[i + 1];
    } else {
      gap.unbounded_high = true;
    }
    fill_ids(gap);
    out.push_back(std::move(gap));
  }
  return out;
}

bool SegmentOracle::contains_segment(std::uint64_t id) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.id == id; });
}

const Segment& SegmentOracle::segment(std::uint64_t id) const {
  for (const Segment& s : segments_)
    if (s.id == id) return s;
  throw std::invalid_argument("unknown segment id");
}

}  // namespace zdst
