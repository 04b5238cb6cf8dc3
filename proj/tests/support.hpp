#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zdst/annotations.hpp"
#include "zdst/interval.hpp"
#include "zdst/oracle.hpp"
#include "zdst/segment_tree.hpp"
#include "zdst/tree.hpp"
#include "zdst/workload.hpp"

namespace zdst::test {

/// Independent containment route: borders map to cut positions (key, side)
/// ordered lexicographically; q maps to (q, 0). Used to cross-check
/// stabbing_contains.
inline bool contains_via_cuts(const Segment& s, double q) {
  auto low_cut = [&]() -> std::pair<double, int> {
    return {s.low.key, s.low.kind == BorderKind::closed_lower ? -1 : +1};
  }();
  auto high_cut = [&]() -> std::pair<double, int> {
    return {s.high.key, s.high.kind == BorderKind::closed_upper ? +1 : -1};
  }();
  const std::pair<double, int> qc{q, 0};
  return low_cut < qc && qc < high_cut;
}

/// Query points covering every real-elementary region of the given keys:
/// each key itself, midpoints of neighbouring keys, and one point beyond
/// each end.
inline std::vector<double> query_points_for(std::vector<double> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<double> pts;
  if (keys.empty()) return {0.0};
  pts.push_back(keys.front() - 1.0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    pts.push_back(keys[i]);
    if (i + 1 < keys.size()) {
      const double mid = keys[i] + (keys[i + 1] - keys[i]) / 2.0;
      if (mid > keys[i] && mid < keys[i + 1]) pts.push_back(mid);
    }
  }
  pts.push_back(keys.back() + 1.0);
  return pts;
}

inline std::vector<double> border_keys(const SegmentOracle& oracle) {
  std::vector<double> keys;
  for (const Segment& s : oracle.segments()) {
    keys.push_back(s.low.key);
    keys.push_back(s.high.key);
  }
  return keys;
}

/// Everything a query path picks up, duplicates preserved (set backend).
inline std::vector<std::uint64_t> path_pickups(const Tree<SetStore>& tree,
                                               const SetStore& store,
                                               double q) {
  std::vector<std::uint64_t> out;
  tree.stab_edges(q, [&](SetStore::AnnotId a) {
    store.for_each_item(a, [&](std::uint64_t id) { out.push_back(id); });
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<double> path_pickups(const Tree<WeightStore>& tree,
                                        const WeightStore& store, double q) {
  std::vector<double> acc(store.dim(), 0.0);
  tree.stab_edges(q, [&](WeightStore::AnnotId a) {
    auto w = store.content(a);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w[i];
  });
  return acc;
}

template <typename Store>
auto snapshot_pickups(const Tree<Store>& tree, const Store& store,
                      const std::vector<double>& points) {
  std::vector<decltype(path_pickups(tree, store, 0.0))> out;
  out.reserve(points.size());
  for (double q : points) out.push_back(path_pickups(tree, store, q));
  return out;
}

template <typename Store>
auto make_renderer(const Store& store) {
  if constexpr (Store::is_set_backend) {
    return [&store](typename Store::AnnotId a) {
      std::ostringstream os;
      os << "{";
      bool first = true;
      for (std::uint64_t id : store.content_sorted(a)) {
        if (!first) os << ",";
        os << id;
        first = false;
      }
      os << "}";
      return os.str();
    };
  } else {
    return [&store](typename Store::AnnotId a) {
      std::ostringstream os;
      os << "(";
      bool first = true;
      for (double v : store.content(a)) {
        if (!first) os << " ";
        os << v;
        first = false;
      }
      os << ")";
      return os.str();
    };
  }
}

template <typename Store>
std::string dump_tree(const DynamicSegmentTree<Store>& dst) {
  std::ostringstream os;
  dst.tree().dump(os, make_renderer(dst.store()));
  return os.str();
}

/// Applies one workload op to a segment tree and the oracle in lockstep.
template <typename Store>
void apply_op(DynamicSegmentTree<Store>& dst, const WorkloadOp& op) {
  switch (op.kind) {
    case WorkloadOp::Kind::insert:
      dst.insert(op.seg);
      break;
    case WorkloadOp::Kind::erase:
      dst.erase(op.seg.id);
      break;
    case WorkloadOp::Kind::move:
      dst.move(op.seg.id, op.seg.low.key, op.seg.low.kind, op.seg.high.key,
               op.seg.high.kind);
      break;
  }
}

inline void apply_op(SegmentOracle& oracle, const WorkloadOp& op) {
  switch (op.kind) {
    case WorkloadOp::Kind::insert:
      oracle.insert(op.seg);
      break;
    case WorkloadOp::Kind::erase:
      oracle.erase(op.seg.id);
      break;
    case WorkloadOp::Kind::move:
      oracle.move(op.seg.id, op.seg.low.key, op.seg.low.kind, op.seg.high.key,
                  op.seg.high.kind);
      break;
  }
}

/// Chi-squared statistic of observed rank counts against geometric(1/2),
/// bins 0..15 plus a merged tail.
inline double chi_squared_geometric(const std::vector<std::uint64_t>& counts,
                                    std::uint64_t total) {
  constexpr int kBins = 16;
  double chi = 0.0;
  double tail_observed = 0.0;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (r < kBins) continue;
    tail_observed += static_cast<double>(counts[r]);
  }
  for (int r = 0; r < kBins; ++r) {
    const double expected = static_cast<double>(total) * std::ldexp(1.0, -(r + 1));
    const double observed =
        r < static_cast<int>(counts.size()) ? static_cast<double>(counts[r]) : 0.0;
    chi += (observed - expected) * (observed - expected) / expected;
  }
  const double tail_expected = static_cast<double>(total) * std::ldexp(1.0, -kBins);
  chi += (tail_observed - tail_expected) * (tail_observed - tail_expected) /
         tail_expected;
  return chi;
}

/// 0.999 quantile of chi-squared with 16 degrees of freedom (17 bins).
inline constexpr double kChiSquared999Df16 = 39.2524;

}  // namespace zdst::test
