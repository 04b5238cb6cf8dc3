#include "zdst/workload.hpp"

#include <algorithm>
#include <cassert>

namespace zdst {

WorkloadGenerator::WorkloadGenerator(WorkloadParams params)
    : params_(params), rng_(params.seed * 0x9e3779b97f4a7c15ull + 1) {}

double WorkloadGenerator::draw_key() {
  std::uniform_real_distribution<double> uni(params_.key_min, params_.key_max);
  if (params_.collide_keys && (rng_() & 1)) {
    // Coarse grid: 17 distinct values over the key range, so collisions
    // between segments (and with query points) actually happen.
    std::uniform_int_distribution<int> grid(0, 16);
    return params_.key_min +
           (params_.key_max - params_.key_min) * grid(rng_) / 16.0;
  }
  return uni(rng_);
}

std::vector<double> WorkloadGenerator::draw_weight() {
  std::uniform_int_distribution<int> w(params_.weight_min, params_.weight_max);
  std::vector<double> out(params_.weight_dim);
  for (double& v : out) v = static_cast<double>(w(rng_));
  return out;
}

Segment WorkloadGenerator::draw_segment(std::uint64_t id,
                                        std::vector<double> weight) {
  double a = draw_key();
  double b = draw_key();
  if (a > b) std::swap(a, b);
  if (a == b)  // only the closed point segment is valid at equal keys
    return Segment::make(id, a, BorderKind::closed_lower, b,
                         BorderKind::closed_upper, std::move(weight));
  BorderKind lo = BorderKind::closed_lower;
  BorderKind hi = BorderKind::closed_upper;
  if (params_.all_kinds) {
    if (rng_() & 1) lo = BorderKind::open_lower;
    if (rng_() & 1) hi = BorderKind::open_upper;
  }
  return Segment::make(id, a, lo, b, hi, std::move(weight));
}

std::uint64_t WorkloadGenerator::pick_live() {
  std::uniform_int_distribution<std::size_t> pick(0, live_.size() - 1);
  return live_[pick(rng_)];
}

std::optional<WorkloadOp> WorkloadGenerator::next() {
  if (emitted_ >= params_.ops) return std::nullopt;
  ++emitted_;

  WorkloadOp op;
  std::uniform_int_distribution<int> roll(0, 3);
  const int r = roll(rng_);
  const bool full = live_.size() >= params_.max_live;
  const bool want_insert = live_.empty() || (!full && r <= 1);

  if (want_insert) {
    op.kind = WorkloadOp::Kind::insert;
    const std::uint64_t id = next_id_++;
    auto weight = draw_weight();
    weights_[id] = weight;
    op.seg = draw_segment(id, std::move(weight));
    live_.push_back(id);
    return op;
  }
  const std::uint64_t id = pick_live();
  if ((full && r <= 1) || r == 2) {
    op.kind = WorkloadOp::Kind::erase;
    op.seg.id = id;
    live_.erase(std::find(live_.begin(), live_.end(), id));
    weights_.erase(id);
    return op;
  }
  op.kind = WorkloadOp::Kind::move;
  op.seg = draw_segment(id, weights_.at(id));
  return op;
}

Segment draw_uniform_segment(std::mt19937_64& rng, std::uint64_t id,
                             std::size_t weight_dim, bool random_kinds,
                             double key_min, double key_max) {
  std::uniform_real_distribution<double> uni(key_min, key_max);
  double a = uni(rng);
  double b = uni(rng);
  if (a > b) std::swap(a, b);
  std::vector<double> weight(weight_dim);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (double& v : weight) v = w(rng);
  BorderKind lo = BorderKind::closed_lower;
  BorderKind hi = BorderKind::closed_upper;
  if (random_kinds && a != b) {
    if (rng() & 1) lo = BorderKind::open_lower;
    if (rng() & 1) hi = BorderKind::open_upper;
  }
  return Segment::make(id, a, lo, b, hi, std::move(weight));
}

}  // namespace zdst
