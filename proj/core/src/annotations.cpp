#include "zdst/annotations.hpp"

#include <algorithm>
#include <cassert>

namespace zdst {

WeightStore::WeightStore(std::size_t dim) : dim_(dim) { assert(dim >= 1); }

WeightStore::AnnotId WeightStore::create_empty() {
  ++counters_.creates;
  return allocate();
}

WeightStore::AnnotId WeightStore::allocate() {
  ++live_;
  if (!free_.empty()) {
    AnnotId a = free_.back();
    free_.pop_back();
    return a;
  }
  AnnotId a = static_cast<AnnotId>(pool_.size() / dim_);
  pool_.resize(pool_.size() + dim_, 0.0);
  return a;
}

void WeightStore::discard(AnnotId a) {
  ++counters_.deletes;
  --live_;
  std::fill_n(chunk(a), dim_, 0.0);
  free_.push_back(a);
}

void WeightStore::reset(AnnotId a) {
  ++counters_.deletes;
  ++counters_.creates;
  std::fill_n(chunk(a), dim_, 0.0);
}

WeightStore::AnnotId WeightStore::copy(AnnotId a) {
  ++counters_.copies;
  AnnotId b = allocate();
  std::copy_n(chunk(a), dim_, chunk(b));
  return b;
}

void WeightStore::union_into(AnnotId target, AnnotId source) {
  ++counters_.unions;
  const double* s = chunk(source);
  double* t = chunk(target);
  for (std::size_t i = 0; i < dim_; ++i) t[i] += s[i];
}

void WeightStore::add_weight(AnnotId a, std::span<const double> w) {
  assert(w.size() == dim_);
  double* t = chunk(a);
  for (std::size_t i = 0; i < dim_; ++i) t[i] += w[i];
}

bool WeightStore::is_neutral(AnnotId a) const {
  const double* c = chunk(a);
  return std::all_of(c, c + dim_, [](double v) { return v == 0.0; });
}

std::span<const double> WeightStore::content(AnnotId a) const {
  return {chunk(a), dim_};
}

std::vector<double> negate_weight(std::span<const double> w) {
  std::vector<double> out(w.begin(), w.end());
  for (double& v : out) v = -v;
  return out;
}

SetStore::AnnotId SetStore::create_empty() {
  ++counters_.creates;
  return allocate();
}

SetStore::AnnotId SetStore::allocate() {
  ++live_;
  if (!free_.empty()) {
    AnnotId a = free_.back();
    free_.pop_back();
    return a;
  }
  sets_.emplace_back();
  return static_cast<AnnotId>(sets_.size() - 1);
}

void SetStore::drop_items(AnnotId a) {
  for (std::uint64_t id : sets_[a]) {
    auto it = item_index_.find(id);
    it->second.erase(a);
    if (it->second.empty()) item_index_.erase(it);
  }
  sets_[a].clear();
}

void SetStore::discard(AnnotId a) {
  ++counters_.deletes;
  --live_;
  drop_items(a);
  free_.push_back(a);
}

void SetStore::reset(AnnotId a) {
  ++counters_.deletes;
  ++counters_.creates;
  drop_items(a);
}

SetStore::AnnotId SetStore::copy(AnnotId a) {
  ++counters_.copies;
  AnnotId b = allocate();
  sets_[b] = sets_[a];
  for (std::uint64_t id : sets_[b]) item_index_[id].insert(b);
  return b;
}

void SetStore::union_into(AnnotId target, AnnotId source) {
  ++counters_.unions;
  if (target == source) return;
  for (std::uint64_t id : sets_[source])
    if (sets_[target].insert(id).second) item_index_[id].insert(target);
}

void SetStore::add_item(AnnotId a, std::uint64_t segment_id) {
  if (sets_[a].insert(segment_id).second) item_index_[segment_id].insert(a);
}

void SetStore::erase_item_everywhere(std::uint64_t segment_id) {
  auto it = item_index_.find(segment_id);
  if (it == item_index_.end()) return;
  for (AnnotId a : it->second) sets_[a].erase(segment_id);
  item_index_.erase(it);
}

bool SetStore::is_neutral(AnnotId a) const { return sets_[a].empty(); }

bool SetStore::contains(AnnotId a, std::uint64_t segment_id) const {
  return sets_[a].contains(segment_id);
}

std::vector<std::uint64_t> SetStore::content_sorted(AnnotId a) const {
  std::vector<std::uint64_t> out(sets_[a].begin(), sets_[a].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zdst
