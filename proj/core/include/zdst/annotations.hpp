#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace zdst {

/// Running totals of backend calls, one counter per operation family. A
/// reset() counts as one delete plus one create: it stands for the
/// delete-then-create-fresh pair on an edge that is being reused.
struct AnnotationCounters {
  std::uint64_t unions = 0;
  std::uint64_t copies = 0;
  std::uint64_t creates = 0;
  std::uint64_t deletes = 0;
};

/// Numeric edge annotations: each annotation is a dense vector of `dim`
/// reals. Union is componentwise addition, copy duplicates the vector and the
/// neutral element is the zero vector. Annotations are handles into a pooled
/// slab owned by the store; a handle stays valid until discarded.
class WeightStore {
 public:
  using AnnotId = std::uint32_t;
  using QueryResult = std::vector<double>;
  static constexpr bool is_set_backend = false;

  explicit WeightStore(std::size_t dim);

  std::size_t dim() const { return dim_; }

  AnnotId create_empty();
  void discard(AnnotId a);
  /// Makes `a` neutral in place. Equivalent to discard + create_empty but
  /// keeps the handle.
  void reset(AnnotId a);
  AnnotId copy(AnnotId a);
  void union_into(AnnotId target, AnnotId source);
  void add_weight(AnnotId a, std::span<const double> w);
  bool is_neutral(AnnotId a) const;
  std::span<const double> content(AnnotId a) const;

  const AnnotationCounters& counters() const { return counters_; }
  std::size_t live_annotations() const { return live_; }

 private:
  AnnotId allocate();
  double* chunk(AnnotId a) { return pool_.data() + std::size_t{a} * dim_; }
  const double* chunk(AnnotId a) const {
    return pool_.data() + std::size_t{a} * dim_;
  }

  std::size_t dim_;
  std::vector<double> pool_;
  std::vector<AnnotId> free_;
  std::size_t live_ = 0;
  AnnotationCounters counters_;
};

std::vector<double> negate_weight(std::span<const double> w);

/// Set edge annotations: a plain stand-in for a union-copy structure with the
/// same observable interface. Each annotation is a hash set of segment ids;
/// copy and union are element-wise, so they cost O(set size) here instead of
/// O(1). The store keeps, per segment id, the set of annotations containing
/// it, which makes erase_item_everywhere O(#containing sets).
class SetStore {
 public:
  using AnnotId = std::uint32_t;
  using QueryResult = std::vector<std::uint64_t>;
  static constexpr bool is_set_backend = true;

  AnnotId create_empty();
  void discard(AnnotId a);
  void reset(AnnotId a);
  AnnotId copy(AnnotId a);
  void union_into(AnnotId target, AnnotId source);
  void add_item(AnnotId a, std::uint64_t segment_id);
  /// Removes the id from every annotation in the store. No-op for ids that
  /// were never added.
  void erase_item_everywhere(std::uint64_t segment_id);
  bool is_neutral(AnnotId a) const;
  bool contains(AnnotId a, std::uint64_t segment_id) const;
  std::vector<std::uint64_t> content_sorted(AnnotId a) const;

  template <typename F>
  void for_each_item(AnnotId a, F&& f) const {
    for (std::uint64_t id : sets_[a]) f(id);
  }

  const AnnotationCounters& counters() const { return counters_; }
  std::size_t live_annotations() const { return live_; }

 private:
  AnnotId allocate();
  void drop_items(AnnotId a);

  std::vector<std::unordered_set<std::uint64_t>> sets_;
  std::vector<AnnotId> free_;
  std::unordered_map<std::uint64_t, std::unordered_set<AnnotId>> item_index_;
  std::size_t live_ = 0;
  AnnotationCounters counters_;
};

}  // namespace zdst
