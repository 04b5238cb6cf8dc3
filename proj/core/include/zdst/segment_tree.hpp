#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zdst/annotations.hpp"
#include "zdst/interval.hpp"
#include "zdst/ranks.hpp"
#include "zdst/tree.hpp"

namespace zdst {

/// Weighted intervals under insertion, deletion and stabbing queries.
/// Each segment is represented by two tree nodes (its borders); the edges on
/// the paths between them carry the segment's annotation so that the edges
/// along any query's search path contain each stabbed segment exactly once.
///
/// The Store parameter picks the annotation backend: SetStore answers stabs
/// with the set of segment ids, WeightStore with the aggregated weight
/// vector. With WeightStore a deletion re-annotates the segment's current
/// edge set with the negated weight, which cancels the insertion exactly
/// (bit-exactly for integer weights).
template <typename Store>
class DynamicSegmentTree {
 public:
  using TreeType = Tree<Store>;
  using Node = typename TreeType::Node;
  using QueryResult = typename Store::QueryResult;

  template <typename... StoreArgs>
  explicit DynamicSegmentTree(RankPolicy policy, std::uint64_t seed,
                              StoreArgs&&... store_args)
      : store_(std::forward<StoreArgs>(store_args)...),
        tree_(store_, policy, seed) {}

  void insert(const Segment& seg) {
    seg.validate();
    if (segments_.contains(seg.id))
      throw std::invalid_argument("segment id already present");
    if constexpr (!Store::is_set_backend) {
      if (seg.weight.size() != store_.dim())
        throw std::invalid_argument("segment weight dimension mismatch");
    }
    Record rec;
    rec.weight = seg.weight;
    rec.low = tree_.insert(seg.low);
    rec.high = tree_.insert(seg.high);
    annotate(rec.low, rec.high, seg.id, rec.weight);
    segments_.emplace(seg.id, std::move(rec));
  }

  void erase(std::uint64_t id) {
    auto it = segments_.find(id);
    if (it == segments_.end())
      throw std::invalid_argument("unknown segment id");
    Record& rec = it->second;
    if constexpr (Store::is_set_backend) {
      store_.erase_item_everywhere(id);
    } else {
      // The edge set is recomputed against the current tree shape, not
      // remembered from insertion time: restructuring relocates annotations,
      // but it preserves what every search path collects, so the freshly
      // computed placement is annotated with exactly the weight the old one
      // contributed.
      annotate(rec.low, rec.high, id, negate_weight(rec.weight));
    }
    tree_.erase(rec.low);
    tree_.erase(rec.high);
    segments_.erase(it);
  }

  /// Remove, change borders, re-insert under the same id and weight. The new
  /// borders are validated before anything is touched.
  void move(std::uint64_t id, double low_key, BorderKind low_kind,
            double high_key, BorderKind high_kind) {
    auto it = segments_.find(id);
    if (it == segments_.end())
      throw std::invalid_argument("unknown segment id");
    Segment next = Segment::make(id, low_key, low_kind, high_key, high_kind,
                                 it->second.weight);
    erase(id);
    insert(next);
  }

  /// All segments containing q: sorted ids (set backend) or the aggregated
  /// weight vector (numeric backend).
  QueryResult stab(double q) const {
    if constexpr (Store::is_set_backend) {
      std::vector<std::uint64_t> out;
      tree_.stab_edges(q, [&](typename Store::AnnotId a) {
        store_.for_each_item(a, [&](std::uint64_t id) { out.push_back(id); });
      });
      std::sort(out.begin(), out.end());
      return out;
    } else {
      std::vector<double> acc(store_.dim(), 0.0);
      tree_.stab_edges(q, [&](typename Store::AnnotId a) {
        auto w = store_.content(a);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w[i];
      });
      return acc;
    }
  }

  bool contains_segment(std::uint64_t id) const { return segments_.contains(id); }
  std::size_t segment_count() const { return segments_.size(); }
  std::size_t node_count() const { return tree_.size(); }

  /// True iff every edge annotation in the tree (including the root edge) is
  /// neutral; with all segments removed this must hold exactly.
  bool all_edges_neutral() const {
    if (!store_.is_neutral(tree_.root_edge())) return false;
    bool ok = true;
    tree_.for_each_node([&](const Node* n) {
      ok = ok && store_.is_neutral(n->left_edge) && store_.is_neutral(n->right_edge);
    });
    return ok;
  }

  TreeType& tree() { return tree_; }
  const TreeType& tree() const { return tree_; }
  Store& store() { return store_; }
  const Store& store() const { return store_; }

  const std::vector<double>& weight_of(std::uint64_t id) const {
    return segments_.at(id).weight;
  }
  std::pair<const Node*, const Node*> nodes_of(std::uint64_t id) const {
    const Record& r = segments_.at(id);
    return {r.low, r.high};
  }

 private:
  struct Record {
    Node* low = nullptr;
    Node* high = nullptr;
    std::vector<double> weight;
  };

  /// Annotates the edge set for the span between the two border nodes: the
  /// nodes at which a one-shot built tree would carry the segment. With
  /// c = LCA(low, high), on the branch from c down to low every right edge
  /// at a node the path leaves leftwards gets the annotation, plus low's own
  /// right edge; mirrored on the branch down to high. A branch collapses to
  /// nothing when c is that border node itself: its queries enter the span
  /// through the other branch only.
  void annotate(Node* low, Node* high, std::uint64_t id,
                const std::vector<double>& weight) {
    Node* c = TreeType::lowest_common_ancestor(low, high);
    if (c != low) {
      mark(low->right_edge, id, weight);
      for (Node* n = low; n->parent != c; n = n->parent)
        if (n->parent->left == n) mark(n->parent->right_edge, id, weight);
    }
    if (c != high) {
      mark(high->left_edge, id, weight);
      for (Node* n = high; n->parent != c; n = n->parent)
        if (n->parent->right == n) mark(n->parent->left_edge, id, weight);
    }
  }

  void mark(typename Store::AnnotId edge, std::uint64_t id,
            const std::vector<double>& weight) {
    if constexpr (Store::is_set_backend)
      store_.add_item(edge, id);
    else
      store_.add_weight(edge, weight);
  }

  Store store_;
  TreeType tree_;
  std::unordered_map<std::uint64_t, Record> segments_;
};

using SetSegmentTree = DynamicSegmentTree<SetStore>;
using WeightSegmentTree = DynamicSegmentTree<WeightStore>;

}  // namespace zdst
