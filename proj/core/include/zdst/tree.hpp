#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "zdst/interval.hpp"
#include "zdst/ranks.hpp"

namespace zdst {

/// Mean/max/histogram of node depths (root has depth 0).
struct DepthStats {
  double mean = 0.0;
  std::size_t max = 0;
  std::vector<std::uint64_t> histogram;
};

/// Cumulative counts of restructuring work, for the constant-expected-path
/// measurements.
struct TreeCounters {
  std::uint64_t unzip_ops = 0;
  std::uint64_t zip_ops = 0;
  std::uint64_t unzip_path_nodes = 0;
  std::uint64_t zip_path_nodes = 0;
};

/// Test hooks: each flag guards one annotation-repair step of the
/// restructuring operations. All enabled in normal operation; the mutation
/// tests disable them one at a time to show each step is load-bearing.
struct RepairHooks {
  bool unzip_deposit = true;        // push collected onto the off-path edge
  bool unzip_absorb = true;         // absorb the path edge into collected
  bool unzip_reset_new_edges = true;    // blank the freshly created chain edges
  bool unzip_seal_terminal = true;  // write collected onto the two path ends
  bool zip_seed_collected = true;   // start from copies of the removed node's edges
  bool zip_deposit = true;          // push per-spine collected onto the off-path edge
  bool zip_absorb = true;           // absorb the spine edge into its collected
  bool zip_reset_spine_edges = true;    // blank a spine edge once absorbed
  bool zip_seal_terminal = true;    // write collected onto the zipped path end

  bool all_enabled() const {
    return unzip_deposit && unzip_absorb && unzip_reset_new_edges &&
           unzip_seal_terminal && zip_seed_collected && zip_deposit &&
           zip_absorb && zip_reset_spine_edges && zip_seal_terminal;
  }
};

/// A rank-balanced search tree over borders whose edges carry annotations.
/// Each node owns two annotation slots, one per child edge; the slots exist
/// and are meaningful even when the child is absent, because a query that
/// falls off the tree there still picks them up. The edge above the root has
/// a slot too (root_edge()).
///
/// Balance is kept treap-style: rank(left child) < rank(node) and
/// rank(right child) <= rank(node). Restructuring never rotates; insertion
/// unzips the search path below the displaced position and deletion zips the
/// two spines of the removed node, both while relocating edge annotations so
/// that every search path keeps collecting exactly what it collected before.
///
/// Single-writer; concurrent read-only queries are fine between mutations.
template <typename Store>
class Tree {
 public:
  using AnnotId = typename Store::AnnotId;

  struct Node {
    Border border;
    Node* left = nullptr;
    Node* right = nullptr;
    Node* parent = nullptr;
    AnnotId left_edge;
    AnnotId right_edge;
    Rank rank = 0;  // unused under RankPolicy::hash_recompute
  };

  Tree(Store& store, RankPolicy policy, std::uint64_t seed)
      : store_(store),
        policy_(policy),
        multiplier_(draw_multiplier(seed)),
        rng_(seed),
        root_edge_(store.create_empty()) {}

  Tree(const Tree&) = delete;
  Tree& operator=(const Tree&) = delete;

  ~Tree() {
    clear();
    store_.discard(root_edge_);
  }

  /// Removes all nodes and blanks the root edge.
  void clear() {
    Node* cur = root_;
    while (cur) {  // destruction via right-spine rotation-free unlinking
      if (cur->left) {
        Node* l = cur->left;
        cur->left = l->right;
        l->right = cur;
        cur = l;
        continue;
      }
      Node* next = cur->right;
      store_.discard(cur->left_edge);
      store_.discard(cur->right_edge);
      delete cur;
      cur = next;
    }
    root_ = nullptr;
    size_ = 0;
    store_.reset(root_edge_);
  }

  std::size_t size() const { return size_; }
  Node* root() { return root_; }
  const Node* root() const { return root_; }
  RankPolicy policy() const { return policy_; }
  std::uint64_t multiplier() const { return multiplier_; }
  AnnotId root_edge() const { return root_edge_; }
  Store& store() { return store_; }
  const TreeCounters& counters() const { return counters_; }

  RepairHooks hooks;

  Rank rank_of(const Node* n) const {
    if (policy_ == RankPolicy::hash_recompute)
      return hash_rank(border_bits(n->border), multiplier_);
    return n->rank;
  }

  /// Inserts a border with a policy-drawn rank.
  Node* insert(const Border& b) { return insert_with_rank(b, draw_rank(b)); }

  /// Inserts with an explicit rank. Under the hashing policies the rank is
  /// a fixed function of the border, so callers must not override it there.
  Node* insert_with_rank(const Border& b, Rank rank) {
    assert(policy_ == RankPolicy::random_store || rank == hash_rank(border_bits(b), multiplier_));
    // Walk down to the position the new node takes: the highest node on the
    // search path that loses to (rank, border), i.e. has a smaller rank, or
    // an equal rank and a larger border. Equal-rank displacement keeps the
    // left-strict heap order: without it a new node could end up as the
    // left child of an equal-ranked one.
    EdgeRef slot{nullptr, false};
    Node* cur = root_;
    while (cur) {
      const Rank cr = rank_of(cur);
      if (cr < rank || (cr == rank && b < cur->border)) break;
      assert(!(b == cur->border) && "duplicate border");
      const bool right = cur->border < b;
      slot = EdgeRef{cur, right};
      cur = right ? cur->right : cur->left;
    }
    Node* n = new Node{b,
                       nullptr,
                       nullptr,
                       nullptr,
                       store_.create_empty(),
                       store_.create_empty(),
                       policy_ == RankPolicy::hash_recompute ? Rank{0} : rank};
    unzip(slot, cur, n, rank);
    ++size_;
    return n;
  }

  /// Removes a node by zipping its two spines into one path. The node's own
  /// edge annotations are carried along by the repair (copied into the
  /// per-spine accumulators), then discarded with the node.
  void erase(Node* n) {
    ++counters_.zip_ops;
    Node* l = n->left;
    Node* r = n->right;
    EdgeRef at = edge_above(n);

    AnnotId coll_l =
        hooks.zip_seed_collected ? store_.copy(n->left_edge) : store_.create_empty();
    AnnotId coll_r =
        hooks.zip_seed_collected ? store_.copy(n->right_edge) : store_.create_empty();

    // The edge annotation at the attach point is never cleared: for the
    // initial attach it is the edge above n, which every search path into
    // this subtree still traverses; for later attaches it was blanked when
    // its node was picked off a spine.
    while (l || r) {
      ++counters_.zip_path_nodes;
      // Rank ties go to the left spine; picking the right one instead would
      // later hang an equal-ranked node off a left edge.
      const bool pick_left = l && (!r || rank_of(l) >= rank_of(r));
      if (pick_left) {
        set_child(at, l);
        Node* next = l->right;
        if (hooks.zip_deposit) store_.union_into(l->left_edge, coll_l);
        if (hooks.zip_absorb) store_.union_into(coll_l, l->right_edge);
        if (hooks.zip_reset_spine_edges) store_.reset(l->right_edge);
        at = EdgeRef{l, true};
        l = next;
      } else {
        set_child(at, r);
        Node* next = r->left;
        if (hooks.zip_deposit) store_.union_into(r->right_edge, coll_r);
        if (hooks.zip_absorb) store_.union_into(coll_r, r->left_edge);
        if (hooks.zip_reset_spine_edges) store_.reset(r->left_edge);
        at = EdgeRef{r, false};
        r = next;
      }
    }
    set_child(at, nullptr);
    // Queries that used to run past the removed node now fall off here and
    // must still collect everything the old path carried.
    if (hooks.zip_seal_terminal)
      store_.union_into(edge_annot(at), at.right ? coll_l : coll_r);

    store_.discard(coll_l);
    store_.discard(coll_r);
    store_.discard(n->left_edge);
    store_.discard(n->right_edge);
    delete n;
    --size_;
  }

  const Node* find(const Border& b) const {
    const Node* cur = root_;
    while (cur) {
      const auto c = compare_borders(b, cur->border);
      if (c == std::strong_ordering::equal) return cur;
      cur = c == std::strong_ordering::less ? cur->left : cur->right;
    }
    return nullptr;
  }
  Node* find(const Border& b) {
    return const_cast<Node*>(static_cast<const Tree*>(this)->find(b));
  }

  static Node* lowest_common_ancestor(Node* a, Node* b) {
    std::size_t da = depth_of(a), db = depth_of(b);
    while (da > db) a = a->parent, --da;
    while (db > da) b = b->parent, --db;
    while (a != b) a = a->parent, b = b->parent;
    return a;
  }

  /// Calls f with the annotation id of every edge on q's search path: the
  /// edge above the root, then one edge per visited node, including the final
  /// edge into the empty slot where the walk ends.
  template <typename F>
  void stab_edges(double q, F&& f) const {
    f(root_edge_);
    const Node* cur = root_;
    while (cur) {
      if (query_descend(q, cur->border) == Direction::left) {
        f(cur->left_edge);
        cur = cur->left;
      } else {
        f(cur->right_edge);
        cur = cur->right;
      }
    }
  }

  template <typename F>
  void for_each_node(F&& f) const {
    walk([&](const Node* n, std::size_t) { f(n); });
  }

  /// Structural audit: search order, rank heap order (strict left,
  /// non-strict right), parent links and the node count. Returns one message
  /// per violation; empty means valid.
  std::vector<std::string> validate() const {
    std::vector<std::string> out;
    std::size_t seen = 0;
    if (root_ && root_->parent != nullptr)
      out.push_back("root parent link is not null");
    walk([&](const Node* n, std::size_t) {
      ++seen;
      if (n->left) {
        if (n->left->parent != n)
          out.push_back("bad parent link at left child of " + key_str(n));
        if (!(compare_borders(n->left->border, n->border) == std::strong_ordering::less))
          out.push_back("search order violated left of " + key_str(n));
        if (!(rank_of(n->left) < rank_of(n)))
          out.push_back("left child rank not strictly smaller at " + key_str(n));
      }
      if (n->right) {
        if (n->right->parent != n)
          out.push_back("bad parent link at right child of " + key_str(n));
        if (!(compare_borders(n->border, n->right->border) == std::strong_ordering::less))
          out.push_back("search order violated right of " + key_str(n));
        if (!(rank_of(n->right) <= rank_of(n)))
          out.push_back("right child rank larger at " + key_str(n));
      }
    });
    // Subtree-wide order also follows from the local checks plus the walk
    // below: an in-order traversal must produce strictly increasing borders.
    const Node* prev = nullptr;
    bool ordered = true;
    in_order([&](const Node* n) {
      if (prev && !(compare_borders(prev->border, n->border) == std::strong_ordering::less))
        ordered = false;
      prev = n;
    });
    if (!ordered) out.push_back("in-order traversal not strictly increasing");
    if (seen != size_)
      out.push_back("node count mismatch: reachable " + std::to_string(seen) +
                    " vs recorded " + std::to_string(size_));
    return out;
  }

  DepthStats depth_stats() const {
    DepthStats s;
    std::uint64_t total = 0, count = 0;
    walk([&](const Node*, std::size_t depth) {
      if (depth >= s.histogram.size()) s.histogram.resize(depth + 1, 0);
      ++s.histogram[depth];
      s.max = depth > s.max ? depth : s.max;
      total += depth;
      ++count;
    });
    s.mean = count ? static_cast<double>(total) / static_cast<double>(count) : 0.0;
    return s;
  }

  /// Indented text dump of shape, ranks and edge annotations, for golden and
  /// determinism tests. Annotation rendering is delegated to the caller.
  template <typename Render>
  void dump(std::ostream& os, Render&& render_annot) const {
    os << "root edge " << render_annot(root_edge_) << "\n";
    dump_rec(os, root_, 0, render_annot);
  }

 private:
  // An edge slot: the parent node plus the side, or the slot above the root
  // when parent is null.
  struct EdgeRef {
    Node* parent;
    bool right;
  };

  EdgeRef edge_above(Node* n) {
    if (!n->parent) return EdgeRef{nullptr, false};
    return EdgeRef{n->parent, n->parent->right == n};
  }

  void set_child(EdgeRef e, Node* c) {
    if (!e.parent)
      root_ = c;
    else if (e.right)
      e.parent->right = c;
    else
      e.parent->left = c;
    if (c) c->parent = e.parent;
  }

  AnnotId& edge_annot(EdgeRef e) {
    if (!e.parent) return root_edge_;
    return e.right ? e.parent->right_edge : e.parent->left_edge;
  }

  Rank draw_rank(const Border& b) {
    if (policy_ == RankPolicy::random_store) return random_rank(rng_);
    return hash_rank(border_bits(b), multiplier_);
  }

  /// Splices `n` into `slot`, unzipping the former occupant `v` and the
  /// search path below it into the smaller/larger chains under `n`. The
  /// running `collected` union of all path-edge annotations is pushed onto
  /// each off-path edge as the walk passes it (only the part gathered so
  /// far), and finally onto the two edges where the split path now ends, so
  /// every search path through the area keeps its collected content.
  void unzip(EdgeRef slot, Node* v, Node* n, Rank rank) {
    (void)rank;
    ++counters_.unzip_ops;
    set_child(slot, n);  // the annotation of the edge above stays put
    if (!v) return;      // fresh leaf, nothing to split

    AnnotId collected = store_.create_empty();
    std::vector<Node*> smaller, larger;
    Node* cur = v;
    while (cur) {
      ++counters_.unzip_path_nodes;
      assert(!(n->border == cur->border) && "duplicate border");
      if (n->border < cur->border) {
        larger.push_back(cur);
        if (hooks.unzip_deposit) store_.union_into(cur->right_edge, collected);
        if (hooks.unzip_absorb) store_.union_into(collected, cur->left_edge);
        cur = cur->left;
      } else {
        smaller.push_back(cur);
        if (hooks.unzip_deposit) store_.union_into(cur->left_edge, collected);
        if (hooks.unzip_absorb) store_.union_into(collected, cur->right_edge);
        cur = cur->right;
      }
    }
    relink_chain(n, smaller, false, collected);
    relink_chain(n, larger, true, collected);
    store_.discard(collected);
  }

  // Rebuilds one side below n: the smaller parts become a chain of right
  // children under n->left, the larger parts a chain of left children under
  // n->right. Every newly created chain edge is blanked; the trailing edge
  // of the chain (or n's own edge when the side is empty) receives the full
  // collected annotation, because the queries that used to run down the
  // whole unzipped path now fall off the tree there.
  void relink_chain(Node* n, const std::vector<Node*>& parts, bool larger_side,
                    AnnotId collected) {
    Node* parent = n;
    bool side = larger_side;
    for (Node* p : parts) {
      (side ? parent->right : parent->left) = p;
      p->parent = parent;
      if (hooks.unzip_reset_new_edges)
        store_.reset(side ? parent->right_edge : parent->left_edge);
      parent = p;
      side = !larger_side;
    }
    (side ? parent->right : parent->left) = nullptr;
    AnnotId& terminal = side ? parent->right_edge : parent->left_edge;
    if (hooks.unzip_reset_new_edges && parent != n) store_.reset(terminal);
    if (hooks.unzip_seal_terminal) store_.union_into(terminal, collected);
  }

  static std::size_t depth_of(const Node* n) {
    std::size_t d = 0;
    for (; n->parent; n = n->parent) ++d;
    return d;
  }

  template <typename F>
  void walk(F&& f) const {  // pre-order, iterative
    std::vector<std::pair<const Node*, std::size_t>> stack;
    if (root_) stack.emplace_back(root_, 0);
    while (!stack.empty()) {
      auto [n, d] = stack.back();
      stack.pop_back();
      f(n, d);
      if (n->right) stack.emplace_back(n->right, d + 1);
      if (n->left) stack.emplace_back(n->left, d + 1);
    }
  }

  template <typename F>
  void in_order(F&& f) const {
    std::vector<const Node*> stack;
    const Node* cur = root_;
    while (cur || !stack.empty()) {
      while (cur) {
        stack.push_back(cur);
        cur = cur->left;
      }
      cur = stack.back();
      stack.pop_back();
      f(cur);
      cur = cur->right;
    }
  }

  static std::string key_str(const Node* n) {
    return std::to_string(n->border.key) + "/" + to_string(n->border.kind) +
           "#" + std::to_string(n->border.segment_id);
  }

  template <typename Render>
  void dump_rec(std::ostream& os, const Node* n, int depth,
                Render&& render_annot) const {
    if (!n) return;
    for (int i = 0; i < depth; ++i) os << "  ";
    os << n->border.key << " " << to_string(n->border.kind) << " #"
       << n->border.segment_id << " r" << int{rank_of(n)} << " L"
       << render_annot(n->left_edge) << " R" << render_annot(n->right_edge)
       << "\n";
    dump_rec(os, n->left, depth + 1, render_annot);
    dump_rec(os, n->right, depth + 1, render_annot);
  }

  Store& store_;
  RankPolicy policy_;
  std::uint64_t multiplier_;
  std::mt19937_64 rng_;
  Node* root_ = nullptr;
  std::size_t size_ = 0;
  AnnotId root_edge_;
  TreeCounters counters_;
};

}  // namespace zdst
