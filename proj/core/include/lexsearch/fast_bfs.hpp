#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lexsearch/counters.hpp"
#include "lexsearch/detail/link_table.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/label.hpp"
#include "lexsearch/types.hpp"

namespace lexsearch {

// Ordered list of vertex sets for partition refinement. Every set is itself
// a linked sequence of vertices; a vertex belongs to at most one set. Sets
// carry an `edited` stamp: the last step at which a split touched them.
class PartitionList {
 public:
  using SetId = std::uint32_t;
  static constexpr SetId kNoSet = detail::kNil;

  // Vertices 1..n.
  explicit PartitionList(std::size_t n);

  SetId create_front(std::uint64_t edited);
  SetId create_rear(std::uint64_t edited);
  SetId create_before(SetId anchor, std::uint64_t edited);

  // Appends a vertex not yet in the partition to `target`.
  void insert(Vertex v, SetId target);
  // Moves `v` to the rear of `target`; its old set is unlinked if emptied.
  void move(Vertex v, SetId target);
  // Removes and returns the first vertex of the first set.
  Vertex pop_first();

  bool empty() const noexcept { return order_.empty(); }
  bool contains(Vertex v) const noexcept { return set_of_[v] != kNoSet; }
  SetId set_of(Vertex v) const noexcept { return set_of_[v]; }
  SetId first_set() const noexcept { return order_.first; }
  SetId last_set() const noexcept { return order_.last; }
  SetId previous(SetId s) const noexcept { return set_links_.prev(s); }
  SetId next(SetId s) const noexcept { return set_links_.next(s); }
  std::uint64_t edited(SetId s) const noexcept { return sets_[s].edited; }
  void set_edited(SetId s, std::uint64_t step) noexcept { sets_[s].edited = step; }
  std::size_t set_count() const noexcept { return order_.size; }
  std::size_t set_size(SetId s) const noexcept { return sets_[s].elements.size; }

  std::vector<Vertex> members(SetId s) const;
  // Sets front to back, each in element order.
  std::vector<std::vector<Vertex>> snapshot() const;

  // Step at which the current never-labeled set was created.
  std::uint64_t unlabelled_edited = 0;

  const OpCounters& counters() const noexcept { return counters_; }

 private:
  struct RefineSet {
    std::uint64_t edited = 0;
    detail::LinkTable::Chain elements;
  };

  SetId allocate(std::uint64_t edited);
  void release_if_empty(SetId s);

  std::vector<RefineSet> sets_;
  std::vector<SetId> free_sets_;
  detail::LinkTable set_links_;
  detail::LinkTable::Chain order_;
  detail::LinkTable vertex_links_;
  std::vector<SetId> set_of_;
  OpCounters counters_;
};

// One refinement pass for the vertex numbered at `step`. `neighbors` are its
// unnumbered neighbors: those already in the partition move to a set created
// just before their current one (one per source set and step); the others
// join this step's never-labeled set, created at the rear for LexBFS and at
// the front for LexUP.
void split_step(PartitionList& partition, std::span<const Vertex> neighbors, std::size_t step,
                SearchKind kind);

// Which vertices start in the partition. AllVertices seeds every
// non-source vertex into one rear set, as the textbook LexBFS does.
enum class PartitionSeeding { LabeledOnly, AllVertices };

// Equal-label vertex sets arranged as the trie of their labels: a child's
// label is its parent's plus one entry, and children are kept newest first.
// When every new entry exceeds all earlier ones (LexUP), a post-order walk
// visits the sets in decreasing label order, so the greatest set is the
// leftmost leaf. The root stands for the empty label and holds no vertices.
// Empty childless nodes are pruned as soon as they appear.
class RefinementTree {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kNoNode = detail::kNil;

  // Vertices 1..n.
  explicit RefinementTree(std::size_t n);

  // New first child of `parent`.
  NodeId create_child(NodeId parent, std::uint64_t edited);
  // Appends a vertex not yet in the tree to `target`.
  void insert(Vertex v, NodeId target);
  // Moves `v` to the rear of `target`, pruning its old node if that empties it.
  void move(Vertex v, NodeId target);
  // Removes and returns the first vertex of the leftmost leaf.
  Vertex pop_greatest();

  bool empty() const noexcept { return nodes_[kRoot].children.empty(); }
  bool contains(Vertex v) const noexcept { return node_of_[v] != kNoNode; }
  NodeId node_of(Vertex v) const noexcept { return node_of_[v]; }
  NodeId parent(NodeId x) const noexcept { return nodes_[x].parent; }
  NodeId first_child(NodeId x) const noexcept { return nodes_[x].children.first; }
  NodeId next_sibling(NodeId x) const noexcept { return node_links_.next(x); }
  std::uint64_t edited(NodeId x) const noexcept { return nodes_[x].edited; }
  void set_edited(NodeId x, std::uint64_t step) noexcept { nodes_[x].edited = step; }
  std::size_t set_size(NodeId x) const noexcept { return nodes_[x].elements.size; }

  std::vector<Vertex> members(NodeId x) const;
  // Non-empty sets in post-order (greatest first for LexUP labels).
  std::vector<std::vector<Vertex>> snapshot() const;
  // Non-root nodes in post-order, including empty inner ones.
  std::vector<NodeId> post_order() const;

  const OpCounters& counters() const noexcept { return counters_; }

 private:
  struct Node {
    NodeId parent = kNoNode;
    std::uint64_t edited = 0;
    detail::LinkTable::Chain children;
    detail::LinkTable::Chain elements;
  };

  void prune(NodeId x);

  std::vector<Node> nodes_;
  std::vector<NodeId> free_nodes_;
  detail::LinkTable node_links_;
  detail::LinkTable vertex_links_;
  std::vector<NodeId> node_of_;
  OpCounters counters_;
};

// One LexUP refinement pass on the tree: each unnumbered neighbor moves to a
// new child of its node (one child per node and step); never-labeled ones
// join this step's new child of the root.
void split_step(RefinementTree& tree, std::span<const Vertex> neighbors, std::size_t step);

// Linear-time LexBFS by partition refinement.
EngineResult fast_lexbfs(const Graph& g, const EngineOptions& options = {});

// Linear-time LexUP by refinement on a RefinementTree. Selection walks
// the leftmost path, whose length is one more than the selected vertex's
// label length, so the total walk is at most n + 2m.
EngineResult fast_lexup(const Graph& g, const EngineOptions& options = {});

// LexUP on the flat PartitionList: never-labeled neighbors enter at the
// front and labeled ones split off just before their set. This is not a
// correct LexUP engine, because a split set can land behind the set's
// earlier refinements, which now carry smaller labels. Test-only baseline;
// AllVertices additionally seeds every vertex into the partition.
EngineResult flat_lexup(const Graph& g, const EngineOptions& options = {},
                        PartitionSeeding seeding = PartitionSeeding::LabeledOnly);

}  // namespace lexsearch
