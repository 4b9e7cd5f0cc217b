#include "lexsearch/fast_bfs.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>

namespace lexsearch {

PartitionList::PartitionList(std::size_t n) : vertex_links_(n + 1), set_of_(n + 1, kNoSet) {}

PartitionList::SetId PartitionList::allocate(std::uint64_t edited) {
  SetId id;
  if (!free_sets_.empty()) {
    id = free_sets_.back();
    free_sets_.pop_back();
    sets_[id] = RefineSet{};
  } else {
    id = static_cast<SetId>(sets_.size());
    sets_.emplace_back();
    set_links_.grow(sets_.size());
  }
  sets_[id].edited = edited;
  ++counters_.set_creations;
  return id;
}

PartitionList::SetId PartitionList::create_front(std::uint64_t edited) {
  const SetId id = allocate(edited);
  set_links_.push_front(order_, id);
  return id;
}

PartitionList::SetId PartitionList::create_rear(std::uint64_t edited) {
  const SetId id = allocate(edited);
  set_links_.push_back(order_, id);
  return id;
}

PartitionList::SetId PartitionList::create_before(SetId anchor, std::uint64_t edited) {
  const SetId id = allocate(edited);
  set_links_.insert_before(order_, anchor, id);
  return id;
}

void PartitionList::release_if_empty(SetId s) {
  if (!sets_[s].elements.empty()) return;
  set_links_.erase(order_, s);
  free_sets_.push_back(s);
  ++counters_.set_removals;
}

void PartitionList::insert(Vertex v, SetId target) {
  assert(!contains(v));
  vertex_links_.push_back(sets_[target].elements, v);
  set_of_[v] = target;
  ++counters_.node_moves;
}

void PartitionList::move(Vertex v, SetId target) {
  const SetId from = set_of_[v];
  assert(from != kNoSet && from != target);
  vertex_links_.erase(sets_[from].elements, v);
  vertex_links_.push_back(sets_[target].elements, v);
  set_of_[v] = target;
  ++counters_.node_moves;
  release_if_empty(from);
}

Vertex PartitionList::pop_first() {
  assert(!empty());
  const SetId s = order_.first;
  const Vertex v = sets_[s].elements.first;
  vertex_links_.erase(sets_[s].elements, v);
  set_of_[v] = kNoSet;
  ++counters_.node_moves;
  release_if_empty(s);
  return v;
}

std::vector<Vertex> PartitionList::members(SetId s) const {
  std::vector<Vertex> out;
  out.reserve(sets_[s].elements.size);
  vertex_links_.for_each(sets_[s].elements, [&](std::uint32_t v) { out.push_back(v); });
  return out;
}

std::vector<std::vector<Vertex>> PartitionList::snapshot() const {
  std::vector<std::vector<Vertex>> out;
  set_links_.for_each(order_, [&](std::uint32_t s) { out.push_back(members(s)); });
  return out;
}

void split_step(PartitionList& partition, std::span<const Vertex> neighbors, std::size_t step,
                SearchKind kind) {
  assert(kind == SearchKind::LexBFS || kind == SearchKind::LexUP);
  const bool fresh_at_front = kind == SearchKind::LexUP;
  for (const Vertex w : neighbors) {
    if (partition.contains(w)) {
      const auto from = partition.set_of(w);
      PartitionList::SetId target;
      if (partition.edited(from) < step) {
        partition.set_edited(from, step);
        target = partition.create_before(from, step);
      } else {
        target = partition.previous(from);
        assert(target != PartitionList::kNoSet && partition.edited(target) == step);
      }
      partition.move(w, target);
      continue;
    }
    PartitionList::SetId fresh;
    if (partition.unlabelled_edited < step) {
      partition.unlabelled_edited = step;
      fresh = fresh_at_front ? partition.create_front(step) : partition.create_rear(step);
    } else {
      fresh = fresh_at_front ? partition.first_set() : partition.last_set();
    }
    partition.insert(w, fresh);
  }
}

RefinementTree::RefinementTree(std::size_t n)
    : nodes_(1), node_links_(1), vertex_links_(n + 1), node_of_(n + 1, kNoNode) {}

RefinementTree::NodeId RefinementTree::create_child(NodeId parent, std::uint64_t edited) {
  NodeId id;
  if (!free_nodes_.empty()) {
    id = free_nodes_.back();
    free_nodes_.pop_back();
  } else {
    id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    node_links_.grow(nodes_.size());
  }
  nodes_[id] = Node{parent, edited, {}, {}};
  node_links_.push_front(nodes_[parent].children, id);
  ++counters_.set_creations;
  return id;
}

void RefinementTree::prune(NodeId x) {
  while (x != kRoot && nodes_[x].elements.empty() && nodes_[x].children.empty()) {
    const NodeId p = nodes_[x].parent;
    node_links_.erase(nodes_[p].children, x);
    free_nodes_.push_back(x);
    ++counters_.set_removals;
    x = p;
  }
}

void RefinementTree::insert(Vertex v, NodeId target) {
  assert(!contains(v) && target != kRoot);
  vertex_links_.push_back(nodes_[target].elements, v);
  node_of_[v] = target;
  ++counters_.node_moves;
}

void RefinementTree::move(Vertex v, NodeId target) {
  const NodeId from = node_of_[v];
  assert(from != kNoNode && from != target && target != kRoot);
  vertex_links_.erase(nodes_[from].elements, v);
  vertex_links_.push_back(nodes_[target].elements, v);
  node_of_[v] = target;
  ++counters_.node_moves;
  prune(from);
}

Vertex RefinementTree::pop_greatest() {
  assert(!empty());
  NodeId x = kRoot;
  do {
    x = nodes_[x].children.first;
    ++counters_.tree_descents;
  } while (!nodes_[x].children.empty());
  // Pruning guarantees that a childless node is non-empty.
  const Vertex v = nodes_[x].elements.first;
  vertex_links_.erase(nodes_[x].elements, v);
  node_of_[v] = kNoNode;
  ++counters_.node_moves;
  prune(x);
  return v;
}

std::vector<Vertex> RefinementTree::members(NodeId x) const {
  std::vector<Vertex> out;
  out.reserve(nodes_[x].elements.size);
  vertex_links_.for_each(nodes_[x].elements, [&](std::uint32_t v) { out.push_back(v); });
  return out;
}

std::vector<RefinementTree::NodeId> RefinementTree::post_order() const {
  std::vector<NodeId> out;
  // (node, children already expanded)
  std::vector<std::pair<NodeId, bool>> stack;
  for (NodeId c = nodes_[kRoot].children.last; c != kNoNode; c = node_links_.prev(c)) {
    stack.emplace_back(c, false);
  }
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      out.push_back(x);
      continue;
    }
    stack.emplace_back(x, true);
    for (NodeId c = nodes_[x].children.last; c != kNoNode; c = node_links_.prev(c)) {
      stack.emplace_back(c, false);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> RefinementTree::snapshot() const {
  std::vector<std::vector<Vertex>> out;
  for (const NodeId x : post_order()) {
    if (set_size(x) != 0) out.push_back(members(x));
  }
  return out;
}

void split_step(RefinementTree& tree, std::span<const Vertex> neighbors, std::size_t step) {
  for (const Vertex w : neighbors) {
    const auto from = tree.contains(w) ? tree.node_of(w) : RefinementTree::kRoot;
    RefinementTree::NodeId target;
    if (tree.edited(from) < step) {
      tree.set_edited(from, step);
      target = tree.create_child(from, step);
    } else {
      target = tree.first_child(from);
    }
    if (from == RefinementTree::kRoot) {
      tree.insert(w, target);
    } else {
      tree.move(w, target);
    }
  }
}

namespace {

// Neighbor lists sorted by id, built in O(n + m) by bucketing.
std::vector<std::vector<Vertex>> sorted_adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out(n + 1);
  for (Vertex v = 1; v <= n; ++v) out[v].reserve(g.degree(v));
  for (Vertex v = 1; v <= n; ++v) {
    for (const Vertex w : g.neighbors(v)) out[w].push_back(v);
  }
  return out;
}

// State shared by the refinement engines: numbering, sorted adjacency, the
// restart rule and (with check_invariants) materialized labels.
class RefinementSearch {
 protected:
  RefinementSearch(const Graph& g, SearchKind kind, const EngineOptions& options)
      : g_(g),
        kind_(kind),
        options_(options),
        n_(g.vertex_count()),
        adjacency_(sorted_adjacency(g)),
        numbered_(n_ + 1, 0) {
    if (options_.check_invariants) labels_.resize(n_ + 1);
  }

  // Numbers `v` and collects its unnumbered neighbors in `scratch_`.
  void number(Vertex v, Ordering& order) {
    numbered_[v] = 1;
    order.push_back(v);
    scratch_.clear();
    for (const Vertex w : adjacency_[v]) {
      if (!numbered_[w]) scratch_.push_back(w);
    }
  }

  void update_labels(std::size_t step) {
    for (const Vertex w : scratch_) apply_update(labels_[w], kind_, step, n_);
  }

  Vertex next_restart(std::size_t step) {
    if (!options_.allow_disconnected) {
      throw DisconnectedGraphError(
          "graph is disconnected: no labeled unnumbered vertex at step " + std::to_string(step));
    }
    while (numbered_[restart_cursor_]) ++restart_cursor_;
    if (options_.check_invariants) labels_[restart_cursor_] = Label::source();
    return restart_cursor_;
  }

  [[noreturn]] void fail(std::size_t step, const std::string& what) const {
    throw InvariantViolation(std::string(to_string(kind_)) + " step " + std::to_string(step) +
                             ": " + what);
  }

  // Checks that `sets` (front to back) hold exactly the labeled unnumbered
  // vertices, with equal labels inside a set and strictly decreasing labels
  // across sets. `contains` reports structure membership.
  template <typename Contains>
  void check_order(std::size_t step, const std::vector<std::vector<Vertex>>& sets,
                   Contains&& contains) const {
    std::size_t labeled_unnumbered = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (numbered_[v]) {
        if (contains(v)) fail(step, "numbered vertex still listed");
        continue;
      }
      if (labels_[v].empty() == contains(v)) {
        fail(step, "membership disagrees with label for vertex " + std::to_string(v));
      }
      if (!labels_[v].empty()) ++labeled_unnumbered;
    }
    std::size_t listed = 0;
    const Label* previous_label = nullptr;
    for (const auto& members : sets) {
      if (members.empty()) fail(step, "empty set listed");
      for (const Vertex v : members) {
        if (labels_[v] != labels_[members.front()]) {
          std::ostringstream msg;
          msg << "labels differ inside a set: " << members.front() << labels_[members.front()]
              << " vs " << v << labels_[v];
          fail(step, msg.str());
        }
      }
      listed += members.size();
      const Label& label = labels_[members.front()];
      if (previous_label && lex_compare(*previous_label, label) <= 0) {
        std::ostringstream msg;
        msg << "sets not strictly decreasing: " << *previous_label << " then " << label;
        fail(step, msg.str());
      }
      previous_label = &label;
    }
    if (listed != labeled_unnumbered) fail(step, "listed vertex count mismatch");
  }

  const Graph& g_;
  SearchKind kind_;
  EngineOptions options_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<char> numbered_;
  Vertex restart_cursor_ = 1;
  std::vector<Label> labels_;  // only with check_invariants
  std::vector<Vertex> scratch_;
};

class PartitionSearch : RefinementSearch {
 public:
  PartitionSearch(const Graph& g, SearchKind kind, const EngineOptions& options,
                  PartitionSeeding seeding)
      : RefinementSearch(g, kind, options), partition_(n_) {
    enlist_fresh(g_.source());
    if (options_.check_invariants) labels_[g_.source()] = Label::source();
    if (seeding == PartitionSeeding::AllVertices && n_ > 1) {
      const auto rest = partition_.create_rear(0);
      for (Vertex v = 1; v <= n_; ++v) {
        if (v != g_.source()) partition_.insert(v, rest);
      }
      seeded_ = true;
    }
  }

  EngineResult run() {
    EngineResult result;
    result.order.reserve(n_);
    for (std::size_t step = 1; step <= n_; ++step) {
      if (partition_.empty()) enlist_fresh(next_restart(step));
      number(partition_.pop_first(), result.order);
      split_step(partition_, scratch_, step, kind_);
      if (options_.check_invariants) {
        update_labels(step);
        if (!seeded_) check_invariants(step);
      }
    }
    result.counters = partition_.counters();
    return result;
  }

 private:
  void enlist_fresh(Vertex v) { partition_.insert(v, partition_.create_rear(0)); }

  void check_invariants(std::size_t step) const {
    std::vector<std::vector<Vertex>> sets;
    for (auto s = partition_.first_set(); s != PartitionList::kNoSet; s = partition_.next(s)) {
      if (partition_.edited(s) > step) fail(step, "edited stamp from the future");
      sets.push_back(partition_.members(s));
      for (const Vertex v : sets.back()) {
        if (partition_.set_of(v) != s) fail(step, "stale set handle for " + std::to_string(v));
      }
    }
    check_order(step, sets, [&](Vertex v) { return partition_.contains(v); });
  }

  PartitionList partition_;
  bool seeded_ = false;
};

class TreeSearch : RefinementSearch {
 public:
  TreeSearch(const Graph& g, const EngineOptions& options)
      : RefinementSearch(g, SearchKind::LexUP, options), tree_(n_) {
    enlist_fresh(g_.source());
    if (options_.check_invariants) labels_[g_.source()] = Label::source();
  }

  EngineResult run() {
    EngineResult result;
    result.order.reserve(n_);
    for (std::size_t step = 1; step <= n_; ++step) {
      if (tree_.empty()) enlist_fresh(next_restart(step));
      number(tree_.pop_greatest(), result.order);
      split_step(tree_, scratch_, step);
      if (options_.check_invariants) {
        update_labels(step);
        check_invariants(step);
      }
    }
    result.counters = tree_.counters();
    return result;
  }

 private:
  void enlist_fresh(Vertex v) {
    tree_.insert(v, tree_.create_child(RefinementTree::kRoot, 0));
  }

  void check_invariants(std::size_t step) const {
    std::vector<std::vector<Vertex>> sets;
    for (const auto x : tree_.post_order()) {
      if (tree_.edited(x) > step) fail(step, "edited stamp from the future");
      const bool leaf = tree_.first_child(x) == RefinementTree::kNoNode;
      if (tree_.set_size(x) == 0) {
        if (leaf) fail(step, "empty leaf left in the tree");
        continue;
      }
      sets.push_back(tree_.members(x));
      for (const Vertex v : sets.back()) {
        if (tree_.node_of(v) != x) fail(step, "stale node handle for " + std::to_string(v));
      }
      // A child's label extends its parent's by exactly one entry.
      const auto p = tree_.parent(x);
      if (p != RefinementTree::kRoot && tree_.set_size(p) != 0) {
        const Label& mine = labels_[sets.back().front()];
        const Label& theirs = labels_[tree_.members(p).front()];
        const bool extends =
            mine.size() == theirs.size() + 1 &&
            std::equal(theirs.entries().begin(), theirs.entries().end(), mine.entries().begin());
        if (!extends) {
          std::ostringstream msg;
          msg << "child label " << mine << " does not extend parent label " << theirs;
          fail(step, msg.str());
        }
      }
    }
    check_order(step, sets, [&](Vertex v) { return tree_.contains(v); });
  }

  RefinementTree tree_;
};

}  // namespace

EngineResult fast_lexbfs(const Graph& g, const EngineOptions& options) {
  return PartitionSearch(g, SearchKind::LexBFS, options, PartitionSeeding::LabeledOnly).run();
}

EngineResult fast_lexup(const Graph& g, const EngineOptions& options) {
  return TreeSearch(g, options).run();
}

EngineResult flat_lexup(const Graph& g, const EngineOptions& options, PartitionSeeding seeding) {
  return PartitionSearch(g, SearchKind::LexUP, options, seeding).run();
}

}  // namespace lexsearch
