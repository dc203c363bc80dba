#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dcmst/graph.hpp"

namespace dcmst {

struct NdeEntry {
  NodeId node;
  std::uint32_t depth;

  friend bool operator==(const NdeEntry&, const NdeEntry&) = default;
};

// Contiguous slice of entries [start, end) forming one subtree. end is the
// first index after start whose depth is <= the depth at start.
struct SubtreeRange {
  std::uint32_t start;
  std::uint32_t end;

  std::uint32_t size() const { return end - start; }
  bool contains(std::uint32_t index) const { return index >= start && index < end; }

  friend bool operator==(const SubtreeRange&, const SubtreeRange&) = default;
};

struct TreeCheckReport {
  bool ok = true;
  std::string message;
  std::uint32_t index = 0;  // entry index of the first violation
};

// A spanning tree stored as (node, depth) pairs in depth-first preorder.
// entries[i]'s parent is the nearest preceding entry with depth-1. Subtrees
// are contiguous slices, which is what makes prune/graft operations cheap.
// Total weight and per-node tree degrees are cached and maintained under
// delta updates. Immutable once published; mutation produces a new tree.
class NdeTree {
 public:
  NdeTree() = default;

  // Builds from a preorder entry list, checking the depth-sequence and
  // permutation invariants and that every implied edge exists in g.
  // Throws ValidationError. Used for wire decode and tests.
  static NdeTree from_entries(std::vector<NdeEntry> entries,
                              const WeightedGraph& g);

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(entries_.size()); }
  const std::vector<NdeEntry>& entries() const { return entries_; }
  std::uint64_t weight() const { return weight_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  NodeId root() const { return entries_.front().node; }

  // Index of a node in the preorder list.
  std::uint32_t position_of(NodeId node) const { return pos_[node]; }

  // Index of the parent entry of entries[index]; kNoIndex for the root.
  static constexpr std::uint32_t kNoIndex = 0xFFFFFFFFu;
  std::uint32_t parent_index_of(std::uint32_t index) const;
  NodeId parent_of_index(std::uint32_t index) const;

  SubtreeRange subtree_range(std::uint32_t index) const;

  // Parent array (root entry = kNoNode).
  std::vector<NodeId> parents() const;

  // Induced undirected edge set, normalized (min,max) and sorted.
  std::vector<std::pair<NodeId, NodeId>> edge_set() const;

  // Checks every invariant against g; reports the first violation.
  TreeCheckReport validate(const WeightedGraph& g) const;

  // 64-bit words "depth<<32 | node" in preorder, the wire layout.
  std::vector<std::uint64_t> to_words() const;
  static NdeTree from_words(const std::uint64_t* words, std::uint32_t n,
                            const WeightedGraph& g);

 private:
  friend NdeTree encode(const std::vector<NodeId>&, const WeightedGraph&);
  friend NdeTree apply_move(const NdeTree&, const struct PaoMove&,
                            const WeightedGraph&, const DegreeConstraint&);
  std::vector<NdeEntry> entries_;
  std::vector<std::uint32_t> pos_;      // node id -> preorder index
  std::vector<std::uint32_t> degrees_;  // node id -> tree degree
  std::uint64_t weight_ = 0;

  void rebuild_positions();
};

// Canonical encoding of a spanning tree given as a parent array (root has
// parent kNoNode): preorder DFS visiting children in ascending node id.
// Throws ValidationError when the array is not a spanning tree of g or an
// implied edge is missing.
NdeTree encode(const std::vector<NodeId>& parent_array, const WeightedGraph& g);

// Inverse reading of the list. Throws ValidationError on a bad depth
// sequence. (NdeTree values built by this library always decode cleanly;
// this is the generic entry-list reading used by tests and tools.)
std::vector<NodeId> decode(const std::vector<NdeEntry>& entries);

inline std::vector<NodeId> decode(const NdeTree& t) { return t.parents(); }

}  // namespace dcmst
