#pragma once

#include <cstdint>
#include <optional>

#include "dcmst/graph.hpp"
#include "dcmst/nde.hpp"

namespace dcmst {

// One candidate prune-and-reattach application. The move detaches the
// subtree slice rooted at prune_index and reinserts it directly under
// attach_node; the pruned node stays the root of the moved slice, so
// exactly one tree edge changes:
//   removed (old_parent, prune_node), added (attach_node, prune_node).
struct PaoMove {
  std::uint32_t prune_index;  // >= 1, the root is never pruned
  NodeId prune_node;
  NodeId old_parent;
  NodeId attach_node;
  std::int64_t delta;  // w(attach_node, prune_node) - w(old_parent, prune_node)
  std::uint64_t seed;  // PRNG seed that produced this move

  friend bool operator==(const PaoMove&, const PaoMove&) = default;
};

// Sentinel delta carried on the wire when a worker found no move.
constexpr std::int64_t kNoMoveDelta = INT64_MAX;

// Degree-constrained spanning tree via Kruskal's edge scan (ascending
// weight, equal weights in seed-shuffled order) with the extra rejection
// rule for edges that would push an endpoint past dmax. Retries with a
// reshuffle up to 32 attempts, then throws ConstructionFailed. The result
// is re-rooted at node 0 and canonically encoded.
NdeTree kruskal_constrained(const WeightedGraph& g, DegreeConstraint c,
                            std::uint64_t seed);

constexpr int kKruskalAttempts = 32;

// One randomized trial: draw a prune index uniformly from 1..n-1, collect
// the pruned node's graph neighbors that lie outside its subtree slice,
// are not its current parent, and have tree degree < dmax, then draw the
// attach node uniformly among them. Redraws the prune index up to 16
// attempts; nullopt (no move found) is a normal outcome, not a failure.
// Pure function of (t, seed): identical result across runs and platforms.
std::optional<PaoMove> pao(const NdeTree& t, const WeightedGraph& g,
                           DegreeConstraint c, std::uint64_t seed);

constexpr int kPaoAttempts = 16;

// Applies a move to a copy of t: the slice [prune_index, subtree end) is
// removed and reinserted immediately after attach_node's entry with every
// depth rebased by (depth[attach] + 1 - depth[prune]). Weight and degree
// caches move by delta updates. Throws StaleMove when the move no longer
// matches t (wrong parent, attach inside the slice, degree cap, or delta
// disagreeing with the graph) -- this defends the distributed path where a
// satellite's move may race a newer tree version.
NdeTree apply_move(const NdeTree& t, const PaoMove& m, const WeightedGraph& g,
                   const DegreeConstraint& c);

}  // namespace dcmst
