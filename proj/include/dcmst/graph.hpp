#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcmst {

using NodeId = std::uint32_t;
using Weight = std::uint32_t;

constexpr NodeId kNoNode = 0xFFFFFFFFu;

struct Edge {
  NodeId u;
  NodeId v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  Weight weight;
};

// Uniform per-node degree cap. dmax >= n-1 is equivalent to unconstrained.
struct DegreeConstraint {
  std::uint32_t dmax = 0;
};

// Immutable connected undirected graph with non-negative 32-bit integer
// weights. Weights fit in 32 bits so any spanning tree weight fits in 64
// bits without overflow for n <= 4096. Safe to share read-only across
// threads and processes once constructed.
class WeightedGraph {
 public:
  // Validates structure: n >= 2, ids in range, no self-loops, no duplicate
  // undirected edges, connected. Throws ValidationError otherwise.
  WeightedGraph(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors sorted by node id; the order is part of the deterministic
  // behavior of every operator that scans adjacency.
  const std::vector<Neighbor>& neighbors(NodeId u) const {
    return adjacency_[u];
  }

  std::uint32_t degree(NodeId u) const {
    return static_cast<std::uint32_t>(adjacency_[u].size());
  }

  bool has_edge(NodeId u, NodeId v) const { return edge_weight(u, v).has_value(); }

  // Weight of edge (u, v), or nullopt when the edge is absent.
  std::optional<Weight> edge_weight(NodeId u, NodeId v) const;

 private:
  std::uint32_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Edge-list text format: first line is the node count, every following
// non-empty line is "u v w"; lines starting with '#' are comments; LF or
// CRLF endings. Throws ParseError (with line number) or ValidationError.
WeightedGraph load_graph(const std::string& path);
WeightedGraph parse_graph(const std::string& text);
void save_graph(const WeightedGraph& g, const std::string& path);
std::string format_graph(const WeightedGraph& g);

// Connected random instance: a spanning tree over a seed-shuffled node
// permutation plus distinct extra edges up to round(density*n*(n-1)/2),
// weights uniform in [1, 10^6]. Pure function of (n, density, seed).
WeightedGraph generate_random_graph(std::uint32_t n, double density,
                                    std::uint64_t seed);

// Exact MST weight (classic Kruskal + union-find). Reference oracle.
std::uint64_t mst_weight_reference(const WeightedGraph& g);

// Exact degree-constrained MST weight by enumerating all spanning trees
// whose node degrees stay within c. nullopt means no feasible tree exists.
// Guarded to n <= 10 (throws InstanceTooLarge).
std::optional<std::uint64_t> dcmst_bruteforce(const WeightedGraph& g,
                                              DegreeConstraint c);

}  // namespace dcmst
