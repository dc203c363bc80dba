#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dcmst/graph.hpp"
#include "dcmst/nde.hpp"
#include "dcmst/operators.hpp"
#include "dcmst/prng.hpp"
#include "dcmst/thread_pool.hpp"

namespace dcmst {

struct EaConfig {
  std::uint32_t population_size = 16;  // P >= 2
  std::uint32_t trials_per_tree = 0;   // T; 0 = ceil(sqrt(n)), resolved at init
  std::uint64_t max_iterations = 0;
  std::optional<std::uint64_t> target_weight;  // early stop when best <= target
  std::uint64_t master_seed = 0;
  std::uint32_t dmax = 0;

  DegreeConstraint constraint() const { return DegreeConstraint{dmax}; }
};

// Smallest T with T*T >= n (integer, so platform-exact).
std::uint32_t default_trials_per_tree(std::uint32_t n);

struct Population {
  std::vector<NdeTree> trees;
  std::uint32_t best_index = 0;  // minimum weight, ties to the lowest slot
  std::uint64_t generation = 0;

  const NdeTree& best() const { return trees[best_index]; }
  void refresh_best_index();
};

// Winner of one batch of trials on one tree: the move with the most
// negative delta, ties broken by the lowest trial index. Absent when every
// trial came back empty.
struct BestTrial {
  PaoMove move;
  std::uint32_t trial_index;
};

// Runs the trials of one generation for one tree and reduces them to the
// winner. The local implementation fans out over an in-process pool; the
// distributed one ships the tree to satellites. Both must reduce by
// (delta, trial_index), which keeps results independent of how trials are
// scheduled.
class TrialExecutor {
 public:
  virtual ~TrialExecutor() = default;

  virtual std::optional<BestTrial> run_trials(const NdeTree& tree,
                                              std::uint32_t tree_slot,
                                              std::uint64_t generation,
                                              std::uint32_t trial_count) = 0;
};

// Reduction over an array of per-trial outcomes, shared by the local
// executor, the satellite and unit tests.
std::optional<BestTrial> reduce_trials(
    const std::vector<std::optional<PaoMove>>& results,
    std::uint32_t first_trial_index = 0);

class LocalExecutor final : public TrialExecutor {
 public:
  LocalExecutor(const WeightedGraph& g, DegreeConstraint c,
                SeedSchedule schedule, unsigned threads);

  std::optional<BestTrial> run_trials(const NdeTree& tree, std::uint32_t tree_slot,
                                      std::uint64_t generation,
                                      std::uint32_t trial_count) override;

 private:
  const WeightedGraph& graph_;
  DegreeConstraint constraint_;
  SeedSchedule schedule_;
  std::unique_ptr<ThreadPool> pool_;  // null = run inline
};

struct SolveReport {
  std::uint64_t best_weight = 0;
  NdeTree best_tree;
  std::uint64_t iterations = 0;
  double avg_iteration_seconds = 0.0;
  std::uint64_t accepted_moves = 0;
  double acceptance_rate = 0.0;  // accepted / (2 * iterations)
};

// P trees built by the constrained Kruskal initializer with schedule seeds
// at generation 0. Throws ConstructionFailed if any individual cannot be
// built.
Population init_population(const WeightedGraph& g, DegreeConstraint c,
                           const EaConfig& cfg);

// The improvement-only loop, stepwise. One step = pick a random pair of
// distinct population slots, run T trials per selected tree, apply each
// tree's best strictly-improving move, bump the generation counter. The
// trajectory is a pure function of (graph, cfg), independent of executor
// parallelism.
class Solver {
 public:
  Solver(const WeightedGraph& g, const EaConfig& cfg, TrialExecutor& executor);

  void step();
  const Population& population() const { return pop_; }
  std::uint64_t generation() const { return pop_.generation; }
  std::uint64_t best_weight() const { return pop_.best().weight(); }
  const NdeTree& best_tree() const { return pop_.best(); }
  std::uint64_t accepted_moves() const { return accepted_moves_; }
  std::uint32_t trials_per_tree() const { return trials_; }

  // FNV-1a over every tree's wire words in slot order; the per-generation
  // fingerprint used by the determinism and equivalence checks.
  std::uint64_t population_hash() const;

  bool target_reached() const;

  // Loops step() until max_iterations or target_weight. Timing covers the
  // generation loop only.
  SolveReport run();

 private:
  const WeightedGraph& graph_;
  EaConfig cfg_;
  DegreeConstraint constraint_;
  SeedSchedule schedule_;
  TrialExecutor& executor_;
  Population pop_;
  std::uint32_t trials_;
  std::uint64_t accepted_moves_ = 0;
};

// Single-call local solve: init, loop, report.
SolveReport run(const WeightedGraph& g, DegreeConstraint c, const EaConfig& cfg,
                unsigned threads);

}  // namespace dcmst
