#pragma once

// Single-site heat-bath Glauber dynamics with deterministic seeded
// trajectories. One step resamples a uniformly chosen free vertex from its
// exact conditional given the neighbors; at beta = infinity the new color is
// uniform over the local-energy minimizers.

#include <cstdint>
#include <functional>
#include <vector>

#include "potts/model.hpp"
#include "potts/rng.hpp"

namespace potts {

struct SamplerConfig {
  Beta beta;
  uint64_t steps = 0;
  uint64_t seed = 0;
  enum class Init : uint8_t { PureRandomOdd, Uniform, FromFile };
  Init init = Init::PureRandomOdd;
  uint64_t snapshot_every = 0;  // 0: no snapshots
};

struct ChainState {
  Coloring coloring;
  int64_t energy = 0;  // running hamiltonian
  Rng rng;
  uint64_t step_index = 0;
  std::vector<Index> cells;  // lambda cell list for O(1) vertex choice

  // Sum of the heat-bath probabilities at the last step, for the
  // normalization bookkeeping check (should be 1 up to 2^-40).
  double last_prob_sum = 1.0;
};

// Random pure coloring: pattern-parity cells of lambda take the bc color,
// the other cells independently one of the two remaining colors. Requires
// even-i or odd-i boundary conditions.
Coloring init_pure(const Region& lambda, const BoundaryCondition& bc, Rng& rng);

// Uniform coloring on lambda.
Coloring init_uniform(const Region& lambda, const BoundaryCondition& bc, Rng& rng);

ChainState make_chain(Coloring f, Beta beta, Rng rng);

// One heat-bath update in place.
void heat_bath_step(ChainState& state, Beta beta);

// Runs cfg.steps updates. Identical inputs produce bit-identical colorings.
// The snapshot callback (when set) fires every cfg.snapshot_every steps.
using SnapshotFn = std::function<void(const Coloring&, uint64_t step)>;
ChainState run(const Region& lambda, const BoundaryCondition& bc, const SamplerConfig& cfg,
               const SnapshotFn& on_snapshot = nullptr,
               const Coloring* init_from_file = nullptr);

// Runs n_chains chains with substream seeds, in parallel, and returns their
// final states in chain order.
std::vector<ChainState> run_chains(const Region& lambda, const BoundaryCondition& bc,
                                   const SamplerConfig& cfg, unsigned n_chains);

}  // namespace potts
