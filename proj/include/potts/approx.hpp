#pragma once

// Validators and small-scale oracles for the approximation machinery:
// parity-constrained boundary structures (xi-odd sets, semi-odd pairs and
// triples, t-tightness), four-approximations with their D-set recovery maps,
// the level-1..4 approximation predicates, and minimal vertex covers of
// bipartite graphs with the weighted cover-sum bound.
//
// Unknown-region degree thresholds compare against floor(sqrt(d)).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "potts/breakup.hpp"

namespace potts {

// Internal boundary of U in the graph with the edges of xi removed.
Region internal_boundary_without(const Region& u, const EdgeSet& xi);

bool is_xi_odd(const Region& u, const EdgeSet& xi);
bool is_xi_even(const Region& u, const EdgeSet& xi);

struct SemiOddPair {
  Region u_bullet;  // approximation of U
  Region u_circ;    // approximation of U^c
  Region unknown() const;  // U_* = complement of the union
};

bool is_semi_odd_pair(const SemiOddPair& p);
// Triple (U_bullet, U, U_circ): both bracketing pairs semi-odd.
bool is_semi_odd_triple(const Region& u_bullet, const Region& u, const Region& u_circ);
// The displayed characterization: containments plus boundary containment of
// the even/odd interface of U in the known boundary.
bool semi_odd_triple_characterization(const Region& u_bullet, const Region& u,
                                      const Region& u_circ);
bool is_t_tight(const SemiOddPair& p, double t);

// Twelve-tuple of a four-approximation: exact phases A_l plus the unknown
// dilemma sets. a_bullet(i,j) with i in {1,2}, j in {0,3}.
struct FourApprox {
  Window window;
  std::array<Region, 4> a;     // A_0..A_3 (A_0 cofinite allowed)
  Region bullet[2][2];         // a_bullet(i,j) = bullet[i-1][j==3]
  Region circ[2][2];           // a_circ(i,j)

  explicit FourApprox(const Window& w);
  Region& a_bullet(int i, int j) { return bullet[i - 1][j == 3]; }
  Region& a_circ(int i, int j) { return circ[i - 1][j == 3]; }
  const Region& a_bullet(int i, int j) const { return bullet[i - 1][j == 3]; }
  const Region& a_circ(int i, int j) const { return circ[i - 1][j == 3]; }
};

// Definition clauses (a)-(c): partition, parity of the dilemma sets, and the
// floor(sqrt(d)) degree bound on the unknown subgraph.
Validation validate_four_approx(const FourApprox& a);
// Clauses (d)-(f) of approximation of a concrete four-section.
Validation approximates(const FourApprox& a, const FourSection& k);

// The exact approximation of K: A_l = K_l, all dilemma sets empty.
FourApprox exact_approx_of(const FourSection& k);

struct DSets {
  Region bullet[2][2];  // D_bullet(i,j) = A_bullet(i,j) n K_i
  Region circ[2][2];    // D_circ(i,j)   = A_circ(i,j) n K_j
};

DSets compute_D(const FourApprox& a, const FourSection& k);
// D_star(i,j) = D_circ(i,j) minus the up-shift of g^{-1}(2).
std::array<std::array<Region, 2>, 2> compute_D_star(const FourApprox& a, const FourSection& k,
                                                    const Coloring& g, const Direction& down);

// Reconstructs K from A and the D-sets per the recovery displays.
FourSection recover_from_D(const FourApprox& a, const DSets& d);
// Each family alone determines the other through the neighbor identities.
DSets recover_D_from_bullet(const FourApprox& a, const DSets& bullet_only);
DSets recover_D_from_circ(const FourApprox& a, const DSets& circ_only);

// Brute-force enumeration of every four-section over the window that the
// approximation admits (test-scale; the number of unknown cells is capped).
std::vector<FourSection> enumerate_compatible(const FourApprox& a, int unknown_cap = 20);

// Diagnostic partition of the lower boundary of K12 by the knowledge state
// of the cell and of its up-neighbor.
struct BPartition {
  Region b1_1;  // unknown below, unknown above
  Region b0_1;  // unknown below, known above
  Region b_0;   // cell itself unknown (in a bullet dilemma set)
};
BPartition b_partition(const FourSection& k, const FourApprox& a, const Direction& down);

// ---- level-l approximation predicates ----------------------------------

// Level 1: W must equal the singularity set; N(U) u W u N_{d/18}(W)
// separates K; revealed vertices are captured by U. The size clause carries
// an unspecified constant in the source material, so the budget is supplied
// by the caller (pass a negative budget to skip the size clause).
Validation is_level1_approx(const Region& u, const Region& w_set, const FourSection& k,
                            double size_budget = -1);

// Level 2: per-phase known sets containing all singular and near-singular
// vertices; size clause budget as above.
Validation is_level2_approx(const std::array<Region, 4>& a, const FourSection& k,
                            double size_budget = -1);

struct Level3Approx {
  std::array<Region, 4> a;  // level-2 part
  Region a10, a23, a20, a13;
};

Validation is_level3_approx(const Level3Approx& a, const FourSection& k,
                            double level2_budget = -1);

// Level 4: an exhausted information system indexed by subsets of {0,1,2,3}.
struct InfoSystem {
  Window window;
  std::array<Region, 16> sets;  // index = bitmask of I
  explicit InfoSystem(const Window& w);
  const Region& at(std::initializer_list<int> ls) const;
  Region& at(std::initializer_list<int> ls);
};

bool is_exhausted(const InfoSystem& a);
bool system_respects(const InfoSystem& a, const FourSection& k);
Validation is_level4_approx(const InfoSystem& a, const FourSection& k, double level2_budget = -1);

// A_I := intersection over the candidate list of K_I, per the level-4
// construction recipe; the candidate set is supplied explicitly.
InfoSystem system_from_candidates(const std::vector<FourSection>& candidates);

// The four-approximation read off a level-4 system.
FourApprox four_approx_from_system(const InfoSystem& a);

// ---- minimal vertex covers ----------------------------------------------

struct BipartiteGraph {
  int n_bullet = 0;
  int n_circ = 0;
  std::vector<std::pair<int, int>> edges;  // (bullet index, circ index)
};

struct MinimalCover {
  std::vector<int> bullet;  // ascending
  std::vector<int> circ;    // ascending
};

// All inclusion-minimal vertex covers, split by part; exhaustive over vertex
// subsets, capped at 20 vertices total.
std::vector<MinimalCover> minimal_vertex_covers(const BipartiteGraph& g);

// The displayed fixed-point characterization of minimal covers.
bool is_minimal_cover(const BipartiteGraph& g, const std::vector<int>& v_bullet,
                      const std::vector<int>& v_circ);

// Sum over minimal covers of the product of vertex weights. Requires
// p_u + p_v <= 1 on every edge.
double cover_sum(const BipartiteGraph& g, const std::vector<double>& p_bullet,
                 const std::vector<double>& p_circ);

}  // namespace potts
