#pragma once

// The Flip, Shift and Mod maps and the composite coloring transformation
// with its exact inverse. Flip permutes colors on K2 and K3 so every
// singular-boundary edge becomes proper; Shift pulls the coloring on K12 one
// step against `down` and relabels, making every vertex of the upper internal
// boundary of K12 surrounded by a single color; Mod then rewrites those free
// vertices from a {0,1}-valued function h supported on an independent set.

#include <optional>

#include "potts/breakup.hpp"

namespace potts {

struct NotInImageError : std::runtime_error {
  explicit NotInImageError(const std::string& what) : std::runtime_error(what) {}
};

// h: lower-boundary cells -> {0,1}; cells of `ones` take 1. When drawn from
// the admissible family H_K, `ones` is confined to the independent set B(K).
struct ModFunction {
  Region support;  // the down-directional internal boundary of K12
  Region ones;     // subset of support where h = 1
};

struct IndependentSet {
  Region cells;
  bool exact = true;  // false when the branch-and-bound cap forced greedy
};

Coloring flip(const Coloring& f, const FourSection& k);
Coloring shift(const Coloring& f_prime, const FourSection& k, const Direction& down);

// Exact maximum independent set of the subgraph induced on the lower
// boundary of K12, with deterministic lexicographic tie-breaking. Components
// larger than `component_cap` fall back to a greedy set (flagged).
IndependentSet max_independent_set(const FourSection& k, const Direction& down,
                                   int component_cap = 24);

ModFunction zero_mod(const FourSection& k, const Direction& down);
// Independent uniform bits on B(K), zero elsewhere on the support.
ModFunction random_mod(const FourSection& k, const Direction& down, Rng& rng);

Coloring apply_mod(const Coloring& f_shifted, const FourSection& k, const Direction& down,
                   const ModFunction& h);

// The composite transformation. Requires K adapted to f and h supported per
// the admissible family (h = 0 outside B(K)).
Coloring transform(const Coloring& f, const FourSection& k, const Direction& down,
                   const ModFunction& h);

// Exact inverse on the image: recovers (f, h) with
// transform(f, k, down, h) == g, or throws NotInImageError.
std::pair<Coloring, ModFunction> invert_transform(const Coloring& g, const FourSection& k,
                                                  const Direction& down);

}  // namespace potts
