#pragma once

// Colorings of a window with frozen boundary values, the Hamiltonian, and an
// exact enumeration oracle for tiny domains.
//
// A Coloring stores one color per window cell. Cells of lambda are free; all
// other cells carry the boundary values tau and are never mutated by the
// samplers. For even-i (odd-i) boundary conditions tau follows the pure
// pattern: pattern-parity cells take i and the others take i+1 (mod 3), so
// the region outside lambda contributes no improper edges.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potts/lattice.hpp"

namespace potts {

using Color = uint8_t;  // element of Z/3Z

inline Color c_add(Color a, Color b) { return Color((a + b) % 3); }
inline Color c_sub(Color a, Color b) { return Color((a + 3 - b) % 3); }
inline Color c_neg(Color a) { return Color((3 - a) % 3); }

// Inverse temperature; +infinity selects the uniform-over-minimizers limit.
struct Beta {
  double value = 0.0;
  static Beta infinity();
  bool is_inf() const;
  static Beta parse(const std::string& s);  // accepts "inf"
  std::string str() const;
};

struct BoundaryCondition {
  enum class Kind : uint8_t { EvenI, OddI, Explicit };
  Kind kind = Kind::EvenI;
  Color color = 0;  // for EvenI / OddI

  static BoundaryCondition even_i(Color i) { return {Kind::EvenI, i}; }
  static BoundaryCondition odd_i(Color i) { return {Kind::OddI, i}; }
  static BoundaryCondition explicit_bc() { return {Kind::Explicit, 0}; }
  // The sublattice fixed by tau: Even for even-i, Odd for odd-i.
  Parity fixed_parity() const { return kind == Kind::OddI ? Parity::Odd : Parity::Even; }
  std::string name() const;                                   // "even0", ..., "explicit"
  static std::optional<BoundaryCondition> from_name(const std::string&);
  bool operator==(const BoundaryCondition& o) const { return kind == o.kind && color == o.color; }
};

struct Coloring {
  Window window;
  std::vector<Color> colors;  // one per window cell
  Region lambda;              // free cells; lambda.window == window
  BoundaryCondition bc;

  Color at(Index idx) const { return colors[size_t(idx)]; }
  Color at(const Vertex& v) const { return colors[size_t(window.index_of(v))]; }
  void set(Index idx, Color c) { colors[size_t(idx)] = c; }
  bool operator==(const Coloring& o) const;
};

// The pure-pattern color of a vertex under the given boundary conditions.
Color pattern_color(const BoundaryCondition& bc, const Vertex& v);

// Builds a coloring over lambda's window (which must contain lambda plus its
// external boundary) with every cell set to the pattern of bc. Explicit bc
// starts from all zeros; the caller supplies the halo.
Coloring make_coloring(const Region& lambda, const BoundaryCondition& bc);

// Copies f onto a window enlarged by `extra`, filling new cells with the
// pattern. Intended for window-insensitivity checks.
Coloring widen(const Coloring& f, Coord extra);

// Number of monochromatic edges with at least one endpoint in lambda.
int64_t hamiltonian(const Coloring& f);

// All monochromatic nearest-neighbor edges within the window.
EdgeSet improper_edges(const Coloring& f);

// Neighbor color census (n0, n1, n2) of a free vertex; sums to 2d.
std::array<int, 3> local_field(const Coloring& f, const Vertex& v);
std::array<int, 3> local_field(const Coloring& f, Index idx);

struct BcValidation {
  bool ok = true;
  std::string reason;  // first violated condition when !ok
};

// Checks that lambda is a domain and that the parity/color conditions of the
// declared kind hold (fixed sublattice on the external boundary).
BcValidation validate_bc(const Region& lambda, const BoundaryCondition& bc);

struct ExactGibbsOptions {
  Index cell_cap = 16;        // refuse larger domains
  Index state_cap = 12;       // keep per-state energies when |lambda| <= this
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration of all 3^|lambda| colorings.
struct GibbsTable {
  std::vector<Index> cells;            // lambda cell indices, ascending; digit order
  std::vector<uint64_t> energy_hist;   // count of states per energy
  int64_t min_energy = 0;
  // counts[v][c][h] = number of states with f(cells[v]) = c and energy h
  std::vector<std::array<std::vector<uint64_t>, 3>> marginal_counts;
  std::vector<uint16_t> state_energies;  // present when |lambda| <= state_cap

  double z(Beta beta) const;                        // partition value
  double state_prob(size_t state, Beta beta) const;  // needs state_energies
  // P(f(cells[v]) = c).
  double marginal(size_t v, Color c, Beta beta) const;
};

GibbsTable exact_gibbs(const Coloring& boundary, const ExactGibbsOptions& opts = {});

// Named tiny domains used by the CLI and the test fixtures. The region is
// placed near the origin inside a window with a 1-cell halo.
// single: one odd cell; pair: a domino; plus: v+ around an even cell;
// box2: a 2x2 box; doubleplus: two overlapping plus shapes (9 cells, odd).
Region named_domain(const std::string& name, int dim);

// The odd (even) hull of a box region: B together with the odd (even)
// external-boundary cells, which is an odd (even) domain when B is a box.
Region odd_hull(const Region& box);
Region even_hull(const Region& box);

}  // namespace potts
