#pragma once

// Exact set calculus on finite windows of the hypercubic lattice Z^d.
//
// Conventions used throughout:
//   - A Window is an inclusive axis-aligned box [lo, hi]. Cells are indexed
//     row-major with axis 0 slowest and axis d-1 fastest, so the neighbor of
//     a cell along axis a is at index +-stride[a].
//   - A Region is a subset of Z^d given by a bitset over a window plus an
//     outside_full flag: if the flag is set, every cell of Z^d outside the
//     window belongs to the region (the region is cofinite).
//   - Set operations between Regions require identical windows. Use
//     rewindow() to move a Region to a larger window first.
//   - Complement connectivity is decided with a virtual outside vertex
//     adjacent to every cell of the outermost shell of the window. For d >= 2
//     the outside of a box is connected, so one virtual vertex is exact for
//     finite sets confined to the window. For d == 1 the outside consists of
//     two rays, handled as two virtual vertices.
//   - Boundary operators on a non-cofinite Region require the region to keep
//     one cell of margin from the window edge; otherwise WindowTooSmallError
//     is thrown. Operators on cofinite Regions act on the finite complement.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace potts {

using Coord = int32_t;
using Index = int64_t;
using Vertex = std::vector<Coord>;

struct WindowTooSmallError : std::runtime_error {
  explicit WindowTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

enum class Parity : uint8_t { Even = 0, Odd = 1 };

// Parity of the coordinate sum, i.e. of the graph-distance from the origin.
Parity parity(const Vertex& v);

// The 2d nearest neighbors of v.
std::vector<Vertex> neighbors(const Vertex& v);

// A unit vector of Z^d: +e_axis or -e_axis.
struct Direction {
  int axis = 0;
  int sign = -1;  // +1 or -1
};

// All 2d directions of Z^d, in a fixed order (axis-major, minus before plus).
std::vector<Direction> all_directions(int dim);

struct Window {
  Vertex lo, hi;  // inclusive corners

  Window() = default;
  Window(Vertex lo_, Vertex hi_);

  int dim() const { return static_cast<int>(lo.size()); }
  Index extent(int axis) const { return Index(hi[axis]) - lo[axis] + 1; }
  Index volume() const;
  bool contains(const Vertex& v) const;
  Index index_of(const Vertex& v) const;
  Vertex vertex_of(Index idx) const;
  Index stride(int axis) const;
  Window expanded(Coord halo) const;
  bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Window& o) const { return !(*this == o); }

 private:
  std::vector<Index> strides_;
  Index volume_ = 0;
};

class Region {
 public:
  Region() = default;
  explicit Region(Window w, bool outside_full = false);

  const Window& window() const { return window_; }
  bool outside_full() const { return outside_full_; }
  void set_outside_full(bool v) { outside_full_ = v; }

  bool test(Index idx) const { return (bits_[size_t(idx >> 6)] >> (idx & 63)) & 1; }
  void set(Index idx, bool v = true);
  bool contains(const Vertex& v) const;
  void insert(const Vertex& v);
  void erase(const Vertex& v);

  // Number of member cells inside the window.
  Index count() const;
  bool empty() const { return !outside_full_ && count() == 0; }
  // Number of member cells of Z^d; throws if cofinite.
  Index finite_size() const;

  std::vector<Index> cells() const;       // member cell indices, ascending
  std::vector<Vertex> vertices() const;   // member cells as vertices

  Region operator~() const;  // complement in Z^d (flips outside_full)
  Region& operator|=(const Region& o);
  Region& operator&=(const Region& o);
  Region& operator-=(const Region& o);
  friend Region operator|(Region a, const Region& b) { return a |= b; }
  friend Region operator&(Region a, const Region& b) { return a &= b; }
  friend Region operator-(Region a, const Region& b) { return a -= b; }
  bool operator==(const Region& o) const;
  bool operator!=(const Region& o) const { return !(*this == o); }
  bool is_subset_of(const Region& o) const;
  bool intersects(const Region& o) const;

  // Translation by a unit vector: U^s = { v + s : v in U }. Member cells
  // shifted off the window edge require outside_full consistency: shifting a
  // finite region whose members touch the window edge throws.
  Region shifted(const Direction& s) const;

  static Region full(const Window& w);           // Z^d
  static Region empty_region(const Window& w);   // {}
  static Region of_parity(const Window& w, Parity p, bool outside_full = false);

  const std::vector<uint64_t>& raw_bits() const { return bits_; }

 private:
  void check_same_window(const Region& o) const;
  Window window_;
  std::vector<uint64_t> bits_;
  bool outside_full_ = false;
};

Region rewindow(const Region& r, const Window& w);

// Single-cell and box helpers.
Region singleton(const Window& w, const Vertex& v);
Region box_region(const Window& w, const Vertex& lo, const Vertex& hi);

// N(U), N_t(U) and boundary operators. All results are confined to the
// window; WindowTooSmallError is thrown when the result would escape the
// window of a non-cofinite region.
Region neighborhood(const Region& u);                  // N(U)
Region n_t(const Region& u, double t);                 // N_t(U)
Region external_boundary(const Region& u);             // (external boundary of U)
Region internal_boundary(const Region& u);             // (internal boundary of U)
Region closed_neighborhood(const Region& u);           // U+ = U union ext. boundary
Region directional_boundary(const Region& u, const Direction& s);  // U \ U^s
Index edge_boundary_size(const Region& u);             // |edge boundary of U|

// Edges of the window, identified as (cell, axis) for the edge from the cell
// to its +axis neighbor. An EdgeSet is a bitset over window cells x axes.
struct EdgeSet {
  Window window;
  std::vector<uint64_t> bits;

  EdgeSet() = default;
  explicit EdgeSet(const Window& w);
  Index id(Index cell, int axis) const { return cell * window.dim() + axis; }
  bool test(Index cell, int axis) const;
  void set(Index cell, int axis, bool v = true);
  Index count() const;
  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator-=(const EdgeSet& o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  bool operator==(const EdgeSet& o) const { return window == o.window && bits == o.bits; }
  bool is_subset_of(const EdgeSet& o) const;
  bool empty() const;
  // Edge endpoints as vertex pairs, for diagnostics.
  std::vector<std::pair<Vertex, Vertex>> endpoints() const;
};

EdgeSet edge_boundary(const Region& u);                          // edges U -- U^c
EdgeSet edges_between(const Region& a, const Region& b);         // edges A -- B
EdgeSet edges_within(const Region& a);                           // edges inside A
// Per-cell count of incident edges from the given set.
std::vector<int> incident_edge_counts(const EdgeSet& e);

// Connected components under nearest-neighbor adjacency. The region must be
// finite (not cofinite); components are returned with the same window, in
// order of their smallest cell index.
std::vector<Region> connected_components(const Region& u);
bool is_connected(const Region& u);  // empty counts as connected

// Complement connectivity with the virtual outside. True iff Z^d \ U is
// connected, where all outside cells (plus the window shell) are unified for
// d >= 2 and split into two rays for d == 1.
bool is_co_connected(const Region& u);

// Co-connected closure of U with respect to an anchor vertex, per the
// complement-component definition: the complement of the connected component
// of Z^d \ U containing the anchor (all of Z^d when the anchor lies in U).
Region co_connected_closure(const Region& u, const Vertex& anchor);
// Closure with respect to infinity: anchor in the outside of the window.
Region co_connected_closure_at_infinity(const Region& u);

bool is_odd_set(const Region& u);   // internal boundary all odd
bool is_even_set(const Region& u);  // internal boundary all even
bool is_domain(const Region& u);    // finite, non-empty, connected, co-connected

// Graph-distance diameter. For disconnected sets the diameter is the sum of
// component diameters, and diam_plus adds 3 per component.
Index diameter(const Region& u);
Index diam_plus(const Region& u);

}  // namespace potts
