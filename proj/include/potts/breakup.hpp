#pragma once

// The kappa labeling and the five-step breakup construction, producing the
// four-phase partition K = (K0, K1, K2, K3) of Z^d from a coloring, together
// with the four-section / adaptedness / connectivity validators and the
// regular- and singular-boundary statistics.
//
// A FourSection stores one label per window cell; everything outside the
// window carries label 0 (K0 is cofinite). The construction keeps all
// non-zero labels at least one cell away from the window edge, which is
// guaranteed under even-0 conditions because the halo has kappa = 0.
//
// Edge classification of an adapted four-section: edges between K12 and K03
// are the regular boundary (proper in f); edges inside {K1,K2} or {K0,K3}
// crossing the pair are the singular boundary (improper in f). L and M are
// their counts.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potts/model.hpp"

namespace potts {

class FourSection {
 public:
  FourSection() = default;
  FourSection(Window w, std::vector<uint8_t> labels);

  const Window& window() const { return window_; }
  uint8_t label(Index idx) const { return labels_[size_t(idx)]; }
  uint8_t label_of(const Vertex& v) const;  // 0 outside the window
  const std::vector<uint8_t>& labels() const { return labels_; }

  Region phase(int l) const;      // K_l; cofinite for l = 0
  Region k12() const;             // K1 u K2
  Region k03() const;             // K0 u K3, cofinite
  Region k123() const;            // K1 u K2 u K3
  Region union_of(std::initializer_list<int> ls) const;  // cofinite iff 0 included

  bool operator==(const FourSection& o) const {
    return window_ == o.window_ && labels_ == o.labels_;
  }

  static FourSection all_zero(const Window& w);

 private:
  Window window_;
  std::vector<uint8_t> labels_;
};

struct Validation {
  bool ok = true;
  std::string clause;              // first failing clause, e.g. "3.1(b)"
  std::optional<Vertex> witness;   // offending vertex when applicable
  explicit operator bool() const { return ok; }
};

struct BoundaryStats {
  int64_t regular = 0;    // L
  int64_t singular = 0;   // M
  EdgeSet regular_edges;
  EdgeSet singular_edges;
  Region singularities;   // K*: endpoints of singular edges
  Region revealed;        // K^rev: vertices with >= d incident regular edges
  // |down-directional internal boundary of K12| per direction, indexed as in
  // all_directions(d).
  std::vector<int64_t> lower_boundary_sizes;
};

struct BreakupReport {
  FourSection section;
  bool trivial = false;
  bool adapted = false;
  bool connected = false;
  int64_t regular = 0;   // L
  int64_t singular = 0;  // M
};

// Phase label of each window cell per the parity/color table.
std::vector<uint8_t> kappa(const Coloring& f);

// The breakup of f around the vertex rho (five co-connected-closure steps).
BreakupReport breakup(const Coloring& f, const Vertex& rho);

// The breakup of f around a set V of pattern violations; K'0 excludes every
// component of the non-zero kappa phase meeting V.
BreakupReport breakup_around_set(const Coloring& f, const Region& v_set);

// Definition clauses, checked exactly; diagnostics name the first failure.
Validation validate_four_section(const FourSection& k);
Validation validate_adapted(const FourSection& k, const Coloring& f);
Validation validate_connected(const FourSection& k);

bool is_trivial(const FourSection& k);

BoundaryStats boundary_stats(const FourSection& k);

// The down-directional internal boundary of K12 for one direction.
Region lower_boundary(const FourSection& k, const Direction& down);

// Membership test for the family K_V: K123 meets V and every component of
// K123+ is finite, meets V, and has connected intersection with the vertex
// boundary of K.
bool in_k_family_of_set(const FourSection& k, const Region& v_set);

}  // namespace potts
