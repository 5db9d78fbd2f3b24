#include "potts/breakup.hpp"

#include <algorithm>

namespace potts {

FourSection::FourSection(Window w, std::vector<uint8_t> labels)
    : window_(std::move(w)), labels_(std::move(labels)) {
  if (Index(labels_.size()) != window_.volume())
    throw std::invalid_argument("FourSection: label count != window volume");
}

uint8_t FourSection::label_of(const Vertex& v) const {
  return window_.contains(v) ? label(window_.index_of(v)) : 0;
}

Region FourSection::phase(int l) const {
  Region r(window_, l == 0);
  const Index vol = window_.volume();
  for (Index i = 0; i < vol; ++i)
    if (labels_[size_t(i)] == l) r.set(i, true);
  return r;
}

Region FourSection::union_of(std::initializer_list<int> ls) const {
  bool has0 = false;
  for (int l : ls) has0 = has0 || l == 0;
  Region r(window_, has0);
  const Index vol = window_.volume();
  for (Index i = 0; i < vol; ++i)
    for (int l : ls)
      if (labels_[size_t(i)] == l) {
        r.set(i, true);
        break;
      }
  return r;
}

Region FourSection::k12() const { return union_of({1, 2}); }
Region FourSection::k03() const { return union_of({0, 3}); }
Region FourSection::k123() const { return union_of({1, 2, 3}); }

FourSection FourSection::all_zero(const Window& w) {
  return FourSection(w, std::vector<uint8_t>(size_t(w.volume()), 0));
}

std::vector<uint8_t> kappa(const Coloring& f) {
  const Window& w = f.window;
  std::vector<uint8_t> k(size_t(w.volume()));
  for (Index i = 0; i < w.volume(); ++i) {
    const Color c = f.at(i);
    const bool even = parity(w.vertex_of(i)) == Parity::Even;
    if (c == 0)
      k[size_t(i)] = even ? 0 : 3;
    else
      k[size_t(i)] = even ? uint8_t(3 - c) : uint8_t(c);
  }
  return k;
}

namespace {

void require_even0(const Coloring& f, const char* op) {
  if (f.bc.kind != BoundaryCondition::Kind::EvenI || f.bc.color != 0)
    throw std::invalid_argument(std::string(op) +
                                ": requires even-0 boundary conditions (relabel first)");
  BcValidation v = validate_bc(f.lambda, f.bc);
  if (!v.ok) throw std::invalid_argument(std::string(op) + ": invalid boundary: " + v.reason);
}

// Fills the holes of u: the cells not reachable from the outside of the
// window through the complement of u. Same as the co-connected closure with
// respect to infinity, specialized to a finite set.
Region fill_holes(const Region& u) { return co_connected_closure_at_infinity(u); }

// Assembles labels with priority 1 > 2 > 3 > 0 per the breakup definition.
FourSection combine(const Window& w, const Region& k1p, const Region& k2p, const Region& k3p) {
  std::vector<uint8_t> labels(size_t(w.volume()), 0);
  for (Index i : k3p.cells()) labels[size_t(i)] = 3;
  for (Index i : k2p.cells()) labels[size_t(i)] = 2;
  for (Index i : k1p.cells()) labels[size_t(i)] = 1;
  return FourSection(w, std::move(labels));
}

BreakupReport finish_report(FourSection section, const Coloring& f) {
  BreakupReport rep;
  rep.trivial = is_trivial(section);
  rep.adapted = bool(validate_adapted(section, f));
  rep.connected = bool(validate_connected(section));
  BoundaryStats bs = boundary_stats(section);
  rep.regular = bs.regular;
  rep.singular = bs.singular;
  rep.section = std::move(section);
  return rep;
}

// Steps 2-5 of the construction, shared by both breakup variants. `core` is
// the union of the non-zero-kappa components excluded from K'0.
BreakupReport breakup_from_core(const Coloring& f, const std::vector<uint8_t>& kap,
                                const Region& core) {
  const Window& w = f.window;
  Region u3(w), u2(w), u1(w);
  for (Index i : core.cells()) {
    if (kap[size_t(i)] == 3) u3.set(i, true);
  }
  Region k3p = fill_holes(u3);
  for (Index i : core.cells()) {
    if (kap[size_t(i)] == 2 && !k3p.test(i)) u2.set(i, true);
  }
  Region k2p = fill_holes(u2);
  for (Index i : core.cells()) {
    if (kap[size_t(i)] == 1 && !k3p.test(i) && !k2p.test(i)) u1.set(i, true);
  }
  Region k1p = fill_holes(u1);
  return finish_report(combine(w, k1p, k2p, k3p), f);
}

}  // namespace

BreakupReport breakup(const Coloring& f, const Vertex& rho) {
  require_even0(f, "breakup");
  const Window& w = f.window;
  if (!w.contains(rho)) throw std::invalid_argument("breakup: rho outside the window");
  std::vector<uint8_t> kap = kappa(f);

  const Index rho_idx = w.index_of(rho);
  if (kap[size_t(rho_idx)] == 0) {
    // K'0 = Z^d: the trivial all-zero breakup.
    return finish_report(FourSection::all_zero(w), f);
  }
  Region nonzero(w);
  for (Index i = 0; i < w.volume(); ++i)
    if (kap[size_t(i)] != 0) nonzero.set(i, true);
  Region core(w);
  for (const Region& comp : connected_components(nonzero))
    if (comp.test(rho_idx)) {
      core = comp;
      break;
    }
  return breakup_from_core(f, kap, core);
}

BreakupReport breakup_around_set(const Coloring& f, const Region& v_set) {
  require_even0(f, "breakup_around_set");
  const Window& w = f.window;
  if (v_set.window() != w) throw std::invalid_argument("breakup_around_set: window mismatch");
  std::vector<uint8_t> kap = kappa(f);

  // V must consist of pattern violations.
  for (Index i : v_set.cells()) {
    const Color c = f.at(i);
    const bool even = parity(w.vertex_of(i)) == Parity::Even;
    const bool violates = (even && c != 0) || (!even && c == 0);
    if (!violates || !f.lambda.test(i))
      throw std::invalid_argument("breakup_around_set: V is not contained in T(f)");
  }

  Region nonzero(w);
  for (Index i = 0; i < w.volume(); ++i)
    if (kap[size_t(i)] != 0) nonzero.set(i, true);
  Region core(w);
  for (const Region& comp : connected_components(nonzero))
    if (comp.intersects(v_set)) core |= comp;
  return breakup_from_core(f, kap, core);
}

namespace {

// Margin requirement of the label representation: non-zero labels keep one
// cell from the window edge so no interface edge escapes the window.
bool margin_ok(const FourSection& k) {
  const Window& w = k.window();
  const int d = w.dim();
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i) {
    if (k.label(i) == 0) continue;
    Vertex v = w.vertex_of(i);
    for (int a = 0; a < d; ++a)
      if (v[a] == w.lo[a] || v[a] == w.hi[a]) return false;
  }
  return true;
}

}  // namespace

Validation validate_four_section(const FourSection& k) {
  // Clause (a), the partition property, is structural for a label array.
  if (!margin_ok(k)) return {false, "margin", std::nullopt};
  const Window& w = k.window();
  const int d = w.dim();
  const Index vol = w.volume();
  // (b) K0 is even and K3 is odd.
  for (Index i = 0; i < vol; ++i) {
    const uint8_t l = k.label(i);
    if (l != 0 && l != 3) continue;
    Vertex v = w.vertex_of(i);
    bool boundary = false;
    for (int a = 0; a < d && !boundary; ++a) {
      if (v[a] > w.lo[a] && k.label(i - w.stride(a)) != l) boundary = true;
      if (v[a] < w.hi[a] && k.label(i + w.stride(a)) != l) boundary = true;
    }
    if (!boundary) continue;
    const Parity want = l == 0 ? Parity::Even : Parity::Odd;
    if (parity(v) != want) return {false, "3.1(b)", v};
  }
  // (c) a vertex whose whole neighborhood lies in K_i belongs to K_i u K_{3-i}.
  for (Index i = 0; i < vol; ++i) {
    Vertex v = w.vertex_of(i);
    int common = -1;
    bool all_same = true;
    for (int a = 0; a < d && all_same; ++a) {
      for (int s : {-1, +1}) {
        int lbl;
        if (s < 0)
          lbl = v[a] > w.lo[a] ? k.label(i - w.stride(a)) : 0;
        else
          lbl = v[a] < w.hi[a] ? k.label(i + w.stride(a)) : 0;
        if (common < 0)
          common = lbl;
        else if (lbl != common) {
          all_same = false;
          break;
        }
      }
    }
    if (all_same && k.label(i) != common && k.label(i) != 3 - common) return {false, "3.1(c)", v};
  }
  return {};
}

Validation validate_adapted(const FourSection& k, const Coloring& f) {
  if (k.window() != f.window) throw std::invalid_argument("validate_adapted: window mismatch");
  Validation fs = validate_four_section(k);
  if (!fs.ok) return fs;
  const Window& w = k.window();
  const int d = w.dim();
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i) {
    const uint8_t l = k.label(i);
    Vertex v = w.vertex_of(i);
    bool boundary = false;
    bool has_nonzero_neighbor_color = false;
    for (int a = 0; a < d; ++a) {
      if (v[a] > w.lo[a]) {
        if (k.label(i - w.stride(a)) != l) boundary = true;
        if (f.at(i - w.stride(a)) != 0) has_nonzero_neighbor_color = true;
      }
      if (v[a] < w.hi[a]) {
        if (k.label(i + w.stride(a)) != l) boundary = true;
        if (f.at(i + w.stride(a)) != 0) has_nonzero_neighbor_color = true;
      }
    }
    if (!boundary) continue;
    const bool even = parity(v) == Parity::Even;
    Color want;
    switch (l) {
      case 0:
      case 3: want = 0; break;
      case 1: want = even ? 2 : 1; break;
      default: want = even ? 1 : 2; break;  // l == 2
    }
    if (f.at(i) != want) return {false, "3.2(a)", v};
    if ((l == 1 || l == 2) && !has_nonzero_neighbor_color) return {false, "3.2(b)", v};
  }
  return {};
}

namespace {

Region vertex_boundary(const FourSection& k) {
  const Window& w = k.window();
  const int d = w.dim();
  const Index vol = w.volume();
  Region b(w);
  for (Index i = 0; i < vol; ++i) {
    const uint8_t l = k.label(i);
    Vertex v = w.vertex_of(i);
    for (int a = 0; a < d; ++a) {
      if (v[a] > w.lo[a] && k.label(i - w.stride(a)) != l) {
        b.set(i, true);
        break;
      }
      if (v[a] < w.hi[a] && k.label(i + w.stride(a)) != l) {
        b.set(i, true);
        break;
      }
    }
  }
  return b;
}

}  // namespace

Validation validate_connected(const FourSection& k) {
  if (!margin_ok(k)) return {false, "margin", std::nullopt};
  Region b = vertex_boundary(k);
  if (!is_connected(b)) return {false, "boundary-connectivity", std::nullopt};
  return {};
}

bool is_trivial(const FourSection& k) {
  Index nonzero = 0;
  bool has3 = false;
  const Index vol = k.window().volume();
  for (Index i = 0; i < vol; ++i) {
    if (k.label(i) != 0) ++nonzero;
    if (k.label(i) == 3) has3 = true;
  }
  return nonzero <= 1 && !has3;
}

BoundaryStats boundary_stats(const FourSection& k) {
  const Window& w = k.window();
  const int d = w.dim();
  BoundaryStats st;
  st.regular_edges = EdgeSet(w);
  st.singular_edges = EdgeSet(w);
  st.singularities = Region(w);
  st.revealed = Region(w);

  auto in12 = [](uint8_t l) { return l == 1 || l == 2; };
  const Index vol = w.volume();
  for (Index c = 0; c < vol; ++c) {
    Vertex v = w.vertex_of(c);
    for (int a = 0; a < d; ++a) {
      if (v[a] >= w.hi[a]) continue;
      const Index n = c + w.stride(a);
      const uint8_t lu = k.label(c), lv = k.label(n);
      if (lu == lv) continue;
      if (in12(lu) != in12(lv)) {
        st.regular_edges.set(c, a, true);
      } else {
        st.singular_edges.set(c, a, true);
        st.singularities.set(c, true);
        st.singularities.set(n, true);
      }
    }
  }
  st.regular = st.regular_edges.count();
  st.singular = st.singular_edges.count();

  std::vector<int> reg_cnt = incident_edge_counts(st.regular_edges);
  for (Index c = 0; c < vol; ++c)
    if (reg_cnt[size_t(c)] >= d) st.revealed.set(c, true);

  for (const Direction& dir : all_directions(d)) {
    // v in K12 with v - dir outside K12.
    int64_t cnt = 0;
    for (Index c = 0; c < vol; ++c) {
      if (!in12(k.label(c))) continue;
      Vertex v = w.vertex_of(c);
      Vertex u = v;
      u[dir.axis] -= dir.sign;
      if (!in12(k.label_of(u))) ++cnt;
    }
    st.lower_boundary_sizes.push_back(cnt);
  }
  return st;
}

Region lower_boundary(const FourSection& k, const Direction& down) {
  const Window& w = k.window();
  Region r(w);
  auto in12 = [](uint8_t l) { return l == 1 || l == 2; };
  const Index vol = w.volume();
  for (Index c = 0; c < vol; ++c) {
    if (!in12(k.label(c))) continue;
    Vertex u = w.vertex_of(c);
    u[down.axis] -= down.sign;
    if (!in12(k.label_of(u))) r.set(c, true);
  }
  return r;
}

bool in_k_family_of_set(const FourSection& k, const Region& v_set) {
  Region k123 = k.k123();
  if (!k123.intersects(v_set)) return false;
  Region plus = closed_neighborhood(k123);
  Region db = vertex_boundary(k);
  for (const Region& comp : connected_components(plus)) {
    if (!comp.intersects(v_set)) return false;
    if (!is_connected(comp & db)) return false;
  }
  return true;
}

}  // namespace potts
