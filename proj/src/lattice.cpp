#include "potts/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>

namespace potts {

Parity parity(const Vertex& v) {
  int64_t s = 0;
  for (Coord c : v) s += c;
  return ((s % 2) + 2) % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<Vertex> neighbors(const Vertex& v) {
  std::vector<Vertex> out;
  out.reserve(2 * v.size());
  for (size_t a = 0; a < v.size(); ++a) {
    for (int s : {-1, +1}) {
      Vertex u = v;
      u[a] += s;
      out.push_back(std::move(u));
    }
  }
  return out;
}

std::vector<Direction> all_directions(int dim) {
  std::vector<Direction> out;
  out.reserve(2 * dim);
  for (int a = 0; a < dim; ++a) {
    out.push_back({a, -1});
    out.push_back({a, +1});
  }
  return out;
}

Window::Window(Vertex lo_, Vertex hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size() || lo.empty()) throw std::invalid_argument("window: bad corners");
  for (size_t a = 0; a < lo.size(); ++a)
    if (lo[a] > hi[a]) throw std::invalid_argument("window: lo > hi");
  const int d = dim();
  strides_.assign(d, 1);
  for (int a = d - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * extent(a + 1);
  volume_ = strides_[0] * extent(0);
}

Index Window::volume() const { return volume_; }

bool Window::contains(const Vertex& v) const {
  if (static_cast<int>(v.size()) != dim()) return false;
  for (int a = 0; a < dim(); ++a)
    if (v[a] < lo[a] || v[a] > hi[a]) return false;
  return true;
}

Index Window::index_of(const Vertex& v) const {
  Index idx = 0;
  for (int a = 0; a < dim(); ++a) idx += (Index(v[a]) - lo[a]) * strides_[a];
  return idx;
}

Vertex Window::vertex_of(Index idx) const {
  Vertex v(dim());
  for (int a = 0; a < dim(); ++a) {
    v[a] = lo[a] + Coord(idx / strides_[a]);
    idx %= strides_[a];
  }
  return v;
}

Index Window::stride(int axis) const { return strides_[axis]; }

Window Window::expanded(Coord halo) const {
  Vertex l = lo, h = hi;
  for (size_t a = 0; a < l.size(); ++a) {
    l[a] -= halo;
    h[a] += halo;
  }
  return Window(l, h);
}

Region::Region(Window w, bool outside_full)
    : window_(std::move(w)), bits_((size_t(window_.volume()) + 63) / 64, 0), outside_full_(outside_full) {}

void Region::set(Index idx, bool v) {
  uint64_t mask = uint64_t(1) << (idx & 63);
  if (v)
    bits_[size_t(idx >> 6)] |= mask;
  else
    bits_[size_t(idx >> 6)] &= ~mask;
}

bool Region::contains(const Vertex& v) const {
  if (!window_.contains(v)) return outside_full_;
  return test(window_.index_of(v));
}

void Region::insert(const Vertex& v) {
  if (!window_.contains(v)) throw std::invalid_argument("Region::insert: vertex outside window");
  set(window_.index_of(v), true);
}

void Region::erase(const Vertex& v) {
  if (!window_.contains(v)) throw std::invalid_argument("Region::erase: vertex outside window");
  set(window_.index_of(v), false);
}

Index Region::count() const {
  Index n = 0;
  for (uint64_t w : bits_) n += std::popcount(w);
  return n;
}

Index Region::finite_size() const {
  if (outside_full_) throw std::invalid_argument("finite_size of a cofinite region");
  return count();
}

std::vector<Index> Region::cells() const {
  std::vector<Index> out;
  out.reserve(size_t(count()));
  const Index vol = window_.volume();
  for (Index i = 0; i < vol; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::vector<Vertex> Region::vertices() const {
  std::vector<Vertex> out;
  for (Index i : cells()) out.push_back(window_.vertex_of(i));
  return out;
}

Region Region::operator~() const {
  Region r(window_, !outside_full_);
  for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = ~bits_[k];
  // clear the tail beyond the last cell
  const Index vol = window_.volume();
  if (vol & 63) r.bits_.back() &= (uint64_t(1) << (vol & 63)) - 1;
  return r;
}

void Region::check_same_window(const Region& o) const {
  if (window_ != o.window_)
    throw std::invalid_argument("Region operation on mismatched windows; rewindow first");
}

Region& Region::operator|=(const Region& o) {
  check_same_window(o);
  for (size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
  outside_full_ = outside_full_ || o.outside_full_;
  return *this;
}

Region& Region::operator&=(const Region& o) {
  check_same_window(o);
  for (size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
  outside_full_ = outside_full_ && o.outside_full_;
  return *this;
}

Region& Region::operator-=(const Region& o) {
  check_same_window(o);
  for (size_t k = 0; k < bits_.size(); ++k) bits_[k] &= ~o.bits_[k];
  outside_full_ = outside_full_ && !o.outside_full_;
  return *this;
}

bool Region::operator==(const Region& o) const {
  return window_ == o.window_ && outside_full_ == o.outside_full_ && bits_ == o.bits_;
}

bool Region::is_subset_of(const Region& o) const {
  check_same_window(o);
  if (outside_full_ && !o.outside_full_) return false;
  for (size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~o.bits_[k]) return false;
  return true;
}

bool Region::intersects(const Region& o) const {
  check_same_window(o);
  if (outside_full_ && o.outside_full_) return true;
  for (size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & o.bits_[k]) return true;
  return false;
}

namespace {

// True when some member cell lies on the window face with the given axis/side
// (side -1: lo face, +1: hi face). axis < 0 scans all faces.
bool touches_face(const Region& r, int axis, int side) {
  const Window& w = r.window();
  const int d = w.dim();
  for (Index idx : r.cells()) {
    Vertex v = w.vertex_of(idx);
    for (int a = 0; a < d; ++a) {
      if (axis >= 0 && a != axis) continue;
      if ((side <= 0 || axis < 0) && v[a] == w.lo[a]) return true;
      if ((side >= 0 || axis < 0) && v[a] == w.hi[a]) return true;
    }
  }
  return false;
}

bool touches_any_face(const Region& r) { return touches_face(r, -1, 0); }

void require_margin(const Region& u, const char* op) {
  // The finite side of the region must keep one cell from the window edge.
  const Region& finite_side = u.outside_full() ? ~u : u;
  if (touches_any_face(finite_side))
    throw WindowTooSmallError(std::string(op) + ": region touches the window edge; enlarge the window");
}

}  // namespace

Region Region::shifted(const Direction& s) const {
  if (outside_full_) {
    Region c = ~*this;
    if (touches_face(c, s.axis, s.sign > 0 ? +1 : -1))
      throw WindowTooSmallError("shifted: cofinite complement touches the window edge");
    return ~c.shifted(s);
  }
  if (touches_face(*this, s.axis, s.sign > 0 ? +1 : -1))
    throw WindowTooSmallError("shifted: region touches the window edge");
  Region r(window_);
  const Index step = Index(s.sign) * window_.stride(s.axis);
  for (Index idx : cells()) r.set(idx + step, true);
  return r;
}

Region Region::full(const Window& w) { return ~Region(w); }

Region Region::empty_region(const Window& w) { return Region(w); }

Region Region::of_parity(const Window& w, Parity p, bool outside_full) {
  Region r(w, outside_full);
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i)
    if (parity(w.vertex_of(i)) == p) r.set(i, true);
  return r;
}

Region rewindow(const Region& r, const Window& w) {
  Region out(w, r.outside_full());
  const Window& old = r.window();
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i) {
    Vertex v = w.vertex_of(i);
    if (old.contains(v)) {
      if (r.test(old.index_of(v))) out.set(i, true);
    } else if (r.outside_full()) {
      out.set(i, true);
    }
  }
  // Members of the old window must be visible in the new one.
  if (!r.outside_full()) {
    for (Index i : r.cells())
      if (!w.contains(old.vertex_of(i)))
        throw std::invalid_argument("rewindow: member cell outside the new window");
  } else {
    for (Index i : (~r).cells())
      if (!w.contains(old.vertex_of(i)))
        throw std::invalid_argument("rewindow: complement cell outside the new window");
  }
  return out;
}

Region singleton(const Window& w, const Vertex& v) {
  Region r(w);
  r.insert(v);
  return r;
}

Region box_region(const Window& w, const Vertex& lo, const Vertex& hi) {
  Region r(w);
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i) {
    Vertex v = w.vertex_of(i);
    bool in = true;
    for (size_t a = 0; a < lo.size() && in; ++a) in = v[a] >= lo[a] && v[a] <= hi[a];
    if (in) r.insert(v);
  }
  return r;
}

namespace {

// Iterates the in-window neighbors of a cell; out-of-window neighbors are
// reported through the `outside` callback.
template <typename FIn, typename FOut>
void for_neighbors(const Window& w, Index idx, FIn&& in, FOut&& outside) {
  Vertex v = w.vertex_of(idx);
  for (int a = 0; a < w.dim(); ++a) {
    if (v[a] > w.lo[a])
      in(idx - w.stride(a));
    else
      outside(a, -1);
    if (v[a] < w.hi[a])
      in(idx + w.stride(a));
    else
      outside(a, +1);
  }
}

int neighbor_count_in(const Region& u, Index idx) {
  int n = 0;
  for_neighbors(
      u.window(), idx, [&](Index j) { n += u.test(j) ? 1 : 0; },
      [&](int, int) { n += u.outside_full() ? 1 : 0; });
  return n;
}

}  // namespace

Region neighborhood(const Region& u) {
  if (!u.outside_full()) require_margin(u, "neighborhood");
  Region r(u.window(), u.outside_full());
  const Index vol = u.window().volume();
  for (Index i = 0; i < vol; ++i)
    if (neighbor_count_in(u, i) > 0) r.set(i, true);
  return r;
}

Region n_t(const Region& u, double t) {
  const int d = u.window().dim();
  if (t > 2 * d) return Region(u.window());
  if (!u.outside_full())
    require_margin(u, "n_t");
  else
    require_margin(u, "n_t");  // complement margin
  Region r(u.window(), u.outside_full());
  const Index vol = u.window().volume();
  for (Index i = 0; i < vol; ++i)
    if (double(neighbor_count_in(u, i)) >= t) r.set(i, true);
  return r;
}

Region external_boundary(const Region& u) {
  return neighborhood(u) - u;
}

Region internal_boundary(const Region& u) {
  if (u.outside_full()) require_margin(u, "internal_boundary");
  Region r(u.window());
  for (Index i : u.cells())
    if (neighbor_count_in(~u, i) > 0) r.set(i, true);
  // In-window members adjacent to the outside of a finite region are
  // boundary cells as well; handled by neighbor_count_in(~u, .) since the
  // complement of a finite region is cofinite.
  return r;
}

Region closed_neighborhood(const Region& u) { return neighborhood(u) | u; }

Region directional_boundary(const Region& u, const Direction& s) {
  return u - u.shifted(s);
}

EdgeSet::EdgeSet(const Window& w)
    : window(w), bits((size_t(w.volume()) * w.dim() + 63) / 64, 0) {}

bool EdgeSet::test(Index cell, int axis) const {
  Index i = id(cell, axis);
  return (bits[size_t(i >> 6)] >> (i & 63)) & 1;
}

void EdgeSet::set(Index cell, int axis, bool v) {
  Index i = id(cell, axis);
  uint64_t mask = uint64_t(1) << (i & 63);
  if (v)
    bits[size_t(i >> 6)] |= mask;
  else
    bits[size_t(i >> 6)] &= ~mask;
}

Index EdgeSet::count() const {
  Index n = 0;
  for (uint64_t w : bits) n += std::popcount(w);
  return n;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  if (window != o.window) throw std::invalid_argument("EdgeSet window mismatch");
  for (size_t k = 0; k < bits.size(); ++k) bits[k] |= o.bits[k];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  if (window != o.window) throw std::invalid_argument("EdgeSet window mismatch");
  for (size_t k = 0; k < bits.size(); ++k) bits[k] &= o.bits[k];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  if (window != o.window) throw std::invalid_argument("EdgeSet window mismatch");
  for (size_t k = 0; k < bits.size(); ++k) bits[k] &= ~o.bits[k];
  return *this;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
  if (window != o.window) throw std::invalid_argument("EdgeSet window mismatch");
  for (size_t k = 0; k < bits.size(); ++k)
    if (bits[k] & ~o.bits[k]) return false;
  return true;
}

bool EdgeSet::empty() const {
  for (uint64_t w : bits)
    if (w) return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> EdgeSet::endpoints() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int d = window.dim();
  const Index vol = window.volume();
  for (Index c = 0; c < vol; ++c)
    for (int a = 0; a < d; ++a)
      if (test(c, a)) {
        Vertex u = window.vertex_of(c), v = u;
        v[a] += 1;
        out.emplace_back(std::move(u), std::move(v));
      }
  return out;
}

namespace {

// Visits each in-window edge (cell, axis) where cell is the low endpoint.
template <typename F>
void for_window_edges(const Window& w, F&& f) {
  const int d = w.dim();
  const Index vol = w.volume();
  for (Index c = 0; c < vol; ++c) {
    Vertex v = w.vertex_of(c);
    for (int a = 0; a < d; ++a)
      if (v[a] < w.hi[a]) f(c, a, c + w.stride(a));
  }
}

}  // namespace

EdgeSet edge_boundary(const Region& u) {
  require_margin(u, "edge_boundary");
  EdgeSet e(u.window());
  for_window_edges(u.window(), [&](Index c, int a, Index n) {
    if (u.test(c) != u.test(n)) e.set(c, a, true);
  });
  return e;
}

Index edge_boundary_size(const Region& u) { return edge_boundary(u).count(); }

EdgeSet edges_between(const Region& a, const Region& b) {
  if (a.window() != b.window()) throw std::invalid_argument("edges_between: window mismatch");
  if (a.outside_full() && b.outside_full())
    throw std::invalid_argument("edges_between: both regions cofinite");
  if (a.outside_full()) require_margin(b, "edges_between");
  if (b.outside_full()) require_margin(a, "edges_between");
  EdgeSet e(a.window());
  for_window_edges(a.window(), [&](Index c, int ax, Index n) {
    if ((a.test(c) && b.test(n)) || (a.test(n) && b.test(c))) e.set(c, ax, true);
  });
  return e;
}

EdgeSet edges_within(const Region& a) {
  if (a.outside_full()) throw std::invalid_argument("edges_within: cofinite region");
  EdgeSet e(a.window());
  for_window_edges(a.window(), [&](Index c, int ax, Index n) {
    if (a.test(c) && a.test(n)) e.set(c, ax, true);
  });
  return e;
}

std::vector<int> incident_edge_counts(const EdgeSet& e) {
  std::vector<int> cnt(size_t(e.window.volume()), 0);
  const int d = e.window.dim();
  const Index vol = e.window.volume();
  for (Index c = 0; c < vol; ++c)
    for (int a = 0; a < d; ++a)
      if (e.test(c, a)) {
        ++cnt[size_t(c)];
        ++cnt[size_t(c + e.window.stride(a))];
      }
  return cnt;
}

std::vector<Region> connected_components(const Region& u) {
  if (u.outside_full()) throw std::invalid_argument("connected_components: cofinite region");
  const Window& w = u.window();
  std::vector<char> seen(size_t(w.volume()), 0);
  std::vector<Region> out;
  std::vector<Index> queue;
  for (Index start : u.cells()) {
    if (seen[size_t(start)]) continue;
    Region comp(w);
    queue.clear();
    queue.push_back(start);
    seen[size_t(start)] = 1;
    while (!queue.empty()) {
      Index c = queue.back();
      queue.pop_back();
      comp.set(c, true);
      for_neighbors(
          w, c,
          [&](Index j) {
            if (u.test(j) && !seen[size_t(j)]) {
              seen[size_t(j)] = 1;
              queue.push_back(j);
            }
          },
          [](int, int) {});
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Region& u) {
  if (u.empty()) return true;
  return connected_components(u).size() == 1;
}

namespace {

// Flood over the complement of `u` starting from the outside. For d >= 2 all
// outside cells form one virtual node attached to the whole window shell;
// for d == 1 the two rays are separate nodes. Returns the set of in-window
// complement cells reached, and reports which outside nodes were reached.
struct OutsideFlood {
  Region reached;          // in-window complement cells reached from outside
  bool left_ray = false;   // d == 1 only
  bool right_ray = false;  // d == 1 only
  bool outside = false;    // any outside node reached
};

void flood_complement(const Region& u, std::vector<char>& seen, std::vector<Index>& queue,
                      Region& reached) {
  const Window& w = u.window();
  while (!queue.empty()) {
    Index c = queue.back();
    queue.pop_back();
    reached.set(c, true);
    for_neighbors(
        w, c,
        [&](Index j) {
          if (!u.test(j) && !seen[size_t(j)]) {
            seen[size_t(j)] = 1;
            queue.push_back(j);
          }
        },
        [](int, int) {});
  }
}

OutsideFlood flood_from_outside(const Region& u) {
  const Window& w = u.window();
  OutsideFlood f;
  f.reached = Region(w);
  if (u.outside_full()) return f;  // outside belongs to u, nothing to flood
  std::vector<char> seen(size_t(w.volume()), 0);
  std::vector<Index> queue;
  const int d = w.dim();
  const Index vol = w.volume();
  if (d == 1) {
    Index left = 0, right = vol - 1;
    f.left_ray = f.right_ray = true;
    if (!u.test(left) && !seen[size_t(left)]) {
      seen[size_t(left)] = 1;
      queue.push_back(left);
    }
    if (!u.test(right) && !seen[size_t(right)]) {
      seen[size_t(right)] = 1;
      queue.push_back(right);
    }
  } else {
    for (Index c = 0; c < vol; ++c) {
      Vertex v = w.vertex_of(c);
      bool shell = false;
      for (int a = 0; a < d && !shell; ++a) shell = v[a] == w.lo[a] || v[a] == w.hi[a];
      if (shell && !u.test(c) && !seen[size_t(c)]) {
        seen[size_t(c)] = 1;
        queue.push_back(c);
      }
    }
  }
  f.outside = true;
  flood_complement(u, seen, queue, f.reached);
  return f;
}

}  // namespace

bool is_co_connected(const Region& u) {
  const Window& w = u.window();
  if (u.outside_full()) {
    Region c = ~u;
    return is_connected(c);
  }
  // Complement = outside plus in-window non-members. For d == 1 the two rays
  // must connect through the window for the complement to be connected.
  Region comp = ~u;
  if (w.dim() == 1) {
    // Flood from the left ray only; connected iff everything (incl. right
    // ray's entry) is reached.
    std::vector<char> seen(size_t(w.volume()), 0);
    std::vector<Index> queue;
    Region reached(w);
    if (!u.test(0)) {
      seen[0] = 1;
      queue.push_back(0);
    }
    flood_complement(u, seen, queue, reached);
    if (u.test(0)) return false;                    // left ray cut off from window
    if (u.test(w.volume() - 1)) return false;       // right ray cut off
    if (!reached.test(w.volume() - 1)) return false;  // rays not connected
    return reached == comp;
  }
  OutsideFlood f = flood_from_outside(u);
  return f.reached == comp;
}

Region co_connected_closure(const Region& u, const Vertex& anchor) {
  const Window& w = u.window();
  if (u.contains(anchor)) return Region::full(w);
  if (!w.contains(anchor)) return co_connected_closure_at_infinity(u);
  std::vector<char> seen(size_t(w.volume()), 0);
  std::vector<Index> queue;
  Region comp(w);
  Index start = w.index_of(anchor);
  seen[size_t(start)] = 1;
  queue.push_back(start);
  bool hit_outside = false;
  // BFS; when a shell cell is reached and the outside is free, the component
  // absorbs the outside and (for d >= 2) re-enters through every free shell
  // cell.
  const int d = w.dim();
  const Index vol = w.volume();
  auto expand_shell = [&]() {
    if (d == 1) {
      // Each ray only touches its own end cell; handled below per side.
      return;
    }
    for (Index c = 0; c < vol; ++c) {
      Vertex v = w.vertex_of(c);
      bool shell = false;
      for (int a = 0; a < d && !shell; ++a) shell = v[a] == w.lo[a] || v[a] == w.hi[a];
      if (shell && !u.test(c) && !seen[size_t(c)]) {
        seen[size_t(c)] = 1;
        queue.push_back(c);
      }
    }
  };
  bool left_ray = false, right_ray = false;
  while (!queue.empty()) {
    Index c = queue.back();
    queue.pop_back();
    comp.set(c, true);
    Vertex v = w.vertex_of(c);
    bool shell = false;
    for (int a = 0; a < d && !shell; ++a) shell = v[a] == w.lo[a] || v[a] == w.hi[a];
    if (shell && !u.outside_full()) {
      if (d == 1) {
        if (c == 0) left_ray = true;
        if (c == vol - 1) right_ray = true;
        hit_outside = true;
      } else if (!hit_outside) {
        hit_outside = true;
        expand_shell();
      }
    }
    for_neighbors(
        w, c,
        [&](Index j) {
          if (!u.test(j) && !seen[size_t(j)]) {
            seen[size_t(j)] = 1;
            queue.push_back(j);
          }
        },
        [](int, int) {});
  }
  if (d == 1 && hit_outside && !(left_ray && right_ray))
    throw std::invalid_argument(
        "co_connected_closure: d=1 component contains one ray only; result not representable");
  Region closure = ~comp;  // cofinite when the component is finite
  if (hit_outside) closure.set_outside_full(false);
  return closure;
}

Region co_connected_closure_at_infinity(const Region& u) {
  const Window& w = u.window();
  if (u.outside_full()) return Region::full(w);
  OutsideFlood f = flood_from_outside(u);
  Region closure = ~f.reached;
  closure.set_outside_full(false);
  return closure;
}

bool is_odd_set(const Region& u) {
  Region b = internal_boundary(u);
  return !b.intersects(Region::of_parity(u.window(), Parity::Even));
}

bool is_even_set(const Region& u) {
  Region b = internal_boundary(u);
  return !b.intersects(Region::of_parity(u.window(), Parity::Odd));
}

bool is_domain(const Region& u) {
  if (u.outside_full()) return false;
  if (u.count() == 0) return false;
  if (!is_connected(u)) return false;
  return is_co_connected(u);
}

namespace {

Index component_diameter(const Region& comp) {
  const Window& w = comp.window();
  const int d = w.dim();
  std::vector<Vertex> vs = comp.vertices();
  if (vs.empty()) return 0;
  Index best = 0;
  const uint64_t patterns = uint64_t(1) << (d - 1);
  for (uint64_t p = 0; p < patterns; ++p) {
    int64_t mx = INT64_MIN, mn = INT64_MAX;
    for (const Vertex& v : vs) {
      int64_t s = v[0];  // sign of axis 0 fixed to +1
      for (int a = 1; a < d; ++a) s += ((p >> (a - 1)) & 1) ? -int64_t(v[a]) : int64_t(v[a]);
      mx = std::max(mx, s);
      mn = std::min(mn, s);
    }
    best = std::max<Index>(best, mx - mn);
  }
  return best;
}

}  // namespace

Index diameter(const Region& u) {
  if (u.outside_full()) throw std::invalid_argument("diameter of a cofinite region");
  Index total = 0;
  for (const Region& comp : connected_components(u)) total += component_diameter(comp);
  return total;
}

Index diam_plus(const Region& u) {
  if (u.outside_full()) throw std::invalid_argument("diam_plus of a cofinite region");
  return diameter(u) + 3 * Index(connected_components(u).size());
}

}  // namespace potts
