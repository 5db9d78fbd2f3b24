#include "potts/transform.hpp"

#include <algorithm>

namespace potts {

namespace {

bool in12(uint8_t l) { return l == 1 || l == 2; }

void require_adapted(const Coloring& f, const FourSection& k, const char* op) {
  Validation v = validate_adapted(k, f);
  if (!v.ok) throw std::invalid_argument(std::string(op) + ": four-section not adapted (clause " +
                                         v.clause + ")");
}

}  // namespace

Coloring flip(const Coloring& f, const FourSection& k) {
  require_adapted(f, k, "flip");
  Coloring g = f;
  const Index vol = f.window.volume();
  for (Index i = 0; i < vol; ++i) {
    if (k.label(i) == 2)
      g.set(i, c_neg(f.at(i)));
    else if (k.label(i) == 3)
      g.set(i, c_add(f.at(i), 1));
  }
  return g;
}

Coloring shift(const Coloring& f_prime, const FourSection& k, const Direction& down) {
  const Window& w = f_prime.window;
  Coloring g = f_prime;
  const Index up_step = -Index(down.sign) * w.stride(down.axis);
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i) {
    if (!in12(k.label(i))) continue;  // identity on K03
    Vertex vu = w.vertex_of(i);
    vu[down.axis] -= down.sign;
    const uint8_t lu = k.label_of(vu);
    if (in12(lu))
      g.set(i, c_sub(f_prime.at(i + up_step), 1));
    else if (lu == 0)
      g.set(i, 1);
    else
      g.set(i, 0);  // lu == 3
  }
  return g;
}

IndependentSet max_independent_set(const FourSection& k, const Direction& down,
                                   int component_cap) {
  const Region lb = lower_boundary(k, down);
  const Window& w = k.window();
  const int d = w.dim();
  IndependentSet out;
  out.cells = Region(w);

  std::vector<Index> cells = lb.cells();
  // Adjacency among boundary cells, index into `cells`.
  std::vector<std::vector<int>> adj(cells.size());
  for (size_t a = 0; a < cells.size(); ++a) {
    Vertex va = w.vertex_of(cells[a]);
    for (size_t b = a + 1; b < cells.size(); ++b) {
      Vertex vb = w.vertex_of(cells[b]);
      int64_t dist = 0;
      for (int ax = 0; ax < d; ++ax) dist += std::abs(int64_t(va[ax]) - vb[ax]);
      if (dist == 1) {
        adj[a].push_back(int(b));
        adj[b].push_back(int(a));
      }
    }
  }

  std::vector<char> comp_seen(cells.size(), 0);
  std::vector<int> comp, stack;
  for (size_t s = 0; s < cells.size(); ++s) {
    if (comp_seen[s]) continue;
    comp.clear();
    stack.assign(1, int(s));
    comp_seen[s] = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      for (int nb : adj[size_t(c)])
        if (!comp_seen[size_t(nb)]) {
          comp_seen[size_t(nb)] = 1;
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());

    if (int(comp.size()) > component_cap) {
      // Greedy in ascending cell order.
      out.exact = false;
      std::vector<char> blocked(cells.size(), 0);
      for (int c : comp) {
        if (blocked[size_t(c)]) continue;
        out.cells.set(cells[size_t(c)], true);
        for (int nb : adj[size_t(c)]) blocked[size_t(nb)] = 1;
      }
      continue;
    }

    // Exact search, include-first in ascending order; the first maximum-size
    // set found is the lexicographically smallest one.
    std::vector<int> best, cur;
    std::vector<char> blocked(cells.size(), 0);
    auto dfs = [&](auto&& self, size_t pos) -> void {
      if (cur.size() + (comp.size() - pos) <= best.size()) return;  // bound
      if (pos == comp.size()) {
        if (cur.size() > best.size()) best = cur;
        return;
      }
      int c = comp[pos];
      if (!blocked[size_t(c)]) {
        cur.push_back(c);
        std::vector<int> newly;
        for (int nb : adj[size_t(c)])
          if (!blocked[size_t(nb)]) {
            blocked[size_t(nb)] = 1;
            newly.push_back(nb);
          }
        self(self, pos + 1);
        for (int nb : newly) blocked[size_t(nb)] = 0;
        cur.pop_back();
      }
      self(self, pos + 1);
    };
    dfs(dfs, 0);
    for (int c : best) out.cells.set(cells[size_t(c)], true);
  }
  return out;
}

ModFunction zero_mod(const FourSection& k, const Direction& down) {
  return {lower_boundary(k, down), Region(k.window())};
}

ModFunction random_mod(const FourSection& k, const Direction& down, Rng& rng) {
  ModFunction h = zero_mod(k, down);
  IndependentSet b = max_independent_set(k, down);
  for (Index c : b.cells.cells())
    if (rng.coin()) h.ones.set(c, true);
  return h;
}

Coloring apply_mod(const Coloring& f_shifted, const FourSection& k, const Direction& down,
                   const ModFunction& h) {
  const Window& w = f_shifted.window;
  if (h.support != lower_boundary(k, down))
    throw std::invalid_argument("apply_mod: h support is not the lower boundary of K12");
  if (!h.ones.is_subset_of(h.support))
    throw std::invalid_argument("apply_mod: h takes value 1 outside its support");
  Coloring g = f_shifted;
  for (Index i : h.support.cells()) {
    Vertex vu = w.vertex_of(i);
    vu[down.axis] -= down.sign;
    const Color hv = h.ones.test(i) ? 1 : 0;
    if (k.label_of(vu) == 0)
      g.set(i, c_add(hv, 1));
    else
      g.set(i, c_neg(hv));  // up-neighbor in K3
  }
  return g;
}

namespace {

Coloring transform_unchecked(const Coloring& f, const FourSection& k, const Direction& down,
                             const ModFunction& h) {
  return apply_mod(shift(flip(f, k), k, down), k, down, h);
}

}  // namespace

Coloring transform(const Coloring& f, const FourSection& k, const Direction& down,
                   const ModFunction& h) {
  require_adapted(f, k, "transform");
  IndependentSet b = max_independent_set(k, down);
  if (!h.ones.is_subset_of(b.cells))
    throw std::invalid_argument("transform: h takes value 1 outside the independent set B(K)");
  return transform_unchecked(f, k, down, h);
}

std::pair<Coloring, ModFunction> invert_transform(const Coloring& g, const FourSection& k,
                                                  const Direction& down) {
  const Window& w = g.window;
  if (k.window() != w) throw std::invalid_argument("invert_transform: window mismatch");
  const Index down_step = Index(down.sign) * w.stride(down.axis);

  // Recover f' branchwise, then h on the lower boundary, then undo the flip.
  Coloring f_prime = g;
  const Index vol = w.volume();
  for (Index i = 0; i < vol; ++i)
    if (in12(k.label(i))) f_prime.set(i, c_add(g.at(i + down_step), 1));

  ModFunction h = zero_mod(k, down);
  for (Index i : h.support.cells()) {
    Vertex vu = w.vertex_of(i);
    vu[down.axis] -= down.sign;
    Color hv;
    if (k.label_of(vu) == 0) {
      if (g.at(i) == 0) throw NotInImageError("invert_transform: g = 0 above K0");
      hv = c_sub(g.at(i), 1);
    } else {  // up-neighbor in K3
      if (g.at(i) == 1) throw NotInImageError("invert_transform: g = 1 above K3");
      hv = c_neg(g.at(i));
    }
    if (hv == 1) h.ones.set(i, true);
  }

  Coloring f = f_prime;
  for (Index i = 0; i < vol; ++i) {
    if (k.label(i) == 2)
      f.set(i, c_neg(f_prime.at(i)));
    else if (k.label(i) == 3)
      f.set(i, c_sub(f_prime.at(i), 1));
  }

  if (!validate_adapted(k, f).ok)
    throw NotInImageError("invert_transform: recovered coloring is not adapted to K");
  IndependentSet b = max_independent_set(k, down);
  if (!h.ones.is_subset_of(b.cells))
    throw NotInImageError("invert_transform: recovered h is not supported on B(K)");
  if (!(transform_unchecked(f, k, down, h) == g))
    throw NotInImageError("invert_transform: reconstruction does not reproduce g");
  return {std::move(f), std::move(h)};
}

}  // namespace potts
