#include "potts/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace potts {

Beta Beta::infinity() { return Beta{std::numeric_limits<double>::infinity()}; }

bool Beta::is_inf() const { return std::isinf(value); }

Beta Beta::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return infinity();
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size() || v < 0) throw std::invalid_argument("beta: expected a non-negative real or 'inf'");
  return Beta{v};
}

std::string Beta::str() const {
  if (is_inf()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string BoundaryCondition::name() const {
  switch (kind) {
    case Kind::EvenI: return "even" + std::to_string(int(color));
    case Kind::OddI: return "odd" + std::to_string(int(color));
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

std::optional<BoundaryCondition> BoundaryCondition::from_name(const std::string& s) {
  if (s == "explicit") return explicit_bc();
  if (s.size() == 5 && s.rfind("even", 0) == 0 && s[4] >= '0' && s[4] <= '2')
    return even_i(Color(s[4] - '0'));
  if (s.size() == 4 && s.rfind("odd", 0) == 0 && s[3] >= '0' && s[3] <= '2')
    return odd_i(Color(s[3] - '0'));
  return std::nullopt;
}

bool Coloring::operator==(const Coloring& o) const {
  return window == o.window && colors == o.colors && lambda == o.lambda && bc == o.bc;
}

Color pattern_color(const BoundaryCondition& bc, const Vertex& v) {
  if (bc.kind == BoundaryCondition::Kind::Explicit) return 0;
  return parity(v) == bc.fixed_parity() ? bc.color : c_add(bc.color, 1);
}

Coloring make_coloring(const Region& lambda, const BoundaryCondition& bc) {
  const Window& w = lambda.window();
  if (lambda.outside_full()) throw std::invalid_argument("make_coloring: lambda must be finite");
  (void)external_boundary(lambda);  // margin check: halo must fit in the window
  Coloring f;
  f.window = w;
  f.lambda = lambda;
  f.bc = bc;
  f.colors.resize(size_t(w.volume()));
  for (Index i = 0; i < w.volume(); ++i) f.colors[size_t(i)] = pattern_color(bc, w.vertex_of(i));
  return f;
}

Coloring widen(const Coloring& f, Coord extra) {
  Window w = f.window.expanded(extra);
  Coloring g;
  g.window = w;
  g.bc = f.bc;
  g.lambda = rewindow(f.lambda, w);
  g.colors.resize(size_t(w.volume()));
  for (Index i = 0; i < w.volume(); ++i) {
    Vertex v = w.vertex_of(i);
    g.colors[size_t(i)] =
        f.window.contains(v) ? f.at(f.window.index_of(v)) : pattern_color(f.bc, v);
  }
  return g;
}

int64_t hamiltonian(const Coloring& f) {
  const Window& w = f.window;
  const int d = w.dim();
  int64_t h = 0;
  const Index vol = w.volume();
  for (Index c = 0; c < vol; ++c) {
    Vertex v = w.vertex_of(c);
    for (int a = 0; a < d; ++a) {
      if (v[a] >= w.hi[a]) continue;
      Index n = c + w.stride(a);
      if (f.at(c) == f.at(n) && (f.lambda.test(c) || f.lambda.test(n))) ++h;
    }
  }
  return h;
}

EdgeSet improper_edges(const Coloring& f) {
  const Window& w = f.window;
  EdgeSet e(w);
  const int d = w.dim();
  const Index vol = w.volume();
  for (Index c = 0; c < vol; ++c) {
    Vertex v = w.vertex_of(c);
    for (int a = 0; a < d; ++a) {
      if (v[a] >= w.hi[a]) continue;
      if (f.at(c) == f.at(c + w.stride(a))) e.set(c, a, true);
    }
  }
  return e;
}

std::array<int, 3> local_field(const Coloring& f, Index idx) {
  if (!f.lambda.test(idx)) throw std::invalid_argument("local_field: vertex not in lambda");
  std::array<int, 3> n{0, 0, 0};
  const Window& w = f.window;
  Vertex v = w.vertex_of(idx);
  for (int a = 0; a < w.dim(); ++a) {
    if (v[a] <= w.lo[a] || v[a] >= w.hi[a])
      throw WindowTooSmallError("local_field: free cell on the window edge");
    ++n[f.at(idx - w.stride(a))];
    ++n[f.at(idx + w.stride(a))];
  }
  return n;
}

std::array<int, 3> local_field(const Coloring& f, const Vertex& v) {
  return local_field(f, f.window.index_of(v));
}

BcValidation validate_bc(const Region& lambda, const BoundaryCondition& bc) {
  if (lambda.outside_full()) return {false, "lambda is not finite"};
  if (lambda.count() == 0) return {false, "lambda is empty"};
  if (!is_connected(lambda)) return {false, "lambda is not connected"};
  if (!is_co_connected(lambda)) return {false, "lambda is not co-connected"};
  if (bc.kind == BoundaryCondition::Kind::Explicit) return {};
  Region halo = external_boundary(lambda);
  Parity want = bc.fixed_parity();
  for (const Vertex& v : halo.vertices())
    if (parity(v) != want) {
      return {false, "external boundary contains a vertex of the wrong parity at index " +
                         std::to_string(lambda.window().index_of(v))};
    }
  return {};
}

double GibbsTable::z(Beta beta) const {
  if (beta.is_inf()) {
    return min_energy == 0 ? double(energy_hist[size_t(min_energy)]) : 0.0;
  }
  long double acc = 0;
  for (size_t h = 0; h < energy_hist.size(); ++h)
    if (energy_hist[h]) acc += (long double)(energy_hist[h]) * expl(-(long double)(beta.value) * h);
  return double(acc);
}

double GibbsTable::state_prob(size_t state, Beta beta) const {
  if (state_energies.empty()) throw std::invalid_argument("state probabilities not tabulated");
  const uint16_t e = state_energies[state];
  if (beta.is_inf())
    return e == min_energy ? 1.0 / double(energy_hist[size_t(min_energy)]) : 0.0;
  long double zz = 0;
  for (size_t h = 0; h < energy_hist.size(); ++h)
    if (energy_hist[h])
      zz += (long double)(energy_hist[h]) *
            expl(-(long double)(beta.value) * ((long double)(h) - min_energy));
  return double(expl(-(long double)(beta.value) * ((long double)(e) - min_energy)) / zz);
}

double GibbsTable::marginal(size_t v, Color c, Beta beta) const {
  const auto& counts = marginal_counts[v][c];
  if (beta.is_inf()) {
    uint64_t num = counts[size_t(min_energy)];
    uint64_t den = energy_hist[size_t(min_energy)];
    return double(num) / double(den);
  }
  long double num = 0, den = 0;
  for (size_t h = 0; h < energy_hist.size(); ++h) {
    if (!energy_hist[h]) continue;
    long double wgt = expl(-(long double)(beta.value) * ((long double)(h) - min_energy));
    num += (long double)(counts[h]) * wgt;
    den += (long double)(energy_hist[h]) * wgt;
  }
  return double(num / den);
}

GibbsTable exact_gibbs(const Coloring& boundary, const ExactGibbsOptions& opts) {
  const Region& lambda = boundary.lambda;
  const Index n = lambda.count();
  if (n > opts.cell_cap)
    throw CapExceededError("exact_gibbs: |lambda| = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(opts.cell_cap));
  GibbsTable t;
  t.cells = lambda.cells();
  const Window& w = boundary.window;
  const int d = w.dim();

  // Working coloring starts with every free cell at color 0.
  Coloring f = boundary;
  for (Index c : t.cells) f.set(c, 0);

  const size_t hmax = size_t(2 * d) * size_t(n) + 1;
  t.energy_hist.assign(hmax, 0);
  t.marginal_counts.assign(size_t(n), {});
  for (auto& per_color : t.marginal_counts)
    for (auto& v : per_color) v.assign(hmax, 0);

  uint64_t n_states = 1;
  for (Index k = 0; k < n; ++k) n_states *= 3;
  const bool keep_states = n <= opts.state_cap;
  if (keep_states) t.state_energies.assign(size_t(n_states), 0);

  // Energy delta when cell idx changes color from `from` to `to`.
  auto delta = [&](Index idx, Color from, Color to) -> int64_t {
    int64_t dlt = 0;
    Vertex v = w.vertex_of(idx);
    for (int a = 0; a < d; ++a) {
      if (v[a] > w.lo[a]) {
        Color cn = f.at(idx - w.stride(a));
        dlt += (cn == to) - (cn == from);
      }
      if (v[a] < w.hi[a]) {
        Color cn = f.at(idx + w.stride(a));
        dlt += (cn == to) - (cn == from);
      }
    }
    return dlt;
  };

  int64_t energy = hamiltonian(f);
  std::vector<Color> digit(size_t(n), 0);
  for (uint64_t s = 0;; ++s) {
    t.energy_hist[size_t(energy)]++;
    for (Index v = 0; v < n; ++v)
      t.marginal_counts[size_t(v)][digit[size_t(v)]][size_t(energy)]++;
    if (keep_states) t.state_energies[size_t(s)] = uint16_t(energy);
    if (s + 1 == n_states) break;
    // Base-3 odometer with incremental energy updates.
    for (Index v = 0;; ++v) {
      Color old = digit[size_t(v)];
      Color nxt = old == 2 ? 0 : Color(old + 1);
      energy += delta(t.cells[size_t(v)], old, nxt);
      f.set(t.cells[size_t(v)], nxt);
      digit[size_t(v)] = nxt;
      if (nxt != 0) break;
    }
  }

  t.min_energy = 0;
  while (t.energy_hist[size_t(t.min_energy)] == 0) ++t.min_energy;
  return t;
}

namespace {

Region region_from_vertices(const std::vector<Vertex>& vs, Coord halo) {
  Vertex lo = vs[0], hi = vs[0];
  for (const Vertex& v : vs)
    for (size_t a = 0; a < v.size(); ++a) {
      lo[a] = std::min(lo[a], v[a]);
      hi[a] = std::max(hi[a], v[a]);
    }
  for (size_t a = 0; a < lo.size(); ++a) {
    lo[a] -= halo;
    hi[a] += halo;
  }
  Region r{Window(lo, hi)};
  for (const Vertex& v : vs) r.insert(v);
  return r;
}

}  // namespace

Region named_domain(const std::string& name, int dim) {
  Vertex origin(size_t(dim), 0);
  if (name == "single") {
    Vertex v = origin;
    v[0] = 1;  // odd cell
    return region_from_vertices({v}, 1);
  }
  if (name == "pair") {
    Vertex v = origin;
    v[0] = 1;
    return region_from_vertices({origin, v}, 1);
  }
  if (name == "plus") {
    std::vector<Vertex> vs{origin};
    for (const Vertex& u : neighbors(origin)) vs.push_back(u);
    return region_from_vertices(vs, 1);
  }
  if (name == "box2") {
    std::vector<Vertex> vs;
    for (Index m = 0; m < (Index(1) << dim); ++m) {
      Vertex v = origin;
      for (int a = 0; a < dim; ++a) v[a] = Coord((m >> a) & 1);
      vs.push_back(v);
    }
    return region_from_vertices(vs, 1);
  }
  if (name == "doubleplus") {
    Vertex u2 = origin;
    u2[0] = 2;
    std::vector<Vertex> vs{origin, u2};
    for (const Vertex& u : neighbors(origin)) vs.push_back(u);
    for (const Vertex& u : neighbors(u2)) vs.push_back(u);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return region_from_vertices(vs, 1);
  }
  throw std::invalid_argument("unknown domain name: " + name);
}

Region odd_hull(const Region& box) {
  return box | (external_boundary(box) & Region::of_parity(box.window(), Parity::Odd));
}

Region even_hull(const Region& box) {
  return box | (external_boundary(box) & Region::of_parity(box.window(), Parity::Even));
}

}  // namespace potts
