#include "potts/glauber.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace potts {

Coloring init_pure(const Region& lambda, const BoundaryCondition& bc, Rng& rng) {
  if (bc.kind == BoundaryCondition::Kind::Explicit)
    throw std::invalid_argument("init_pure: requires even-i or odd-i boundary conditions");
  Coloring f = make_coloring(lambda, bc);
  const Window& w = f.window;
  for (Index c : lambda.cells()) {
    if (parity(w.vertex_of(c)) == bc.fixed_parity()) {
      f.set(c, bc.color);
    } else {
      f.set(c, c_add(bc.color, rng.coin() ? 1 : 2));
    }
  }
  return f;
}

Coloring init_uniform(const Region& lambda, const BoundaryCondition& bc, Rng& rng) {
  Coloring f = make_coloring(lambda, bc);
  for (Index c : lambda.cells()) f.set(c, Color(rng.bounded(3)));
  return f;
}

ChainState make_chain(Coloring f, Beta beta, Rng rng) {
  ChainState st;
  st.cells = f.lambda.cells();
  st.coloring = std::move(f);
  st.energy = hamiltonian(st.coloring);
  st.rng = rng;
  (void)beta;
  return st;
}

namespace {

struct StepTables {
  // exp(-beta * k) for k = 0..2d.
  std::vector<double> w;
  explicit StepTables(Beta beta, int d) {
    if (!beta.is_inf()) {
      w.resize(size_t(2 * d) + 1);
      for (size_t k = 0; k < w.size(); ++k) w[k] = std::exp(-beta.value * double(k));
    }
  }
};

}  // namespace

static void heat_bath_step_impl(ChainState& st, Beta beta, const StepTables& tab) {
  Coloring& f = st.coloring;
  const Window& w = f.window;
  const int d = w.dim();
  const Index idx = st.cells[size_t(st.rng.bounded(st.cells.size()))];

  int n[3] = {0, 0, 0};
  for (int a = 0; a < d; ++a) {
    ++n[f.at(idx - w.stride(a))];
    ++n[f.at(idx + w.stride(a))];
  }

  Color next;
  if (beta.is_inf()) {
    int mn = std::min(n[0], std::min(n[1], n[2]));
    Color mins[3];
    int k = 0;
    for (Color c = 0; c < 3; ++c)
      if (n[c] == mn) mins[k++] = c;
    next = k == 1 ? mins[0] : mins[st.rng.bounded(uint64_t(k))];
    st.last_prob_sum = 1.0;
  } else {
    double w0 = tab.w[size_t(n[0])], w1 = tab.w[size_t(n[1])], w2 = tab.w[size_t(n[2])];
    double total = w0 + (w1 + w2);
    double u = st.rng.uniform() * total;
    next = u < w0 ? Color(0) : (u < w0 + w1 ? Color(1) : Color(2));
    st.last_prob_sum = (w0 + w1 + w2) / total;
  }

  Color old = f.at(idx);
  if (next != old) {
    st.energy += n[next] - n[old];
    f.set(idx, next);
  }
  ++st.step_index;
}

void heat_bath_step(ChainState& st, Beta beta) {
  StepTables tab(beta, st.coloring.window.dim());
  heat_bath_step_impl(st, beta, tab);
}

ChainState run(const Region& lambda, const BoundaryCondition& bc, const SamplerConfig& cfg,
               const SnapshotFn& on_snapshot, const Coloring* init_from_file) {
  BcValidation v = validate_bc(lambda, bc);
  if (!v.ok) throw std::invalid_argument("run: invalid boundary conditions: " + v.reason);
  Rng rng(cfg.seed);
  Coloring f;
  switch (cfg.init) {
    case SamplerConfig::Init::PureRandomOdd: f = init_pure(lambda, bc, rng); break;
    case SamplerConfig::Init::Uniform: f = init_uniform(lambda, bc, rng); break;
    case SamplerConfig::Init::FromFile:
      if (!init_from_file) throw std::invalid_argument("run: init=FromFile without a coloring");
      f = *init_from_file;
      break;
  }
  ChainState st = make_chain(std::move(f), cfg.beta, rng);
  StepTables tab(cfg.beta, st.coloring.window.dim());
  for (uint64_t s = 0; s < cfg.steps; ++s) {
    heat_bath_step_impl(st, cfg.beta, tab);
    if (cfg.snapshot_every && on_snapshot && (s + 1) % cfg.snapshot_every == 0)
      on_snapshot(st.coloring, s + 1);
  }
  return st;
}

std::vector<ChainState> run_chains(const Region& lambda, const BoundaryCondition& bc,
                                   const SamplerConfig& cfg, unsigned n_chains) {
  std::vector<ChainState> out(n_chains);
  std::vector<std::thread> threads;
  threads.reserve(n_chains);
  for (unsigned k = 0; k < n_chains; ++k) {
    threads.emplace_back([&, k] {
      Rng rng = Rng::for_chain(cfg.seed, k);
      Coloring f;
      switch (cfg.init) {
        case SamplerConfig::Init::PureRandomOdd: f = init_pure(lambda, bc, rng); break;
        case SamplerConfig::Init::Uniform: f = init_uniform(lambda, bc, rng); break;
        case SamplerConfig::Init::FromFile:
          throw std::invalid_argument("run_chains: init=FromFile unsupported");
      }
      ChainState st = make_chain(std::move(f), cfg.beta, rng);
      StepTables tab(cfg.beta, st.coloring.window.dim());
      for (uint64_t s = 0; s < cfg.steps; ++s) heat_bath_step_impl(st, cfg.beta, tab);
      out[k] = std::move(st);
    });
  }
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace potts
