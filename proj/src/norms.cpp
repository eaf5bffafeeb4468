#include "qmb/norms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qmb {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t tag) {
  // splitmix64 step over the combined value
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + tag * 0xbf58476d1ce4e5b9ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

VectorState random_interior_vector(const std::vector<FactorKind>& kinds, int trunc, int margin,
                                   const std::vector<double>& phi_grid, std::uint64_t seed) {
  VectorState v(kinds, trunc);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int top = trunc - 1 - margin;
  if (top < 0) throw std::invalid_argument("random_interior_vector: margin exceeds truncation");
  const int nfock = v.fock_factors();
  std::vector<int> idx(static_cast<std::size_t>(nfock), 0);
  // walk the interior sub-box
  bool done = false;
  while (!done) {
    Eigen::Index flat = 0;
    for (int f = 0; f < nfock; ++f) flat = flat * trunc + idx[static_cast<std::size_t>(f)];
    v.data()(flat) = Complex(gauss(rng), gauss(rng));
    done = true;
    for (int f = nfock - 1; f >= 0; --f) {
      if (idx[static_cast<std::size_t>(f)] < top) {
        ++idx[static_cast<std::size_t>(f)];
        for (int g = f + 1; g < nfock; ++g) idx[static_cast<std::size_t>(g)] = 0;
        done = false;
        break;
      }
    }
  }
  v.data().normalize();
  if (!phi_grid.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, phi_grid.size() - 1);
    std::vector<double> phases;
    for (std::size_t c = 0; c < v.phases().size(); ++c) phases.push_back(phi_grid[pick(rng)]);
    v.set_phases(std::move(phases));
  }
  return v;
}

namespace {

void project_tail(VectorState& v, int cut) {
  // zero out the block where every Fock index is < cut
  const int n = v.trunc();
  const int nfock = v.fock_factors();
  std::vector<int> idx(static_cast<std::size_t>(nfock), 0);
  bool done = nfock == 0;
  while (!done) {
    Eigen::Index flat = 0;
    for (int f = 0; f < nfock; ++f) flat = flat * n + idx[static_cast<std::size_t>(f)];
    v.data()(flat) = Complex(0.0, 0.0);
    done = true;
    for (int f = nfock - 1; f >= 0; --f) {
      if (idx[static_cast<std::size_t>(f)] < cut - 1) {
        ++idx[static_cast<std::size_t>(f)];
        for (int g = f + 1; g < nfock; ++g) idx[static_cast<std::size_t>(g)] = 0;
        done = false;
        break;
      }
    }
  }
}

// Power iteration on adj(op)*op at fixed circle phases.
NormResult power_norm_map(const std::vector<FactorKind>& kinds, int trunc, const LinearMap& op,
                          const LinearMap& adj, const std::vector<double>& phases,
                          const NormOptions& opts) {
  VectorState v = random_interior_vector(kinds, trunc, 0, {}, split_seed(opts.seed, 17));
  if (!phases.empty()) v.set_phases(phases);
  double vn = v.norm();
  if (vn == 0.0) return {0.0, true, 0};
  v.data() /= vn;
  double lambda = 0.0;
  for (int it = 1; it <= opts.max_iters; ++it) {
    VectorState w = op(v);
    const double wn = w.norm();
    const double lam = wn * wn;  // Rayleigh quotient of op*op at unit v
    VectorState u = adj(w);
    const double un = u.norm();
    if (un == 0.0 || wn == 0.0) return {std::sqrt(lam), true, it};
    u.data() /= un;
    const bool settled = std::abs(lam - lambda) <= opts.rtol * std::max(lam, 1e-300);
    lambda = lam;
    v = std::move(u);
    if (settled && it > 2) return {std::sqrt(lambda), true, it};
  }
  return {std::sqrt(lambda), false, opts.max_iters};
}

// compress < 0 disables the tail projection.
NormResult sup_over_grid(const TensorExpression& e, double q, int trunc, int compress,
                         const NormOptions& opts) {
  TensorExpression eadj = adjoint(e);
  auto project = [compress](VectorState v) {
    if (compress >= 0) project_tail(v, compress);
    return v;
  };
  LinearMap op = [&](const VectorState& v) { return project(apply(e, q, project(v))); };
  LinearMap adj = [&](const VectorState& v) { return project(apply(eadj, q, project(v))); };
  int ncircle = 0;
  for (FactorKind k : e.kinds())
    if (k == FactorKind::circle) ++ncircle;
  std::vector<double> grid = opts.phi_grid.empty() ? std::vector<double>{0.0} : opts.phi_grid;
  NormResult best{0.0, true, 0};
  std::vector<std::size_t> sel(static_cast<std::size_t>(ncircle), 0);
  bool done = false;
  while (!done) {
    std::vector<double> phases;
    for (std::size_t c = 0; c < sel.size(); ++c) phases.push_back(grid[sel[c]]);
    NormResult r = power_norm_map(e.kinds(), trunc, op, adj, phases, opts);
    if (r.value > best.value) best.value = r.value;
    best.converged = best.converged && r.converged;
    best.iterations = std::max(best.iterations, r.iterations);
    done = true;
    for (std::size_t c = 0; c < sel.size(); ++c) {
      if (sel[c] + 1 < grid.size()) {
        ++sel[c];
        for (std::size_t g = 0; g < c; ++g) sel[g] = 0;
        done = false;
        break;
      }
    }
    if (sel.empty()) break;
  }
  return best;
}

}  // namespace

NormResult map_norm(const std::vector<FactorKind>& kinds, int trunc, const LinearMap& op,
                    const LinearMap& adj, const std::vector<double>& phases,
                    const NormOptions& opts) {
  return power_norm_map(kinds, trunc, op, adj, phases, opts);
}

NormResult operator_norm(const TensorExpression& e, double q, int trunc, const NormOptions& opts) {
  return sup_over_grid(e, q, trunc, -1, opts);
}

NormResult essential_norm_estimate(const TensorExpression& e, double q, int trunc, int cut,
                                   const NormOptions& opts) {
  if (cut >= trunc) throw std::invalid_argument("essential_norm_estimate: cut must be < truncation");
  return sup_over_grid(e, q, trunc, cut, opts);
}

bool num_equal(const TensorExpression& a, const TensorExpression& b, double q, int trunc,
               int trials, double tol, std::uint64_t seed, const std::vector<double>& phi_grid) {
  return residual(a, b, q, trunc, trials, seed, phi_grid) <= tol;
}

double residual(const TensorExpression& a, const TensorExpression& b, double q, int trunc,
                int trials, std::uint64_t seed, const std::vector<double>& phi_grid) {
  TensorExpression diff = sub(a, b);
  const int margin = upward_reach(diff);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    VectorState v = random_interior_vector(diff.kinds(), trunc, margin, phi_grid,
                                           split_seed(seed, static_cast<std::uint64_t>(t)));
    VectorState w = apply(diff, q, v);
    worst = std::max(worst, w.norm());
  }
  return worst;
}

double dq_series_check(double q, int trunc, int terms) {
  if (terms > trunc) throw std::invalid_argument("dq_series_check: K must be <= N");
  std::vector<FactorKind> kinds{FactorKind::fock};
  TensorExpression acc = TensorExpression::atom(kinds, 0, LegAtom::Dq);
  for (int j = 0; j < terms; ++j) {
    LegWord w;
    for (int i = 0; i < j; ++i) w.push_back(LegAtom::S);
    w.push_back(LegAtom::P);
    for (int i = 0; i < j; ++i) w.push_back(LegAtom::Sdag);
    acc = sub(acc, scale(TensorExpression::term(kinds, {w}), Laurent::q(j)));
  }
  return operator_norm(acc, q, trunc).value;
}

}  // namespace qmb
