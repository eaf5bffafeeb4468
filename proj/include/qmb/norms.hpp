// Matrix-free norm estimation and the semantic equality oracle.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qmb/state.hpp"

namespace qmb {

struct NormOptions {
  int max_iters = 20000;
  double rtol = 1e-10;
  std::uint64_t seed = 0x51f0d1ceULL;
  // Sample phases for circle factors; the reported norm is the sup over the
  // grid (Cartesian product over circle factors).
  std::vector<double> phi_grid = {0.0};
};

struct NormResult {
  double value = 0.0;
  bool converged = true;
  int iterations = 0;
};

// Deterministic sub-stream seed derived from (seed, tag).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t tag);

// Random unit vector supported on Fock indices <= N-1-margin, with phases
// drawn from phi_grid for circle factors.
VectorState random_interior_vector(const std::vector<FactorKind>& kinds, int trunc, int margin,
                                   const std::vector<double>& phi_grid, std::uint64_t seed);

// Largest singular value via power iteration on adjoint(e)*e.
NormResult operator_norm(const TensorExpression& e, double q, int trunc,
                         const NormOptions& opts = {});

// Power iteration for a general linear map given by its action and the
// action of its adjoint (phases are fixed by the start vector).
using LinearMap = std::function<VectorState(const VectorState&)>;
NormResult map_norm(const std::vector<FactorKind>& kinds, int trunc, const LinearMap& op,
                    const LinearMap& adj, const std::vector<double>& phases,
                    const NormOptions& opts = {});

// ||Q_cut e Q_cut|| with Q_cut = I - (P_{<cut} x ... x P_{<cut}) over the
// Fock factors: the finite surrogate for the quotient norm modulo compacts.
NormResult essential_norm_estimate(const TensorExpression& e, double q, int trunc, int cut,
                                   const NormOptions& opts = {});

// true iff ||(a-b)v|| <= tol * ||v|| for `trials` random interior vectors.
bool num_equal(const TensorExpression& a, const TensorExpression& b, double q, int trunc,
               int trials, double tol, std::uint64_t seed = 0xeab1e5ULL,
               const std::vector<double>& phi_grid = {0.0});

// Worst interior residual sup_v ||(a-b)v||/||v|| over the same sampling.
double residual(const TensorExpression& a, const TensorExpression& b, double q, int trunc,
                int trials, std::uint64_t seed = 0xeab1e5ULL,
                const std::vector<double>& phi_grid = {0.0});

// || d_q - sum_{j<K} q^j S^j (I-SS*) S*^j || at truncation; vanishes at K = N.
double dq_series_check(double q, int trunc, int terms);

}  // namespace qmb
