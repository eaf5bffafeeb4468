// Representations of C[SU_n]_q: the SU(2) base representation, the block
// embeddings, tensor representations from reduced words, one-dimensional
// characters, Toeplitz characters tau_phi, and the q-determinant.
#pragma once

#include <string>
#include <vector>

#include "qmb/permutation.hpp"
#include "qmb/tensor_expression.hpp"

namespace qmb {

// n x n array of generator images t_{ij}; all entries share one factor
// signature.
struct GenMatrix {
  int n = 0;
  std::vector<TensorExpression> entries;  // row-major, (i,j) with 1-based accessor

  const TensorExpression& at(int i, int j) const {
    return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
  TensorExpression& at(int i, int j) {
    return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
};

// phi_1..phi_n with sum = 0 mod 2pi.
struct PhaseTuple {
  std::vector<double> phi;
};

// The 2x2 matrix T on one Fock factor: T11 = S*Cq, T12 = -q Dq, T21 = Dq,
// T22 = Cq S, with exact coefficients.
GenMatrix base_rep();

// Block embedding: the 2x2 block at rows/cols (i, i+1) carries base_rep,
// the rest is delta_{kj} I. One Fock factor.
GenMatrix phi_embed(int i, int n);

// pi_s(t_ij) for a reduced word w: the path sum over index chains with the
// k-th leg on factor k. Non-reduced words are rejected unless allowed.
GenMatrix tensor_rep(const Word& w, int n, bool allow_non_reduced = false);

// One-dimensional character chi_phi(t_ij) = e^{i phi_j} delta_ij; zero
// tensor factors, numeric scalars.
GenMatrix chi_phi(const PhaseTuple& phi);

// Evaluate the Toeplitz character on one Fock factor: S -> e^{i phi},
// S* -> e^{-i phi}, Cq -> 1, Dq -> 0, P -> 0; the factor disappears.
// Exact expressions stay exact when phi = 0, otherwise the result is
// numeric and the input must already be numeric.
TensorExpression tau_eval(const TensorExpression& e, int factor, double phi);

// Row-ordered q-determinant sum_{w in S_n} (-q)^{l(w)} t_{1,w(1)}...t_{n,w(n)}.
// q is only consulted for numeric-mode matrices.
TensorExpression qdet(const GenMatrix& g, double q = 0.5);

struct RelationCheck {
  std::string label;
  double residual = 0.0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass = true;
  double worst = 0.0;

  void record(std::string label, double res, double tol);
};

// Interior residuals of the C[SL_n]_q commutation relations and det_q = I
// under the given generator images. Scalar (zero-factor) matrices are
// checked by direct coefficient comparison.
RelationReport verify_slq_relations(const GenMatrix& g, double q, int trunc, int trials,
                                    double tol, std::uint64_t seed = 0x50a7ULL);

}  // namespace qmb
