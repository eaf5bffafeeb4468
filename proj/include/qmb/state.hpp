// Truncated product-space vectors and matrix-free application of
// tensor expressions.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qmb/tensor_expression.hpp"

namespace qmb {

// Dense coordinates over the product basis of the Fock factors (truncation N
// each); circle factors carry only a sample phase and act through scalars.
class VectorState {
public:
  VectorState(std::vector<FactorKind> kinds, int trunc);

  int trunc() const { return trunc_; }
  const std::vector<FactorKind>& kinds() const { return kinds_; }
  int fock_factors() const { return fock_factors_; }
  Eigen::Index dim() const { return data_.size(); }

  Eigen::VectorXcd& data() { return data_; }
  const Eigen::VectorXcd& data() const { return data_; }

  double& phase(int circle_index) { return phases_[static_cast<std::size_t>(circle_index)]; }
  const std::vector<double>& phases() const { return phases_; }
  void set_phases(std::vector<double> ph);

  // Basis vector with the given Fock indices (one per Fock factor).
  static VectorState basis(std::vector<FactorKind> kinds, int trunc,
                           const std::vector<int>& fock_indices);
  static VectorState vacuum(std::vector<FactorKind> kinds, int trunc);

  double norm() const { return data_.norm(); }

private:
  std::vector<FactorKind> kinds_;
  int trunc_ = 0;
  int fock_factors_ = 0;
  std::vector<double> phases_;  // one per circle factor, in factor order
  Eigen::VectorXcd data_;
};

// Single-factor matrix of a Fock atom at truncation N (banded; S maps
// e_{N-1} to 0). Rejects circle atoms.
Eigen::MatrixXcd atom_matrix(LegAtom a, double q, int trunc);

// v |-> e(v). Exact-mode expressions are evaluated at q; numeric-mode
// expressions ignore q (their coefficients are already bound).
VectorState apply(const TensorExpression& e, double q, const VectorState& v);

}  // namespace qmb
