#include "qmb/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qmb {

VectorState::VectorState(std::vector<FactorKind> kinds, int trunc)
    : kinds_(std::move(kinds)), trunc_(trunc) {
  if (trunc_ < 2) throw std::invalid_argument("VectorState: truncation must be >= 2");
  Eigen::Index dim = 1;
  for (FactorKind k : kinds_) {
    if (k == FactorKind::fock) {
      ++fock_factors_;
      dim *= trunc_;
    } else {
      phases_.push_back(0.0);
    }
  }
  data_ = Eigen::VectorXcd::Zero(dim);
}

void VectorState::set_phases(std::vector<double> ph) {
  if (ph.size() != phases_.size())
    throw std::invalid_argument("VectorState::set_phases: phase count mismatch");
  phases_ = std::move(ph);
}

VectorState VectorState::basis(std::vector<FactorKind> kinds, int trunc,
                               const std::vector<int>& fock_indices) {
  VectorState v(std::move(kinds), trunc);
  if (static_cast<int>(fock_indices.size()) != v.fock_factors_)
    throw std::invalid_argument("VectorState::basis: index count mismatch");
  Eigen::Index flat = 0;
  for (int idx : fock_indices) {
    if (idx < 0 || idx >= trunc) throw std::invalid_argument("VectorState::basis: index out of range");
    flat = flat * trunc + idx;
  }
  v.data_(flat) = Complex(1.0, 0.0);
  return v;
}

VectorState VectorState::vacuum(std::vector<FactorKind> kinds, int trunc) {
  VectorState v(std::move(kinds), trunc);
  v.data_(0) = Complex(1.0, 0.0);
  return v;
}

namespace {

// Every Fock atom is a diagonal-weighted shift e_k -> w[k] e_{k+delta}.
struct ShiftDiag {
  int delta = 0;
  Eigen::VectorXd w;
};

ShiftDiag atom_shift_diag(LegAtom a, double q, int n) {
  ShiftDiag op;
  op.w = Eigen::VectorXd::Ones(n);
  switch (a) {
    case LegAtom::I:
      break;
    case LegAtom::S:
      op.delta = 1;
      break;
    case LegAtom::Sdag:
      op.delta = -1;
      break;
    case LegAtom::Cq:
      for (int m = 0; m < n; ++m) op.w(m) = std::sqrt(1.0 - std::pow(q, 2 * m));
      break;
    case LegAtom::CqInv:
      op.w(0) = 0.0;
      for (int m = 1; m < n; ++m) op.w(m) = 1.0 / std::sqrt(1.0 - std::pow(q, 2 * m));
      break;
    case LegAtom::Dq:
      for (int m = 0; m < n; ++m) op.w(m) = std::pow(q, m);
      break;
    case LegAtom::P:
      op.w.setZero();
      op.w(0) = 1.0;
      break;
    default:
      throw std::invalid_argument("atom_shift_diag: circle atom on a Fock factor");
  }
  return op;
}

// Collapse a whole leg word into one shift-diag op, reproducing truncated
// operator products exactly (intermediate indices leaving [0,N) annihilate).
ShiftDiag collapse_word(const LegWord& w, double q, int n) {
  ShiftDiag acc;
  acc.w = Eigen::VectorXd::Ones(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {  // rightmost atom acts first
    ShiftDiag a = atom_shift_diag(*it, q, n);
    ShiftDiag next;
    next.delta = acc.delta + a.delta;
    next.w = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) {
      const int j = k + acc.delta;
      if (j < 0 || j >= n) continue;
      const int j2 = j + a.delta;
      if (j2 < 0 || j2 >= n) continue;
      next.w(k) = acc.w(k) * a.w(j);
    }
    acc = std::move(next);
  }
  return acc;
}

void apply_axis(const ShiftDiag& op, int axis, int nfock, int n, const Eigen::VectorXcd& in,
                Eigen::VectorXcd& out) {
  // Row-major layout: axis 0 has the largest stride.
  Eigen::Index stride = 1;
  for (int f = axis + 1; f < nfock; ++f) stride *= n;
  const Eigen::Index block = stride * n;
  out.setZero();
  for (Eigen::Index base = 0; base < in.size(); base += block) {
    for (int k = 0; k < n; ++k) {
      const int k2 = k + op.delta;
      if (k2 < 0 || k2 >= n) continue;
      const double wk = op.w(k);
      if (wk == 0.0) continue;
      out.segment(base + k2 * stride, stride) += wk * in.segment(base + k * stride, stride);
    }
  }
}

}  // namespace

Eigen::MatrixXcd atom_matrix(LegAtom a, double q, int trunc) {
  if (trunc < 2) throw std::invalid_argument("atom_matrix: truncation must be >= 2");
  if (atom_is_circle(a)) throw std::invalid_argument("atom_matrix: circle atom has no Fock matrix");
  ShiftDiag op = atom_shift_diag(a, q, trunc);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(trunc, trunc);
  for (int k = 0; k < trunc; ++k) {
    const int k2 = k + op.delta;
    if (k2 >= 0 && k2 < trunc) m(k2, k) = op.w(k);
  }
  return m;
}

VectorState apply(const TensorExpression& e, double q, const VectorState& v) {
  if (e.kinds() != v.kinds())
    throw std::invalid_argument("apply: expression/state factor mismatch");
  const int n = v.trunc();
  const int nfock = v.fock_factors();
  VectorState out(v.kinds(), n);
  out.set_phases(v.phases());
  Eigen::VectorXcd scratch(v.dim()), current(v.dim());
  for (const auto& t : e.terms()) {
    Complex coeff = e.mode() == ScalarMode::exact ? Complex(t.cpoly.eval(q), 0.0) : t.cnum;
    // circle legs contribute e^{i phi k} with k the net power of Z
    int circle_index = 0, fock_axis = 0;
    current = v.data();
    for (int f = 0; f < e.factors(); ++f) {
      const auto& w = t.legs[static_cast<std::size_t>(f)];
      if (e.kinds()[static_cast<std::size_t>(f)] == FactorKind::circle) {
        int net = 0;
        for (LegAtom a : w) net += (a == LegAtom::Z) ? 1 : (a == LegAtom::Zbar ? -1 : 0);
        const double phi = v.phases()[static_cast<std::size_t>(circle_index)];
        coeff *= std::polar(1.0, phi * net);
        ++circle_index;
        continue;
      }
      if (!w.empty()) {
        ShiftDiag op = collapse_word(w, q, n);
        apply_axis(op, fock_axis, nfock, n, current, scratch);
        current.swap(scratch);
      }
      ++fock_axis;
    }
    out.data() += coeff * current;
  }
  return out;
}

}  // namespace qmb
