// Quantitative q -> 0 laboratory: distances to the limit operators, the
// series identities behind the generation argument, the norm inequality
// surrogate, and point-norm continuity sweeps.
#pragma once

#include "qmb/repcat.hpp"

namespace qmb {

struct SweepConfig {
  std::vector<double> q_list{0.3, 0.5, 0.7, 0.9};
  int trunc = 12;
  int grid = 8;
  int trials = 6;
  double tol = 1e-9;
  std::uint64_t seed = 0x20260809ULL;
  std::vector<int> cuts{2, 4, 6};

  std::vector<double> phi_grid() const;
};

struct DistanceRow {
  std::string generator;  // "z11" (scaled by -q), "z12", "z21", "z22"
  std::string component;  // "xi", "phi", "omega0"
  double q = 0.0;
  double distance = 0.0;
};

// || scaled-image(q) - limit || per generator and component.
std::vector<DistanceRow> limit_distance_table(const SweepConfig& cfg);

// || d_q^2-pattern - sum_{k<=K} q^{2k} (Z11 Z22)^k (I - (Z11 Z22)(Z11 Z22)*)
// (Z11 Z22)*^k || over both direct-sum components; 0 at K = N, q^2 at K = 0.
double dq_square_series_check(double q, int trunc, int K);

struct InequalitySample {
  int index = 0;
  double q = 0.0;
  double rhs = 0.0;                            // ||(Xi + Phi)(a)|| (max of components)
  std::vector<std::pair<int, double>> ests;    // (cut, tail-compression estimate)
  bool violation = false;
};

struct InequalityReport {
  std::vector<InequalitySample> samples;
  int violations = 0;
  double tol = 1e-6;
};

// est(cut) <= ||(Xi + Phi)(a)|| + tol for seeded random elements of degree
// <= 3, at every cut of the schedule.
InequalityReport norm_inequality_sample(const SweepConfig& cfg, int count = 50);

struct IdentityReport {
  std::vector<RelationCheck> checks;
  bool all_pass = true;
};

// The operator identities behind the generation argument: the left inverse
// of the Cq S pattern, Cq^2 = I - d_q^2 across the direct sum, and the
// closed form of Z11 Z22.
IdentityReport generation_identities_check(double q, int trunc);

struct ContinuityRow {
  double q = 0.0, s = 0.0;
  double dev_omega = 0.0;     // || image at q - image at s || under the coherent rep
  double dev_boundary = 0.0;  // same under Xi/Phi (max of components)
};

// Pairwise deviations of the scaled family over the q-list. The element is
// given in the unscaled letters; z_1^1 is multiplied by the symbolic q
// internally.
std::vector<ContinuityRow> continuity_sweep(const FreeElement& a, const std::vector<double>& q_list,
                                            int trunc, int grid = 8);

// q -> 0 limits of the scaled coherent images coincide with the limit-algebra
// generators, canonically and in tail-compressed norm; the boundary limit
// operators match their partners after replacing the circle unitary by the
// shift.
IdentityReport phi0_images_check(int trunc);

}  // namespace qmb
