// The representation catalog: box diagrams, the Fock representation, the
// coherent family, the boundary families, their limit operators and the
// circle-extended representation.
#pragma once

#include <array>
#include <optional>

#include "qmb/polmat.hpp"
#include "qmb/qsu.hpp"
#include "qmb/representation.hpp"

namespace qmb {

enum class BoxColor : std::uint8_t { white, dark, light };

// Four slots, one per tensor factor of the Fock representation in the fixed
// word [2,1,3,2]. Dark applies tau_0 to that factor, light applies tau_phi.
struct BoxDiagram {
  std::array<BoxColor, 4> colors{BoxColor::white, BoxColor::white, BoxColor::white,
                                 BoxColor::white};
  std::array<double, 4> phases{0.0, 0.0, 0.0, 0.0};  // used for light slots

  static BoxDiagram all_white() { return {}; }
  static BoxDiagram coherent(double phi);
};

// pi_F built as tensor_rep([2,1,3,2], 4) composed with the embedding; the
// construction is regression-checked against the closed-form image table.
Representation fock_rep(double q);

// The closed-form images of the four generators. The first term of z_1^1
// carries Cq S on the second leg; this is the variant whose starred images
// annihilate the vacuum.
std::array<TensorExpression, 4> fock_formula_table();

// Apply the diagram coloring to the Fock images.
Representation diagram_rep(const BoxDiagram& d, double q);

// Coherent family: light slot at factor 2; vacuum eigenvalue of z_1^1 is
// e^{+i phi} (checked at construction).
Representation coherent_rep(double phi, double q);

// Boundary families with an honest circle leg; phi_grid carries the sample
// phases used by norms over the circle factor.
Representation xi_rep(double q, std::vector<double> phi_grid);
Representation phi_rep(double q, std::vector<double> phi_grid);

// z (x) Omega_0 on one circle plus three Fock legs.
Representation pi_q_rep(double q, std::vector<double> phi_grid);

struct OpPair {
  TensorExpression first;   // Xi-side component
  TensorExpression second;  // Phi-side component
};

// q -> 0 limits Z_i^j of the scaled boundary images; indices (a, alpha).
OpPair limit_generator(int a, int alpha);

// Generators of the limit algebra on three Fock legs:
// S (x) S* (x) S,  I (x) P (x) S,  S (x) P (x) I,  I (x) S (x) I.
std::array<TensorExpression, 4> b0_generators();

// The b0 generator matched to Z_a^alpha (circle legs replaced by shifts).
const TensorExpression& b0_partner(int a, int alpha);

struct KernelPoset {
  std::vector<std::string> nodes;                      // family names
  std::vector<std::pair<std::string, std::string>> edges;  // pi -> pi' : ker pi' inside ker pi
};

// Static inclusion diagram over the seven representation families.
KernelPoset kernel_poset();

// All seven families at representative phases, for catalog dumps and
// relation sweeps.
std::vector<Representation> seven_families(double q, double phi);

// Applies Omega_0 to the coherent monomial and checks the vacuum image is
// c * e_k (x) e_j (x) e_m; returns the measured deviation.
double verify_coherent_monomial(const CoherentMonomial& cm, double q, int trunc);

}  // namespace qmb
