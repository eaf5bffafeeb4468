#include "qmb/repcat.hpp"

#include <cmath>
#include <stdexcept>

#include "qmb/norms.hpp"
#include "qmb/state.hpp"

namespace qmb {

namespace {

const std::vector<FactorKind> kFourFock{FactorKind::fock, FactorKind::fock, FactorKind::fock,
                                        FactorKind::fock};
const std::vector<FactorKind> kThreeFock{FactorKind::fock, FactorKind::fock, FactorKind::fock};
const std::vector<FactorKind> kXiKinds{FactorKind::circle, FactorKind::fock, FactorKind::fock};
const std::vector<FactorKind> kPhiKinds{FactorKind::fock, FactorKind::fock, FactorKind::circle};
const std::vector<FactorKind> kPiKinds{FactorKind::circle, FactorKind::fock, FactorKind::fock,
                                       FactorKind::fock};

TensorExpression four_term(std::vector<LegWord> legs) {
  return TensorExpression::term(kFourFock, std::move(legs));
}

}  // namespace

BoxDiagram BoxDiagram::coherent(double phi) {
  BoxDiagram d;
  d.colors[1] = BoxColor::light;  // upper-left slot = factor 2
  d.phases[1] = phi;
  return d;
}

std::array<TensorExpression, 4> fock_formula_table() {
  const LegWord CS{LegAtom::Cq, LegAtom::S};
  const LegWord SC{LegAtom::Sdag, LegAtom::Cq};
  const LegWord D{LegAtom::Dq};
  const LegWord E{};
  std::array<TensorExpression, 4> t{
      TensorExpression::zero(kFourFock), TensorExpression::zero(kFourFock),
      TensorExpression::zero(kFourFock), TensorExpression::zero(kFourFock)};
  // z_1^1 = dq (x) CqS (x) I (x) dq + (-q)^{-1} CqS (x) I (x) S*Cq (x) CqS
  t[0] = add(four_term({D, CS, E, D}),
             scale(four_term({CS, E, SC, CS}), Laurent::minus_q_pow(-1)));
  // z_1^2 = CqS (x) I (x) dq (x) I
  t[1] = four_term({CS, E, D, E});
  // z_2^1 = I (x) I (x) dq (x) CqS
  t[2] = four_term({E, E, D, CS});
  // z_2^2 = I (x) I (x) CqS (x) I
  t[3] = four_term({E, E, CS, E});
  return t;
}

Representation fock_rep(double q) {
  Word sigma_word{{2, 1, 3, 2}};
  GenMatrix pi_sigma = tensor_rep(sigma_word, 4);
  Representation rep;
  rep.name = "fock";
  rep.q = q;
  rep.kinds = kFourFock;
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al) {
      ZetaImage zi = zeta_image(z(a, al), 2);
      rep.image(a, al) = scale(pi_sigma.at(zi.row, zi.col), zi.coefficient);
    }
  const auto table = fock_formula_table();
  for (int i = 0; i < 4; ++i) {
    if (!canonically_equal(rep.images[static_cast<std::size_t>(i)],
                           table[static_cast<std::size_t>(i)]))
      throw std::logic_error("fock_rep: tensor construction disagrees with the image table");
  }
  return rep;
}

Representation diagram_rep(const BoxDiagram& d, double q) {
  Representation fock = fock_rep(q);
  bool nonzero_phase = false;
  for (int s = 0; s < 4; ++s)
    if (d.colors[static_cast<std::size_t>(s)] == BoxColor::light &&
        d.phases[static_cast<std::size_t>(s)] != 0.0)
      nonzero_phase = true;
  Representation rep;
  rep.name = "diagram";
  rep.q = q;
  std::array<TensorExpression, 4> imgs = fock.images;
  if (nonzero_phase)
    for (auto& e : imgs) e = to_numeric(e, q);
  // evaluate colored slots from the highest factor index down
  for (int s = 3; s >= 0; --s) {
    const BoxColor c = d.colors[static_cast<std::size_t>(s)];
    if (c == BoxColor::white) continue;
    const double phi = c == BoxColor::dark ? 0.0 : d.phases[static_cast<std::size_t>(s)];
    for (auto& e : imgs) e = tau_eval(e, s, phi);
  }
  rep.kinds = imgs[0].kinds();
  rep.images = std::move(imgs);
  return rep;
}

Representation coherent_rep(double phi, double q) {
  Representation rep = diagram_rep(BoxDiagram::coherent(phi), q);
  rep.name = "coherent";
  // Vacuum eigenvalue check pins the sign convention of the light slot.
  VectorState vac = VectorState::vacuum(rep.kinds, 6);
  VectorState w = apply(rep.image(1, 1), q, vac);
  const Complex got = vac.data().dot(w.data());
  if (std::abs(got - std::polar(1.0, phi)) > 1e-12)
    throw std::logic_error("coherent_rep: vacuum eigenvalue of z_1^1 is not e^{+i phi}");
  return rep;
}

namespace {

TensorExpression xi_im(int a, int al) {
  auto t = [&](std::vector<LegWord> legs) {
    return TensorExpression::term(kXiKinds, std::move(legs));
  };
  const LegWord CS{LegAtom::Cq, LegAtom::S};
  const LegWord SC{LegAtom::Sdag, LegAtom::Cq};
  const LegWord D{LegAtom::Dq};
  const LegWord Zl{LegAtom::Z};
  const LegWord E{};
  if (a == 2 && al == 2) return t({E, CS, E});
  if (a == 1 && al == 2) return t({Zl, D, E});
  if (a == 2 && al == 1) return t({E, D, CS});
  return scale(t({Zl, SC, CS}), Laurent::minus_q_pow(-1));  // z_1^1
}

TensorExpression phi_im(int a, int al) {
  auto t = [&](std::vector<LegWord> legs) {
    return TensorExpression::term(kPhiKinds, std::move(legs));
  };
  const LegWord CS{LegAtom::Cq, LegAtom::S};
  const LegWord SC{LegAtom::Sdag, LegAtom::Cq};
  const LegWord D{LegAtom::Dq};
  const LegWord Zl{LegAtom::Z};
  const LegWord E{};
  if (a == 2 && al == 2) return t({E, CS, E});
  if (a == 1 && al == 2) return t({CS, D, E});
  if (a == 2 && al == 1) return t({E, D, Zl});
  return scale(t({CS, SC, Zl}), Laurent::minus_q_pow(-1));  // z_1^1
}

}  // namespace

Representation xi_rep(double q, std::vector<double> phi_grid) {
  Representation rep;
  rep.name = "xi";
  rep.q = q;
  rep.kinds = kXiKinds;
  rep.phi_grid = std::move(phi_grid);
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al) rep.image(a, al) = xi_im(a, al);
  return rep;
}

Representation phi_rep(double q, std::vector<double> phi_grid) {
  Representation rep;
  rep.name = "phi";
  rep.q = q;
  rep.kinds = kPhiKinds;
  rep.phi_grid = std::move(phi_grid);
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al) rep.image(a, al) = phi_im(a, al);
  return rep;
}

Representation pi_q_rep(double q, std::vector<double> phi_grid) {
  Representation omega0 = diagram_rep(BoxDiagram::coherent(0.0), q);
  Representation rep;
  rep.name = "pi_q";
  rep.q = q;
  rep.kinds = kPiKinds;
  rep.phi_grid = std::move(phi_grid);
  TensorExpression zleg = TensorExpression::atom({FactorKind::circle}, 0, LegAtom::Z);
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al) rep.image(a, al) = tensor(zleg, omega0.image(a, al));
  return rep;
}

OpPair limit_generator(int a, int alpha) {
  auto xi = [&](std::vector<LegWord> legs) {
    return TensorExpression::term(kXiKinds, std::move(legs));
  };
  auto ph = [&](std::vector<LegWord> legs) {
    return TensorExpression::term(kPhiKinds, std::move(legs));
  };
  const LegWord Sw{LegAtom::S};
  const LegWord Sd{LegAtom::Sdag};
  const LegWord Pw{LegAtom::P};
  const LegWord Zl{LegAtom::Z};
  const LegWord E{};
  if (a == 2 && alpha == 2) return {xi({E, Sw, E}), ph({E, Sw, E})};
  if (a == 1 && alpha == 2) return {xi({Zl, Pw, E}), ph({Sw, Pw, E})};
  if (a == 2 && alpha == 1) return {xi({E, Pw, Sw}), ph({E, Pw, Zl})};
  return {xi({Zl, Sd, Sw}), ph({Sw, Sd, Zl})};  // Z_1^1
}

std::array<TensorExpression, 4> b0_generators() {
  auto t = [](std::vector<LegWord> legs) {
    return TensorExpression::term(kThreeFock, std::move(legs));
  };
  const LegWord Sw{LegAtom::S};
  const LegWord Sd{LegAtom::Sdag};
  const LegWord Pw{LegAtom::P};
  const LegWord E{};
  return {t({Sw, Sd, Sw}), t({E, Pw, Sw}), t({Sw, Pw, E}), t({E, Sw, E})};
}

const TensorExpression& b0_partner(int a, int alpha) {
  static const std::array<TensorExpression, 4> gens = b0_generators();
  if (a == 1 && alpha == 1) return gens[0];  // S (x) S* (x) S
  if (a == 2 && alpha == 1) return gens[1];  // I (x) P (x) S
  if (a == 1 && alpha == 2) return gens[2];  // S (x) P (x) I
  return gens[3];                            // I (x) S (x) I
}

KernelPoset kernel_poset() {
  KernelPoset p;
  p.nodes = {"fock",          "coherent",     "xi",          "phi",
             "lower-boundary", "edge-boundary", "one-dimensional"};
  p.edges = {{"coherent", "fock"},
             {"xi", "coherent"},
             {"phi", "coherent"},
             {"edge-boundary", "phi"},
             {"lower-boundary", "phi"},
             {"edge-boundary", "xi"},
             {"lower-boundary", "xi"},
             {"one-dimensional", "edge-boundary"},
             {"one-dimensional", "lower-boundary"}};
  return p;
}

std::vector<Representation> seven_families(double q, double phi) {
  std::vector<Representation> out;
  out.push_back(fock_rep(q));
  out.push_back(coherent_rep(phi, q));
  out.push_back(xi_rep(q, {phi}));
  out.push_back(phi_rep(q, {phi}));
  // light at slots 1 and 4, dark at slot 2 (one Fock factor survives)
  {
    BoxDiagram d;
    d.colors = {BoxColor::light, BoxColor::dark, BoxColor::white, BoxColor::light};
    d.phases = {phi, 0.0, 0.0, phi / 2};
    Representation r = diagram_rep(d, q);
    r.name = "lower-boundary";
    out.push_back(std::move(r));
  }
  // dark at slots 1 and 2, light at slot 3
  {
    BoxDiagram d;
    d.colors = {BoxColor::dark, BoxColor::dark, BoxColor::light, BoxColor::white};
    d.phases = {0.0, 0.0, phi, 0.0};
    Representation r = diagram_rep(d, q);
    r.name = "edge-boundary";
    out.push_back(std::move(r));
  }
  // fully colored: dark, dark, light, light
  {
    BoxDiagram d;
    d.colors = {BoxColor::dark, BoxColor::dark, BoxColor::light, BoxColor::light};
    d.phases = {0.0, 0.0, phi, phi / 3};
    Representation r = diagram_rep(d, q);
    r.name = "one-dimensional";
    out.push_back(std::move(r));
  }
  return out;
}

double verify_coherent_monomial(const CoherentMonomial& cm, double q, int trunc) {
  const int needed = std::max({cm.k, cm.j, cm.m}) + 2;
  if (trunc < needed) throw std::invalid_argument("verify_coherent_monomial: truncation too small");
  Representation omega0 = diagram_rep(BoxDiagram::coherent(0.0), q);
  TensorExpression img = evaluate(cm.element, omega0);
  VectorState vac = VectorState::vacuum(kThreeFock, trunc);
  VectorState got = apply(img, q, vac);
  VectorState want = VectorState::basis(kThreeFock, trunc, {cm.k, cm.j, cm.m});
  want.data() *= cm.normalization(q);
  const double dev = (got.data() - want.data()).norm();
  if (dev > 1e-9)
    throw std::logic_error("coherent_monomial: ladder convention failed verification");
  return dev;
}

}  // namespace qmb
