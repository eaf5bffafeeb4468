#include "qmb/limitlab.hpp"

#include <cmath>

#include "qmb/norms.hpp"
#include "qmb/state.hpp"

namespace qmb {

std::vector<double> SweepConfig::phi_grid() const {
  std::vector<double> g;
  for (int i = 0; i < grid; ++i) g.push_back(2.0 * M_PI * i / grid);
  return g;
}

namespace {

struct GenInfo {
  int a, alpha;
  const char* label;
};

constexpr GenInfo kGenerators[] = {
    {1, 1, "z11"}, {1, 2, "z12"}, {2, 1, "z21"}, {2, 2, "z22"}};

TensorExpression scaled_image(const Representation& rep, int a, int alpha) {
  const TensorExpression& img = rep.image(a, alpha);
  if (a == 1 && alpha == 1) return scale(img, -Laurent::q(1));
  return img;
}

TensorExpression circle_to_shift(const TensorExpression& e) {
  std::vector<FactorKind> kinds(e.kinds().size(), FactorKind::fock);
  TensorExpression r(kinds, e.mode());
  for (auto t : e.terms()) {
    for (auto& w : t.legs)
      for (auto& a : w) {
        if (a == LegAtom::Z) a = LegAtom::S;
        if (a == LegAtom::Zbar) a = LegAtom::Sdag;
      }
    r.add_term(std::move(t));
  }
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<DistanceRow> limit_distance_table(const SweepConfig& cfg) {
  std::vector<DistanceRow> rows;
  NormOptions opts;
  opts.seed = cfg.seed;
  opts.phi_grid = cfg.phi_grid();
  for (double q : cfg.q_list) {
    Representation xi = xi_rep(q, opts.phi_grid);
    Representation ph = phi_rep(q, opts.phi_grid);
    Representation omega0 = diagram_rep(BoxDiagram::coherent(0.0), q);
    for (const auto& g : kGenerators) {
      OpPair lim = limit_generator(g.a, g.alpha);
      rows.push_back({g.label, "xi", q,
                      operator_norm(sub(scaled_image(xi, g.a, g.alpha), lim.first), q, cfg.trunc,
                                    opts)
                          .value});
      rows.push_back({g.label, "phi", q,
                      operator_norm(sub(scaled_image(ph, g.a, g.alpha), lim.second), q, cfg.trunc,
                                    opts)
                          .value});
      rows.push_back({g.label, "omega0", q,
                      operator_norm(sub(scaled_image(omega0, g.a, g.alpha),
                                        b0_partner(g.a, g.alpha)),
                                    q, cfg.trunc, opts)
                          .value});
    }
  }
  return rows;
}

double dq_square_series_check(double q, int trunc, int K) {
  if (K > trunc) throw std::invalid_argument("dq_square_series_check: K must be <= N");
  double worst = 0.0;
  for (int side = 0; side < 2; ++side) {
    OpPair z11 = limit_generator(1, 1);
    OpPair z22 = limit_generator(2, 2);
    // closed form of the product (the words contract to z (x) I (x) S and
    // S (x) I (x) z); the identity itself is checked separately
    TensorExpression zz = simplify_isometries(
        mul(side == 0 ? z11.first : z11.second, side == 0 ? z22.first : z22.second));
    TensorExpression mid = sub(TensorExpression::identity(zz.kinds()), mul(zz, adjoint(zz)));
    // d_q^2 on the Fock leg opposite the circle leg
    const int leg = side == 0 ? 2 : 0;
    TensorExpression target = mul(TensorExpression::atom(zz.kinds(), leg, LegAtom::Dq),
                                  TensorExpression::atom(zz.kinds(), leg, LegAtom::Dq));
    TensorExpression acc = TensorExpression::zero(zz.kinds());
    TensorExpression power = TensorExpression::identity(zz.kinds());
    for (int k = 0; k <= K; ++k) {
      acc = add(acc, scale(mul(mul(power, mid), adjoint(power)), Laurent::q(2 * k)));
      power = mul(power, zz);
    }
    worst = std::max(worst, operator_norm(sub(target, acc), q, trunc).value);
  }
  return worst;
}

InequalityReport norm_inequality_sample(const SweepConfig& cfg, int count) {
  InequalityReport report;
  NormOptions opts;
  opts.seed = cfg.seed;
  opts.phi_grid = cfg.phi_grid();
  for (double q : cfg.q_list) {
    Representation xi = xi_rep(q, opts.phi_grid);
    Representation ph = phi_rep(q, opts.phi_grid);
    Representation omega0 = diagram_rep(BoxDiagram::coherent(0.0), q);
    for (int i = 0; i < count; ++i) {
      FreeElement a = random_free_element(split_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      InequalitySample sample;
      sample.index = i;
      sample.q = q;
      const double nxi = operator_norm(evaluate(a, xi), q, cfg.trunc, opts).value;
      const double nph = operator_norm(evaluate(a, ph), q, cfg.trunc, opts).value;
      sample.rhs = std::max(nxi, nph);
      TensorExpression om = evaluate(a, omega0);
      for (int cut : cfg.cuts) {
        const double est = essential_norm_estimate(om, q, cfg.trunc, cut, opts).value;
        sample.ests.push_back({cut, est});
        if (est > sample.rhs + report.tol) sample.violation = true;
      }
      if (sample.violation) ++report.violations;
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

IdentityReport generation_identities_check(double q, int trunc) {
  IdentityReport report;
  auto record = [&](std::string label, double res, double tol) {
    const bool ok = res <= tol;
    report.checks.push_back({std::move(label), res, ok});
    report.all_pass = report.all_pass && ok;
  };
  for (int side = 0; side < 2; ++side) {
    const std::string tag = side == 0 ? "[xi]" : "[phi]";
    const auto kinds = side == 0
                           ? std::vector<FactorKind>{FactorKind::circle, FactorKind::fock,
                                                     FactorKind::fock}
                           : std::vector<FactorKind>{FactorKind::fock, FactorKind::fock,
                                                     FactorKind::circle};
    // (i) left inverse of the Cq S pattern on the middle leg
    TensorExpression cs = TensorExpression::term(kinds, {{}, {LegAtom::Cq, LegAtom::S}, {}});
    TensorExpression linv =
        TensorExpression::term(kinds, {{}, {LegAtom::Sdag, LegAtom::CqInv}, {}});
    record("left-inverse" + tag,
           residual(mul(linv, cs), TensorExpression::identity(kinds), q, trunc, 6), 1e-10);
    // (ii) Cq^2 = I - d_q^2 on the leg opposite the circle factor
    const int leg = side == 0 ? 2 : 0;
    TensorExpression c2 = TensorExpression::term(kinds, [&] {
      std::vector<LegWord> legs(3);
      legs[static_cast<std::size_t>(leg)] = {LegAtom::Cq, LegAtom::Cq};
      return legs;
    }());
    TensorExpression d2 = TensorExpression::term(kinds, [&] {
      std::vector<LegWord> legs(3);
      legs[static_cast<std::size_t>(leg)] = {LegAtom::Dq, LegAtom::Dq};
      return legs;
    }());
    record("cq2-complement" + tag,
           residual(c2, sub(TensorExpression::identity(kinds), d2), q, trunc, 6), 1e-12);
    // (iii) closed form of Z11 Z22
    OpPair z11 = limit_generator(1, 1);
    OpPair z22 = limit_generator(2, 2);
    TensorExpression prod = simplify_isometries(
        mul(side == 0 ? z11.first : z11.second, side == 0 ? z22.first : z22.second));
    TensorExpression want =
        side == 0 ? TensorExpression::term(kinds, {{LegAtom::Z}, {}, {LegAtom::S}})
                  : TensorExpression::term(kinds, {{LegAtom::S}, {}, {LegAtom::Z}});
    record("z11z22-closed-form" + tag, canonically_equal(prod, want) ? 0.0 : 1.0, 0.5);
    // the complement identity I - (Z11 Z22)(Z11 Z22)* = P pattern
    TensorExpression mid = sub(TensorExpression::identity(kinds), mul(prod, adjoint(prod)));
    TensorExpression pexp = TensorExpression::term(kinds, [&] {
      std::vector<LegWord> legs(3);
      legs[static_cast<std::size_t>(leg)] = {LegAtom::P};
      return legs;
    }());
    record("zz-complement-projection" + tag, residual(mid, pexp, q, trunc, 6), 1e-12);
  }
  return report;
}

std::vector<ContinuityRow> continuity_sweep(const FreeElement& a, const std::vector<double>& q_list,
                                            int trunc, int grid) {
  FreeElement scaled = scale_z11(a, Laurent::q(1));
  std::vector<double> phis;
  for (int i = 0; i < grid; ++i) phis.push_back(2.0 * M_PI * i / grid);
  std::vector<ContinuityRow> rows;
  // cache per-q images
  std::vector<TensorExpression> om_imgs, xi_imgs, ph_imgs;
  for (double q : q_list) {
    om_imgs.push_back(evaluate(scaled, diagram_rep(BoxDiagram::coherent(0.0), q)));
    xi_imgs.push_back(evaluate(scaled, xi_rep(q, phis)));
    ph_imgs.push_back(evaluate(scaled, phi_rep(q, phis)));
  }
  NormOptions opts;
  auto dev = [&](const TensorExpression& e1, double q1, const TensorExpression& e2, double q2,
                 const std::vector<double>& phases) {
    TensorExpression a1 = adjoint(e1), a2 = adjoint(e2);
    LinearMap op = [&](const VectorState& v) {
      VectorState w = apply(e1, q1, v);
      w.data() -= apply(e2, q2, v).data();
      return w;
    };
    LinearMap adj = [&](const VectorState& v) {
      VectorState w = apply(a1, q1, v);
      w.data() -= apply(a2, q2, v).data();
      return w;
    };
    return map_norm(e1.kinds(), trunc, op, adj, phases, opts).value;
  };
  for (std::size_t i = 0; i < q_list.size(); ++i)
    for (std::size_t j = i; j < q_list.size(); ++j) {
      ContinuityRow row;
      row.q = q_list[i];
      row.s = q_list[j];
      row.dev_omega = dev(om_imgs[i], q_list[i], om_imgs[j], q_list[j], {});
      double worst = 0.0;
      for (double phi : phis) {
        worst = std::max(worst, dev(xi_imgs[i], q_list[i], xi_imgs[j], q_list[j], {phi}));
        worst = std::max(worst, dev(ph_imgs[i], q_list[i], ph_imgs[j], q_list[j], {phi}));
      }
      row.dev_boundary = worst;
      rows.push_back(row);
    }
  return rows;
}

IdentityReport phi0_images_check(int trunc) {
  IdentityReport report;
  auto record = [&](std::string label, double res, double tol) {
    const bool ok = res <= tol;
    report.checks.push_back({std::move(label), res, ok});
    report.all_pass = report.all_pass && ok;
  };
  const double q = 0.5;  // atoms surviving the limit are q-independent
  Representation omega0 = diagram_rep(BoxDiagram::coherent(0.0), q);
  for (const auto& g : kGenerators) {
    const std::string tag = std::string("[") + g.label + "]";
    TensorExpression lim = limit_q0(scaled_image(omega0, g.a, g.alpha));
    const TensorExpression& partner = b0_partner(g.a, g.alpha);
    record("omega0-limit-canonical" + tag,
           canonically_equal(simplify_isometries(lim), partner) ? 0.0 : 1.0, 0.5);
    NormOptions opts;
    record("omega0-limit-compressed" + tag,
           essential_norm_estimate(sub(lim, partner), q, trunc, 4, opts).value, 1e-10);
    // boundary limit operators: replacing the circle unitary by the shift
    // lands on the same generator
    OpPair zij = limit_generator(g.a, g.alpha);
    record("boundary-shape-xi" + tag,
           canonically_equal(simplify_isometries(circle_to_shift(zij.first)), partner) ? 0.0 : 1.0,
           0.5);
    record("boundary-shape-phi" + tag,
           canonically_equal(simplify_isometries(circle_to_shift(zij.second)), partner) ? 0.0 : 1.0,
           0.5);
  }
  return report;
}

}  // namespace qmb
