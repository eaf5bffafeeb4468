#include "qmb/qsu.hpp"

#include <cmath>
#include <stdexcept>

#include "qmb/norms.hpp"

namespace qmb {

namespace {

const std::vector<FactorKind> kOneFock{FactorKind::fock};

}  // namespace

GenMatrix base_rep() {
  GenMatrix g;
  g.n = 2;
  g.entries.assign(4, TensorExpression::zero(kOneFock));
  g.at(1, 1) = TensorExpression::term(kOneFock, {{LegAtom::Sdag, LegAtom::Cq}});
  g.at(1, 2) = scale(TensorExpression::atom(kOneFock, 0, LegAtom::Dq), -Laurent::q(1));
  g.at(2, 1) = TensorExpression::atom(kOneFock, 0, LegAtom::Dq);
  g.at(2, 2) = TensorExpression::term(kOneFock, {{LegAtom::Cq, LegAtom::S}});
  return g;
}

GenMatrix phi_embed(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("phi_embed: require 1 <= i < n");
  GenMatrix base = base_rep();
  GenMatrix g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   TensorExpression::zero(kOneFock));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      if (r >= i && r <= i + 1 && c >= i && c <= i + 1)
        g.at(r, c) = base.at(r - i + 1, c - i + 1);
      else if (r == c)
        g.at(r, c) = TensorExpression::identity(kOneFock);
    }
  return g;
}

GenMatrix tensor_rep(const Word& w, int n, bool allow_non_reduced) {
  if (!allow_non_reduced && !is_reduced(w, n))
    throw std::invalid_argument("tensor_rep: word is not reduced");
  // iterated coproduct: entry(i,j) accumulates A_{i,k1} (x) B_{k1,k2} (x) ...
  GenMatrix acc;
  acc.n = n;
  acc.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                     TensorExpression::zero({}));
  for (int r = 1; r <= n; ++r) acc.at(r, r) = TensorExpression::identity({});
  for (int letter : w.letters) {
    GenMatrix leg = phi_embed(letter, n);
    GenMatrix next;
    next.n = n;
    std::vector<FactorKind> kinds = acc.at(1, 1).kinds();
    kinds.push_back(FactorKind::fock);
    next.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                        TensorExpression::zero(kinds));
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        TensorExpression cell = TensorExpression::zero(kinds);
        for (int k = 1; k <= n; ++k) {
          if (acc.at(r, k).is_zero() || leg.at(k, c).is_zero()) continue;
          cell = add(cell, tensor(acc.at(r, k), leg.at(k, c)));
        }
        next.at(r, c) = std::move(cell);
      }
    acc = std::move(next);
  }
  return acc;
}

GenMatrix chi_phi(const PhaseTuple& phi) {
  const int n = static_cast<int>(phi.phi.size());
  double sum = 0.0;
  for (double p : phi.phi) sum += p;
  const double twopi = 2.0 * M_PI;
  double rem = std::fmod(sum, twopi);
  if (rem < 0) rem += twopi;
  if (std::min(rem, twopi - rem) > 1e-9)
    throw std::invalid_argument("chi_phi: phases must sum to 0 mod 2pi");
  GenMatrix g;
  g.n = n;
  g.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   TensorExpression::zero({}, ScalarMode::numeric));
  for (int j = 1; j <= n; ++j) {
    TensorTerm t;
    t.cnum = std::polar(1.0, phi.phi[static_cast<std::size_t>(j - 1)]);
    TensorExpression e({}, ScalarMode::numeric);
    e.add_term(std::move(t));
    e.canonicalize();
    g.at(j, j) = std::move(e);
  }
  return g;
}

TensorExpression tau_eval(const TensorExpression& e, int factor, double phi) {
  if (factor < 0 || factor >= e.factors())
    throw std::invalid_argument("tau_eval: factor index out of range");
  if (e.kinds()[static_cast<std::size_t>(factor)] != FactorKind::fock)
    throw std::invalid_argument("tau_eval: circle factor targeted");
  const bool zero_phase = phi == 0.0;
  if (e.mode() == ScalarMode::exact && !zero_phase)
    throw std::invalid_argument("tau_eval: nonzero phase requires numeric mode");
  std::vector<FactorKind> kinds;
  for (int f = 0; f < e.factors(); ++f)
    if (f != factor) kinds.push_back(e.kinds()[static_cast<std::size_t>(f)]);
  TensorExpression r(kinds, e.mode());
  for (const auto& t : e.terms()) {
    // value of the removed leg: product over atoms
    Complex val(1.0, 0.0);
    for (LegAtom a : t.legs[static_cast<std::size_t>(factor)]) {
      switch (a) {
        case LegAtom::I: break;
        case LegAtom::S: val *= std::polar(1.0, phi); break;
        case LegAtom::Sdag: val *= std::polar(1.0, -phi); break;
        case LegAtom::Cq:
        case LegAtom::CqInv: break;  // tau sends Cq to 1
        case LegAtom::Dq:
        case LegAtom::P: val = Complex(0.0, 0.0); break;
        default:
          throw std::invalid_argument("tau_eval: circle atom on a Fock factor");
      }
      if (val == Complex(0.0, 0.0)) break;
    }
    if (val == Complex(0.0, 0.0)) continue;
    TensorTerm s;
    s.cpoly = t.cpoly;  // val == 1 whenever we stay exact
    s.cnum = t.cnum * val;
    for (int f = 0; f < e.factors(); ++f)
      if (f != factor) s.legs.push_back(t.legs[static_cast<std::size_t>(f)]);
    r.add_term(std::move(s));
  }
  r.canonicalize();
  return r;
}

TensorExpression qdet(const GenMatrix& g, double q) {
  if (g.n > 4) throw std::invalid_argument("qdet: size guard (n <= 4) exceeded");
  const auto& kinds = g.at(1, 1).kinds();
  const ScalarMode mode = g.at(1, 1).mode();
  TensorExpression acc = TensorExpression::zero(kinds, mode);
  // walk all permutations of 1..n
  std::vector<int> im(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  do {
    Permutation p(im);
    TensorExpression prod = TensorExpression::identity(kinds, mode);
    for (int row = 1; row <= g.n; ++row) prod = mul(prod, g.at(row, p(row)));
    if (mode == ScalarMode::exact)
      prod = scale(prod, Laurent::minus_q_pow(length(p)));
    else
      prod = scale(prod, Complex(Laurent::minus_q_pow(length(p)).eval(q), 0.0));
    acc = add(acc, prod);
  } while (std::next_permutation(im.begin(), im.end()));
  return acc;
}

void RelationReport::record(std::string label, double res, double tol) {
  const bool ok = res <= tol;
  checks.push_back({std::move(label), res, ok});
  all_pass = all_pass && ok;
  worst = std::max(worst, res);
}

namespace {

double scalar_residual(const TensorExpression& lhs, const TensorExpression& rhs) {
  Complex a(0.0, 0.0), b(0.0, 0.0);
  for (const auto& t : lhs.terms()) a += t.cnum;
  for (const auto& t : rhs.terms()) b += t.cnum;
  return std::abs(a - b);
}

}  // namespace

RelationReport verify_slq_relations(const GenMatrix& g, double q, int trunc, int trials,
                                    double tol, std::uint64_t seed) {
  RelationReport report;
  const bool scalar = g.at(1, 1).factors() == 0;
  auto check = [&](const std::string& label, const TensorExpression& lhs,
                   const TensorExpression& rhs) {
    double res = scalar ? scalar_residual(lhs, rhs)
                        : residual(lhs, rhs, q, trunc, trials,
                                   split_seed(seed, report.checks.size()));
    report.record(label, res, tol);
  };
  const Laurent qq = Laurent::q(1);
  const Laurent qmqi = Laurent::q_minus_qinv();
  auto lscale = [&](const TensorExpression& e, const Laurent& c) {
    if (e.mode() == ScalarMode::exact) return scale(e, c);
    return scale(e, Complex(c.eval(q), 0.0));
  };
  const int n = g.n;
  for (int al = 1; al <= n; ++al)
    for (int a = 1; a <= n; ++a)
      for (int be = 1; be <= n; ++be)
        for (int b = 1; b <= n; ++b) {
          const std::string tag = "t" + std::to_string(al) + std::to_string(a) + ",t" +
                                  std::to_string(be) + std::to_string(b);
          if ((a == b && al < be) || (a < b && al == be)) {
            check("q-comm[" + tag + "]", mul(g.at(al, a), g.at(be, b)),
                  lscale(mul(g.at(be, b), g.at(al, a)), qq));
          } else if (al < be && a > b) {
            check("comm[" + tag + "]", mul(g.at(al, a), g.at(be, b)),
                  mul(g.at(be, b), g.at(al, a)));
          } else if (al < be && a < b) {
            check("cross[" + tag + "]",
                  sub(mul(g.at(al, a), g.at(be, b)), mul(g.at(be, b), g.at(al, a))),
                  lscale(mul(g.at(be, a), g.at(al, b)), qmqi));
          }
        }
  if (n <= 4) {
    TensorExpression det = qdet(g, q);
    check("qdet = I", det, TensorExpression::identity(det.kinds(), det.mode()));
  }
  return report;
}

}  // namespace qmb
