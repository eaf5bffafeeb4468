#include "qmb/polmat.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmb {

std::string GeneratorSymbol::str() const {
  std::string s = "z" + std::to_string(a) + "^" + std::to_string(alpha);
  if (star) s += "*";
  return s;
}

FreeElement FreeElement::from_word(FreeWord w, Laurent c) {
  FreeElement e;
  e.add(w, {std::move(c), Complex(1.0, 0.0)});
  return e;
}

bool FreeElement::phase_free() const {
  for (const auto& [w, c] : terms_) {
    (void)w;
    if (c.factor != Complex(1.0, 0.0)) return false;
  }
  return true;
}

int FreeElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) {
    (void)c;
    d = std::max(d, static_cast<int>(w.size()));
  }
  return d;
}

void FreeElement::add(const FreeWord& w, const PhasedLaurent& c) {
  if (c.poly.is_zero() || c.factor == Complex(0.0, 0.0)) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
    return;
  }
  if (it->second.factor == c.factor) {
    it->second.poly += c.poly;
    if (it->second.poly.is_zero()) terms_.erase(it);
    return;
  }
  throw std::invalid_argument("FreeElement::add: cannot merge differing phase factors");
}

FreeElement operator+(const FreeElement& x, const FreeElement& y) {
  FreeElement r = x;
  for (const auto& [w, c] : y.terms_) r.add(w, c);
  return r;
}

FreeElement operator-(const FreeElement& x, const FreeElement& y) {
  FreeElement r = x;
  for (const auto& [w, c] : y.terms_) r.add(w, {-c.poly, c.factor});
  return r;
}

FreeElement operator*(const FreeElement& x, const FreeElement& y) {
  FreeElement r;
  for (const auto& [wx, cx] : x.terms_)
    for (const auto& [wy, cy] : y.terms_) {
      FreeWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      r.add(w, {cx.poly * cy.poly, cx.factor * cy.factor});
    }
  return r;
}

FreeElement FreeElement::scaled(const Laurent& c) const {
  FreeElement r;
  for (const auto& [w, pc] : terms_) r.add(w, {pc.poly * c, pc.factor});
  return r;
}

std::string FreeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.poly.str() << ")";
    if (c.factor != Complex(1.0, 0.0)) os << "*e^{i arg}";
    for (const auto& g : w) os << " " << g.str();
    if (w.empty()) os << " 1";
  }
  return os.str();
}

FreeElement adjoint(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    FreeWord rev(w.rbegin(), w.rend());
    for (auto& g : rev) g.star = !g.star;
    r.add(rev, {c.poly, std::conj(c.factor)});
  }
  return r;
}

FreeElement scale_z11(const FreeElement& e, const Laurent& c) {
  FreeElement r;
  for (const auto& [w, pc] : e.terms()) {
    Laurent poly = pc.poly;
    for (const auto& g : w)
      if (g.a == 1 && g.alpha == 1) poly *= c;
    r.add(w, {poly, pc.factor});
  }
  return r;
}

namespace {

FreeElement comm_q(GeneratorSymbol g1, GeneratorSymbol g2, Laurent c) {
  // g1 g2 - c * g2 g1
  return FreeElement::from_word({g1, g2}) - FreeElement::from_word({g2, g1}, std::move(c));
}

}  // namespace

std::vector<Relation> explicit_relations_n2() {
  std::vector<Relation> rels;
  const Laurent q1 = Laurent::q(1);
  const Laurent q2 = Laurent::q(2);
  const Laurent one(1);
  const Laurent omq2 = Laurent::one_minus_q2();
  const Laurent qmqi = Laurent::q_minus_qinv();
  auto add = [&](const char* label, FreeElement e) { rels.push_back({std::move(e), label}); };

  // holomorphic commutation
  add("h:z11 z21", comm_q(z(1, 1), z(2, 1), q1));
  add("h:z21 z12", comm_q(z(2, 1), z(1, 2), one));
  add("h:z11 z12", comm_q(z(1, 1), z(1, 2), q1));
  add("h:z21 z22", comm_q(z(2, 1), z(2, 2), q1));
  add("h:z11 z22", comm_q(z(1, 1), z(2, 2), one) -
                       FreeElement::from_word({z(1, 2), z(2, 1)}, qmqi));
  add("h:z12 z22", comm_q(z(1, 2), z(2, 2), q1));

  // mixed diagonal
  {
    FreeElement e = FreeElement::from_word({zstar(1, 1), z(1, 1)}) -
                    FreeElement::from_word({z(1, 1), zstar(1, 1)}, q2) +
                    FreeElement::from_word({z(2, 1), zstar(2, 1)}, omq2) +
                    FreeElement::from_word({z(1, 2), zstar(1, 2)}, omq2) -
                    FreeElement::from_word({z(2, 2), zstar(2, 2)},
                                           Laurent::q(-2) * omq2 * omq2) -
                    FreeElement::from_word({}, omq2);
    add("d:z11", std::move(e));
  }
  {
    FreeElement e = FreeElement::from_word({zstar(2, 1), z(2, 1)}) -
                    FreeElement::from_word({z(2, 1), zstar(2, 1)}, q2) +
                    FreeElement::from_word({z(2, 2), zstar(2, 2)}, omq2) -
                    FreeElement::from_word({}, omq2);
    add("d:z21", std::move(e));
  }
  {
    FreeElement e = FreeElement::from_word({zstar(1, 2), z(1, 2)}) -
                    FreeElement::from_word({z(1, 2), zstar(1, 2)}, q2) +
                    FreeElement::from_word({z(2, 2), zstar(2, 2)}, omq2) -
                    FreeElement::from_word({}, omq2);
    add("d:z12", std::move(e));
  }
  {
    FreeElement e = FreeElement::from_word({zstar(2, 2), z(2, 2)}) -
                    FreeElement::from_word({z(2, 2), zstar(2, 2)}, q2) -
                    FreeElement::from_word({}, omq2);
    add("d:z22", std::move(e));
  }

  // mixed off-diagonal
  add("m:z11*+z21", comm_q(zstar(1, 1), z(2, 1), q1) -
                        FreeElement::from_word({z(2, 2), zstar(1, 2)}, qmqi));
  add("m:z22*+z21", comm_q(zstar(2, 2), z(2, 1), q1));
  add("m:z11*+z12", comm_q(zstar(1, 1), z(1, 2), q1) -
                        FreeElement::from_word({z(2, 2), zstar(2, 1)}, qmqi));
  add("m:z22*+z12", comm_q(zstar(2, 2), z(1, 2), q1));
  add("m:z11*+z22", comm_q(zstar(1, 1), z(2, 2), Laurent(1)));
  add("m:z12*+z21", comm_q(zstar(1, 2), z(2, 1), Laurent(1)));

  // remaining mixed commutation (adjoint companions of the commuting pair)
  add("m:z22*+z11", comm_q(zstar(2, 2), z(1, 1), Laurent(1)));
  add("m:z21*+z12", comm_q(zstar(2, 1), z(1, 2), Laurent(1)));
  return rels;
}

Laurent r_matrix(int i, int j, int k, int l) {
  if (i != j && i == k && j == l) return Laurent::q(-1);
  if (i == j && j == k && k == l) return Laurent(1);
  if (i == j && k == l && l > j) return -(Laurent::q(-2) - Laurent(1));
  return Laurent();
}

std::vector<Relation> generated_relations(int n) {
  if (n > 3) throw std::invalid_argument("generated_relations: guard (n <= 3) exceeded");
  std::vector<Relation> rels;
  const Laurent q1 = Laurent::q(1);
  const Laurent qmqi = Laurent::q_minus_qinv();
  auto tag = [](const char* fam, int a, int al, int b, int be) {
    std::ostringstream os;
    os << fam << "[" << a << al << "|" << b << be << "]";
    return os.str();
  };
  for (int a = 1; a <= n; ++a)
    for (int al = 1; al <= n; ++al)
      for (int b = 1; b <= n; ++b)
        for (int be = 1; be <= n; ++be) {
          if ((a == b && al < be) || (a < b && al == be))
            rels.push_back({comm_q(z(a, al), z(b, be), q1), tag("zaa1", a, al, b, be)});
          if (al < be && a > b)
            rels.push_back({comm_q(z(a, al), z(b, be), Laurent(1)), tag("zaa2", a, al, b, be)});
          if (al < be && a < b)
            rels.push_back({comm_q(z(a, al), z(b, be), Laurent(1)) -
                                FreeElement::from_word({z(a, be), z(b, al)}, qmqi),
                            tag("zaa3", a, al, b, be)});
          // starred families
          if ((a == b && al < be) || (a < b && al == be))
            rels.push_back(
                {comm_q(zstar(b, be), zstar(a, al), q1), tag("zaa1*", a, al, b, be)});
          if (al < be && a > b)
            rels.push_back({comm_q(zstar(b, be), zstar(a, al), Laurent(1)),
                            tag("zaa2*", a, al, b, be)});
          if (al < be && a < b)
            rels.push_back({comm_q(zstar(b, be), zstar(a, al), Laurent(1)) -
                                FreeElement::from_word({zstar(b, al), zstar(a, be)}, qmqi),
                            tag("zaa3*", a, al, b, be)});
        }
  // mixed relation for every ordered pair
  for (int b = 1; b <= n; ++b)
    for (int be = 1; be <= n; ++be)
      for (int a = 1; a <= n; ++a)
        for (int al = 1; al <= n; ++al) {
          FreeElement e = FreeElement::from_word({zstar(b, be), z(a, al)});
          for (int bp = 1; bp <= n; ++bp)
            for (int ap = 1; ap <= n; ++ap)
              for (int bep = 1; bep <= n; ++bep)
                for (int alp = 1; alp <= n; ++alp) {
                  Laurent c = r_matrix(b, a, bp, ap) * r_matrix(be, al, bep, alp);
                  if (c.is_zero()) continue;
                  e = e - FreeElement::from_word({z(ap, alp), zstar(bp, bep)},
                                                 Laurent::q(2) * c);
                }
          if (a == b && al == be)
            e = e - FreeElement::from_word({}, Laurent::one_minus_q2());
          rels.push_back({std::move(e), tag("zaa4", b, be, a, al) + "*"});
        }
  return rels;
}

namespace {

// x == lambda * y for some nonzero Laurent lambda, by cross-multiplication.
bool proportional(const FreeElement& x, const FreeElement& y) {
  if (x.terms().size() != y.terms().size() || x.terms().empty()) return false;
  auto ix = x.terms().begin(), iy = y.terms().begin();
  if (!x.phase_free() || !y.phase_free()) return false;
  const Laurent lx = ix->second.poly, ly = iy->second.poly;
  for (; ix != x.terms().end(); ++ix, ++iy) {
    if (ix->first != iy->first) return false;
    if (!(ix->second.poly * ly == iy->second.poly * lx)) return false;
  }
  return true;
}

}  // namespace

MatchReport match_relation_sets(const std::vector<Relation>& a, const std::vector<Relation>& b) {
  MatchReport rep;
  std::vector<FreeElement> badj;
  badj.reserve(b.size());
  for (const auto& r : b) badj.push_back(adjoint(r.element));
  std::vector<bool> bmatched(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (proportional(a[i].element, b[j].element)) {
        rep.matches.push_back({i, j, false});
        bmatched[j] = true;
        found = true;
      } else if (proportional(a[i].element, badj[j])) {
        rep.matches.push_back({i, j, true});
        bmatched[j] = true;
        found = true;
      }
    }
    if (!found) rep.unmatched_a.push_back(i);
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!bmatched[j]) rep.unmatched_b.push_back(j);
  rep.complete = rep.unmatched_a.empty() && rep.unmatched_b.empty();
  return rep;
}

FreeElement monomial(const MonomialMatrix& m) {
  FreeWord w;
  for (int row = m.n; row >= 1; --row)
    for (int col = m.n; col >= 1; --col)
      for (int rep = 0; rep < m.at(row, col); ++rep) w.push_back(z(row, col));
  return FreeElement::from_word(std::move(w));
}

int grade(const MonomialMatrix& m) {
  int s = 0;
  for (int v : m.a) s += v;
  return s;
}

FreeElement psi_automorphism(double phi1, double phi2, const FreeElement& e,
                             PhaseIndexConvention conv) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    double arg = 0.0;
    for (const auto& g : w) {
      const int idx = conv == PhaseIndexConvention::lower ? g.a : g.alpha;
      const double phi = idx == 1 ? phi1 : phi2;
      arg += g.star ? -phi : phi;
    }
    r.add(w, {c.poly, c.factor * std::polar(1.0, arg)});
  }
  return r;
}

ZetaImage zeta_image(const GeneratorSymbol& g, int n) {
  if (g.star) throw std::invalid_argument("zeta_image: starred symbols go through adjoint");
  return {Laurent::minus_q_pow(g.a - n), n + g.a, n + g.alpha};
}

TensorExpression evaluate(const FreeElement& e, const Representation& rep) {
  const bool exact = rep.image(1, 1).mode() == ScalarMode::exact && e.phase_free();
  TensorExpression acc = TensorExpression::zero(rep.kinds,
                                                exact ? ScalarMode::exact : ScalarMode::numeric);
  for (const auto& [w, c] : e.terms()) {
    TensorExpression prod = TensorExpression::identity(rep.kinds, ScalarMode::exact);
    for (const auto& g : w) {
      const TensorExpression& img = rep.image(g.a, g.alpha);
      prod = mul(prod, g.star ? adjoint(img) : img);
    }
    if (exact) {
      acc = add(acc, scale(prod, c.poly));
    } else {
      prod = to_numeric(prod, rep.q);
      acc = add(acc, scale(prod, c.factor * Complex(c.poly.eval(rep.q), 0.0)));
    }
  }
  return acc;
}

FreeElement element_x() {
  FreeElement first = FreeElement::unit() -
                      FreeElement::from_word({z(2, 1), zstar(2, 1)}) -
                      FreeElement::from_word({z(2, 2), zstar(2, 2)});
  FreeElement second = FreeElement::unit() -
                       FreeElement::from_word({z(1, 2), zstar(1, 2)}) -
                       FreeElement::from_word({z(2, 2), zstar(2, 2)});
  return first * second;
}

double CoherentMonomial::normalization(double q) const {
  auto beta = [q](int r) {
    double b = 1.0;
    for (int i = 1; i <= r; ++i) b *= std::sqrt(1.0 - std::pow(q, 2 * i));
    return b;
  };
  return beta(k) * beta(j) * beta(m);
}

CoherentMonomial coherent_monomial(int k, int j, int m) {
  if (k < 0 || j < 0 || m < 0) throw std::invalid_argument("coherent_monomial: negative index");
  // Raise the outer legs while the middle leg is still at the vacuum so the
  // d_q legs of z_1^2 and z_2^1 contribute exactly 1.
  FreeWord w;
  for (int i = 0; i < j; ++i) w.push_back(z(2, 2));
  for (int i = 0; i < k; ++i) w.push_back(z(1, 2));
  for (int i = 0; i < m; ++i) w.push_back(z(2, 1));
  CoherentMonomial out;
  out.element = FreeElement::from_word(std::move(w));
  out.k = k;
  out.j = j;
  out.m = m;
  return out;
}

FreeElement random_free_element(std::uint64_t seed, int max_degree, int max_terms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> wlen(0, max_degree);
  std::uniform_int_distribution<int> gen(0, 7);
  std::uniform_int_distribution<int> coef(1, 4);
  FreeElement e;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    FreeWord w;
    const int len = wlen(rng);
    for (int i = 0; i < len; ++i) {
      const int g = gen(rng);
      w.push_back({(g & 1) + 1, ((g >> 1) & 1) + 1, (g & 4) != 0});
    }
    const int c = coef(rng);
    e = e + FreeElement::from_word(std::move(w), Laurent(c <= 2 ? c : 2 - c));
  }
  return e;
}

}  // namespace qmb
