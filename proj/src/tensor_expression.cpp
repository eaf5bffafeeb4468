#include "qmb/tensor_expression.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmb {

bool atom_is_circle(LegAtom a) { return a == LegAtom::Z || a == LegAtom::Zbar; }

char atom_char(LegAtom a) {
  switch (a) {
    case LegAtom::I: return 'I';
    case LegAtom::S: return 'S';
    case LegAtom::Sdag: return 's';
    case LegAtom::Cq: return 'C';
    case LegAtom::CqInv: return 'c';
    case LegAtom::Dq: return 'd';
    case LegAtom::P: return 'P';
    case LegAtom::Z: return 'z';
    case LegAtom::Zbar: return 'Z';
  }
  return '?';
}

std::string word_str(const LegWord& w) {
  if (w.empty()) return "I";
  std::string s;
  for (LegAtom a : w) s += atom_char(a);
  return s;
}

namespace {

void check_word_kind(const LegWord& w, FactorKind k) {
  for (LegAtom a : w) {
    if (atom_is_circle(a) != (k == FactorKind::circle))
      throw std::invalid_argument("TensorExpression: atom incompatible with factor kind");
  }
}

bool legs_less(const std::vector<LegWord>& a, const std::vector<LegWord>& b) { return a < b; }

}  // namespace

TensorExpression::TensorExpression(std::vector<FactorKind> kinds, ScalarMode mode)
    : kinds_(std::move(kinds)), mode_(mode) {}

TensorExpression TensorExpression::identity(std::vector<FactorKind> kinds, ScalarMode mode) {
  TensorExpression e(std::move(kinds), mode);
  TensorTerm t;
  t.legs.assign(static_cast<std::size_t>(e.factors()), LegWord{});
  t.cpoly = Laurent(1);
  e.terms_.push_back(std::move(t));
  return e;
}

TensorExpression TensorExpression::zero(std::vector<FactorKind> kinds, ScalarMode mode) {
  return TensorExpression(std::move(kinds), mode);
}

TensorExpression TensorExpression::atom(std::vector<FactorKind> kinds, int factor, LegAtom a,
                                        ScalarMode mode) {
  TensorExpression e = identity(std::move(kinds), mode);
  if (factor < 0 || factor >= e.factors())
    throw std::invalid_argument("TensorExpression::atom: factor index out of range");
  if (a != LegAtom::I) e.terms_[0].legs[static_cast<std::size_t>(factor)] = {a};
  check_word_kind(e.terms_[0].legs[static_cast<std::size_t>(factor)],
                  e.kinds_[static_cast<std::size_t>(factor)]);
  return e;
}

TensorExpression TensorExpression::term(std::vector<FactorKind> kinds, std::vector<LegWord> legs,
                                        ScalarMode mode) {
  TensorExpression e(std::move(kinds), mode);
  if (legs.size() != static_cast<std::size_t>(e.factors()))
    throw std::invalid_argument("TensorExpression::term: leg count mismatch");
  for (int f = 0; f < e.factors(); ++f)
    check_word_kind(legs[static_cast<std::size_t>(f)], e.kinds_[static_cast<std::size_t>(f)]);
  TensorTerm t;
  t.cpoly = Laurent(1);
  t.legs = std::move(legs);
  e.terms_.push_back(std::move(t));
  return e;
}

void TensorExpression::add_term(TensorTerm t) {
  if (t.legs.size() != static_cast<std::size_t>(factors()))
    throw std::invalid_argument("TensorExpression::add_term: leg count mismatch");
  for (int f = 0; f < factors(); ++f)
    check_word_kind(t.legs[static_cast<std::size_t>(f)], kinds_[static_cast<std::size_t>(f)]);
  terms_.push_back(std::move(t));
}

void TensorExpression::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const TensorTerm& a, const TensorTerm& b) { return legs_less(a.legs, b.legs); });
  std::vector<TensorTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().legs == t.legs) {
      merged.back().cpoly += t.cpoly;
      merged.back().cnum += t.cnum;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    const bool zero = mode_ == ScalarMode::exact ? t.cpoly.is_zero() : std::abs(t.cnum) == 0.0;
    if (!zero) terms_.push_back(std::move(t));
  }
}

std::string TensorExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (mode_ == ScalarMode::exact)
      os << "(" << t.cpoly.str() << ")";
    else
      os << "(" << t.cnum.real() << (t.cnum.imag() < 0 ? "-" : "+")
         << std::abs(t.cnum.imag()) << "i)";
    for (std::size_t f = 0; f < t.legs.size(); ++f)
      os << (f == 0 ? " " : " (x) ") << word_str(t.legs[f]);
  }
  return os.str();
}

void check_signature(const TensorExpression& a, const TensorExpression& b) {
  if (a.kinds_ != b.kinds_)
    throw std::invalid_argument("TensorExpression: factor signature mismatch");
  if (a.mode_ != b.mode_)
    throw std::invalid_argument("TensorExpression: scalar mode mismatch");
}

TensorExpression add(const TensorExpression& a, const TensorExpression& b) {
  check_signature(a, b);
  TensorExpression r(a.kinds(), a.mode());
  for (const auto& t : a.terms()) r.add_term(t);
  for (const auto& t : b.terms()) r.add_term(t);
  r.canonicalize();
  return r;
}

TensorExpression sub(const TensorExpression& a, const TensorExpression& b) {
  return add(a, scale(b, Complex(-1.0, 0.0)));
}

TensorExpression mul(const TensorExpression& a, const TensorExpression& b) {
  check_signature(a, b);
  TensorExpression r(a.kinds(), a.mode());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      TensorTerm t;
      t.cpoly = ta.cpoly * tb.cpoly;
      t.cnum = ta.cnum * tb.cnum;
      t.legs.resize(static_cast<std::size_t>(a.factors()));
      for (std::size_t f = 0; f < t.legs.size(); ++f) {
        t.legs[f] = ta.legs[f];
        t.legs[f].insert(t.legs[f].end(), tb.legs[f].begin(), tb.legs[f].end());
      }
      r.add_term(std::move(t));
    }
  }
  r.canonicalize();
  return r;
}

TensorExpression scale(const TensorExpression& a, const Laurent& c) {
  if (a.mode() != ScalarMode::exact)
    throw std::invalid_argument("scale(Laurent): expression is numeric");
  TensorExpression r(a.kinds(), a.mode());
  for (auto t : a.terms()) {
    t.cpoly *= c;
    r.add_term(std::move(t));
  }
  r.canonicalize();
  return r;
}

TensorExpression scale(const TensorExpression& a, Complex c) {
  if (a.mode() == ScalarMode::exact) {
    // Real integer-like factors keep exactness; anything else is rejected.
    if (c.imag() == 0.0 && c.real() == std::round(c.real()))
      return scale(a, Laurent(static_cast<std::int64_t>(std::llround(c.real()))));
    throw std::invalid_argument("scale(Complex): convert to numeric mode first");
  }
  TensorExpression r(a.kinds(), a.mode());
  for (auto t : a.terms()) {
    t.cnum *= c;
    r.add_term(std::move(t));
  }
  r.canonicalize();
  return r;
}

namespace {

LegAtom atom_adjoint(LegAtom a) {
  switch (a) {
    case LegAtom::S: return LegAtom::Sdag;
    case LegAtom::Sdag: return LegAtom::S;
    case LegAtom::Z: return LegAtom::Zbar;
    case LegAtom::Zbar: return LegAtom::Z;
    default: return a;  // I, Cq, CqInv, Dq, P are self-adjoint
  }
}

}  // namespace

TensorExpression adjoint(const TensorExpression& a) {
  TensorExpression r(a.kinds(), a.mode());
  for (const auto& t : a.terms()) {
    TensorTerm s;
    s.cpoly = t.cpoly;  // exact coefficients are real
    s.cnum = std::conj(t.cnum);
    s.legs.resize(t.legs.size());
    for (std::size_t f = 0; f < t.legs.size(); ++f) {
      const LegWord& w = t.legs[f];
      LegWord rev(w.rbegin(), w.rend());
      for (LegAtom& at : rev) at = atom_adjoint(at);
      s.legs[f] = std::move(rev);
    }
    r.add_term(std::move(s));
  }
  r.canonicalize();
  return r;
}

TensorExpression tensor(const TensorExpression& a, const TensorExpression& b) {
  if (a.mode() != b.mode())
    throw std::invalid_argument("tensor: scalar mode mismatch");
  std::vector<FactorKind> kinds = a.kinds();
  kinds.insert(kinds.end(), b.kinds().begin(), b.kinds().end());
  TensorExpression r(std::move(kinds), a.mode());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      TensorTerm t;
      t.cpoly = ta.cpoly * tb.cpoly;
      t.cnum = ta.cnum * tb.cnum;
      t.legs = ta.legs;
      t.legs.insert(t.legs.end(), tb.legs.begin(), tb.legs.end());
      r.add_term(std::move(t));
    }
  }
  r.canonicalize();
  return r;
}

TensorExpression to_numeric(const TensorExpression& a, double q) {
  if (a.mode() == ScalarMode::numeric) return a;
  TensorExpression r(a.kinds(), ScalarMode::numeric);
  for (const auto& t : a.terms()) {
    TensorTerm s;
    s.cpoly = Laurent(0);
    s.cnum = Complex(t.cpoly.eval(q), 0.0);
    s.legs = t.legs;
    r.add_term(std::move(s));
  }
  r.canonicalize();
  return r;
}

TensorExpression simplify_isometries(const TensorExpression& a) {
  TensorExpression r(a.kinds(), a.mode());
  for (auto t : a.terms()) {
    for (std::size_t f = 0; f < t.legs.size(); ++f) {
      if (a.kinds()[f] == FactorKind::circle) {
        int net = 0;
        for (LegAtom at : t.legs[f]) net += (at == LegAtom::Z) ? 1 : (at == LegAtom::Zbar ? -1 : 0);
        LegWord w;
        for (int i = 0; i < std::abs(net); ++i) w.push_back(net > 0 ? LegAtom::Z : LegAtom::Zbar);
        t.legs[f] = std::move(w);
        continue;
      }
      // erase (Sdag, S) pairs until none remain
      LegWord& w = t.legs[f];
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] == LegAtom::Sdag && w[i + 1] == LegAtom::S) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                    w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            changed = true;
            break;
          }
        }
      }
    }
    r.add_term(std::move(t));
  }
  r.canonicalize();
  return r;
}

TensorExpression limit_q0(const TensorExpression& a) {
  if (a.mode() != ScalarMode::exact)
    throw std::invalid_argument("limit_q0: requires exact mode");
  TensorExpression r(a.kinds(), ScalarMode::exact);
  for (const auto& t : a.terms()) {
    Rational c0 = t.cpoly.limit_q_to_0();
    if (c0.is_zero()) continue;
    TensorTerm s;
    s.cpoly = Laurent(c0);
    s.legs.resize(t.legs.size());
    for (std::size_t f = 0; f < t.legs.size(); ++f) {
      LegWord w;
      for (LegAtom at : t.legs[f]) {
        switch (at) {
          case LegAtom::Cq:
          case LegAtom::CqInv:
            w.push_back(LegAtom::S);
            w.push_back(LegAtom::Sdag);
            break;
          case LegAtom::Dq:
            w.push_back(LegAtom::P);
            break;
          default:
            w.push_back(at);
        }
      }
      s.legs[f] = std::move(w);
    }
    r.add_term(std::move(s));
  }
  r.canonicalize();
  return r;
}

bool canonically_equal(const TensorExpression& a, const TensorExpression& b, double tol) {
  if (a.kinds() != b.kinds() || a.mode() != b.mode()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    if (ta.legs != tb.legs) return false;
    if (a.mode() == ScalarMode::exact) {
      if (!(ta.cpoly == tb.cpoly)) return false;
    } else if (std::abs(ta.cnum - tb.cnum) > tol) {
      return false;
    }
  }
  return true;
}

int upward_reach(const TensorExpression& a) {
  int reach = 0;
  for (const auto& t : a.terms()) {
    for (const auto& w : t.legs) {
      int shift = 0, hi = 0;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {  // application order
        if (*it == LegAtom::S) ++shift;
        if (*it == LegAtom::Sdag) --shift;
        hi = std::max(hi, shift);
      }
      reach = std::max(reach, hi);
    }
  }
  return reach;
}

}  // namespace qmb
