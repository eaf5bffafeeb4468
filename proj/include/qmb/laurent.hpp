// Exact Laurent polynomials in the deformation parameter q.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "qmb/rational.hpp"

namespace qmb {

// Finite sum c_k q^k, k ranging over (possibly negative) integers, with exact
// rational coefficients. Zero coefficients are never stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(Rational c) {
    if (!c.is_zero()) coeff_[0] = c;
  }
  Laurent(std::int64_t c) : Laurent(Rational(c)) {}

  // c * q^k
  static Laurent monomial(Rational c, int k) {
    Laurent p;
    if (!c.is_zero()) p.coeff_[k] = c;
    return p;
  }
  static Laurent q(int k = 1) { return monomial(Rational(1), k); }
  // (-q)^k, any integer k
  static Laurent minus_q_pow(int k) {
    return monomial(Rational(k % 2 == 0 ? 1 : -1), k);
  }
  // 1 - q^2
  static Laurent one_minus_q2() {
    Laurent p(1);
    p.coeff_[2] = Rational(-1);
    return p;
  }
  // q - q^{-1}
  static Laurent q_minus_qinv() {
    Laurent p;
    p.coeff_[1] = Rational(1);
    p.coeff_[-1] = Rational(-1);
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 &&
           coeff_.begin()->second == Rational(1);
  }
  const std::map<int, Rational>& coefficients() const { return coeff_; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [k, c] : b.coeff_) r.add_term(k, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [k, c] : b.coeff_) r.add_term(k, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, ca] : a.coeff_)
      for (const auto& [kb, cb] : b.coeff_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [k, c] : coeff_) r.coeff_[k] = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    auto key = [](const Laurent& p) {
      std::map<int, std::pair<std::int64_t, std::int64_t>> k;
      for (const auto& [e, c] : p.coeff_) k[e] = {c.num(), c.den()};
      return k;
    };
    return key(a) < key(b);
  }

  // Exact-rational evaluation followed by a single conversion to double.
  double eval(double q) const {
    if (q <= 0.0 || q >= 1.0)
      throw std::domain_error("Laurent::eval: q must lie in (0,1)");
    double acc = 0.0;
    for (const auto& [k, c] : coeff_) acc += c.to_double() * std::pow(q, k);
    return acc;
  }

  // Constant term as q -> 0; throws if a negative power survives.
  Rational limit_q_to_0() const {
    for (const auto& [k, c] : coeff_) {
      (void)c;
      if (k < 0)
        throw std::domain_error("Laurent::limit_q_to_0: negative power present");
    }
    auto it = coeff_.find(0);
    return it == coeff_.end() ? Rational(0) : it->second;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : coeff_) {
      if (!s.empty()) s += " + ";
      s += c.str();
      if (k != 0) s += "*q^" + std::to_string(k);
    }
    return s;
  }

private:
  void add_term(int k, const Rational& c) {
    auto it = coeff_.find(k);
    if (it == coeff_.end()) {
      if (!c.is_zero()) coeff_[k] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeff_.erase(it);
  }

  std::map<int, Rational> coeff_;
};

}  // namespace qmb
