// Tensor-leg expressions over truncated Fock factors and circle factors:
// the carrier of every operator image in this project.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qmb/laurent.hpp"

namespace qmb {

using Complex = std::complex<double>;

// Single-factor symbols. S is the isometric shift e_k -> e_{k+1}; Cq and Dq
// the diagonal operators sqrt(1-q^{2m}) and q^m; P = I - S S*; CqInv the
// Moore-Penrose inverse of Cq. Z is the circle coordinate unitary, Zbar its
// adjoint; both are legal only on circle factors.
enum class LegAtom : std::uint8_t { I, S, Sdag, Cq, CqInv, Dq, P, Z, Zbar };

enum class FactorKind : std::uint8_t { fock, circle };

enum class ScalarMode : std::uint8_t { exact, numeric };

// Product of atoms in operator order: word[0] * word[1] * ...; the last
// entry acts first. Empty word = identity.
using LegWord = std::vector<LegAtom>;

bool atom_is_circle(LegAtom a);
char atom_char(LegAtom a);
std::string word_str(const LegWord& w);

struct TensorTerm {
  Laurent cpoly;        // exact coefficient (mode exact)
  Complex cnum{1.0, 0.0};  // numeric coefficient (mode numeric)
  std::vector<LegWord> legs;
};

// Finite sum of scalar x (one leg-word per tensor factor). Canonical form:
// terms sorted by legs, duplicate legs merged, zero terms dropped. Exact
// mode carries Laurent coefficients; numeric mode carries complex
// coefficients bound to a specific q.
class TensorExpression {
public:
  TensorExpression() = default;
  explicit TensorExpression(std::vector<FactorKind> kinds,
                            ScalarMode mode = ScalarMode::exact);

  static TensorExpression identity(std::vector<FactorKind> kinds,
                                   ScalarMode mode = ScalarMode::exact);
  static TensorExpression zero(std::vector<FactorKind> kinds,
                               ScalarMode mode = ScalarMode::exact);
  // Single atom on one factor, identity elsewhere.
  static TensorExpression atom(std::vector<FactorKind> kinds, int factor, LegAtom a,
                               ScalarMode mode = ScalarMode::exact);
  // One term with explicit legs and unit coefficient.
  static TensorExpression term(std::vector<FactorKind> kinds, std::vector<LegWord> legs,
                               ScalarMode mode = ScalarMode::exact);

  int factors() const { return static_cast<int>(kinds_.size()); }
  const std::vector<FactorKind>& kinds() const { return kinds_; }
  ScalarMode mode() const { return mode_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(TensorTerm t);   // canonicalizes lazily; call canonicalize() when done
  void canonicalize();

  std::string str() const;

private:
  std::vector<FactorKind> kinds_;
  ScalarMode mode_ = ScalarMode::exact;
  std::vector<TensorTerm> terms_;
  friend void check_signature(const TensorExpression&, const TensorExpression&);
};

// --- algebra ---------------------------------------------------------------

TensorExpression add(const TensorExpression& a, const TensorExpression& b);
TensorExpression sub(const TensorExpression& a, const TensorExpression& b);
TensorExpression mul(const TensorExpression& a, const TensorExpression& b);
TensorExpression scale(const TensorExpression& a, const Laurent& c);
TensorExpression scale(const TensorExpression& a, Complex c);

// Term-wise involution: conjugate coefficient, reverse each leg word,
// swap S <-> Sdag and Z <-> Zbar.
TensorExpression adjoint(const TensorExpression& a);

// Appends the factors of b after those of a (operator tensor product).
TensorExpression tensor(const TensorExpression& a, const TensorExpression& b);

// Substitute q and drop to numeric coefficients.
TensorExpression to_numeric(const TensorExpression& a, double q);

// Rewrites every adjacent pair (Sdag, S) inside Fock leg words to the empty
// word (S*S = I holds before truncation) and reduces circle words to their
// net power of Z. Valid in the untruncated algebra only; never applied
// implicitly.
TensorExpression simplify_isometries(const TensorExpression& a);

// Symbolic q -> 0 limit: coefficients keep their constant term (negative
// powers throw), Cq and CqInv become S S*, Dq becomes P.
TensorExpression limit_q0(const TensorExpression& a);

// Canonical (syntactic) equality of canonical forms. Numeric-mode
// coefficients compare within tol.
bool canonically_equal(const TensorExpression& a, const TensorExpression& b,
                       double tol = 0.0);

// Largest intermediate upward index shift produced by any term; interior
// vectors for a relation check must stay this far below the truncation edge.
int upward_reach(const TensorExpression& a);

}  // namespace qmb
