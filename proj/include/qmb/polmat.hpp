// The free *-algebra on the generators z_a^alpha: explicit n=2 relations,
// R-matrix relation generation, the monomial basis, the phase automorphism,
// the embedding into C[SU_2n]_q, and evaluation under representations.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmb/laurent.hpp"
#include "qmb/representation.hpp"

namespace qmb {

struct GeneratorSymbol {
  int a = 1;      // lower index
  int alpha = 1;  // upper index
  bool star = false;

  friend bool operator<(const GeneratorSymbol& x, const GeneratorSymbol& y) {
    return std::tie(x.a, x.alpha, x.star) < std::tie(y.a, y.alpha, y.star);
  }
  friend bool operator==(const GeneratorSymbol& x, const GeneratorSymbol& y) {
    return x.a == y.a && x.alpha == y.alpha && x.star == y.star;
  }
  std::string str() const;
};

inline GeneratorSymbol z(int a, int alpha) { return {a, alpha, false}; }
inline GeneratorSymbol zstar(int a, int alpha) { return {a, alpha, true}; }

using FreeWord = std::vector<GeneratorSymbol>;

// Exact Laurent coefficient times a complex unit factor; the factor stays
// 1 except after the phase automorphism.
struct PhasedLaurent {
  Laurent poly;
  Complex factor{1.0, 0.0};
};

// Finite linear combination of words in the generators; zero terms are
// never stored.
class FreeElement {
public:
  FreeElement() = default;
  static FreeElement unit() { return from_word({}); }
  static FreeElement from_word(FreeWord w, Laurent c = Laurent(1));

  const std::map<FreeWord, PhasedLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool phase_free() const;  // all complex factors equal 1
  int degree() const;       // longest word

  void add(const FreeWord& w, const PhasedLaurent& c);

  friend FreeElement operator+(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator-(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y);
  FreeElement scaled(const Laurent& c) const;

  std::string str() const;

private:
  std::map<FreeWord, PhasedLaurent> terms_;
};

FreeElement adjoint(const FreeElement& e);

// Substitute z_1^1 -> c z_1^1 (and its star alike, c real); the transform
// behind the scaled generator family.
FreeElement scale_z11(const FreeElement& e, const Laurent& c);

struct Relation {
  FreeElement element;  // asserted to vanish under every representation
  std::string label;
};

// The eighteen defining relations of the n=2 algebra: six holomorphic, four
// mixed-diagonal, six mixed-offdiagonal, and the two remaining mixed
// commutation relations.
std::vector<Relation> explicit_relations_n2();

// R coefficient table of the mixed commutation relation.
Laurent r_matrix(int i, int j, int k, int l);

// All index instantiations of the commutation families plus the R-matrix
// mixed relation; guarded to n <= 3.
std::vector<Relation> generated_relations(int n);

struct MatchEntry {
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  bool via_adjoint = false;
};

struct MatchReport {
  std::vector<MatchEntry> matches;
  std::vector<std::size_t> unmatched_a;
  std::vector<std::size_t> unmatched_b;
  bool complete = false;
};

// Matches each A-relation with a B-relation equal up to a nonzero Laurent
// factor, allowing the adjoint of a B-relation (a relation and its adjoint
// assert the same identity). Exact coefficient comparison on words.
MatchReport match_relation_sets(const std::vector<Relation>& a, const std::vector<Relation>& b);

// n x n exponent matrix A; monomial(A) is the row-ordered basis monomial.
struct MonomialMatrix {
  int n = 2;
  std::vector<int> a;  // row-major, a[(row-1)*n + (col-1)] = exponent of z_row^col

  int at(int row, int col) const { return a[static_cast<std::size_t>((row - 1) * n + (col - 1))]; }
};

FreeElement monomial(const MonomialMatrix& m);
int grade(const MonomialMatrix& m);

enum class PhaseIndexConvention { lower, upper };

// z_j^k -> e^{i phi_j} z_j^k (phase keyed by the lower index under the
// default convention), stars conjugated.
FreeElement psi_automorphism(double phi1, double phi2, const FreeElement& e,
                             PhaseIndexConvention conv = PhaseIndexConvention::lower);

struct ZetaImage {
  Laurent coefficient;
  int row = 0, col = 0;  // target t_{row,col}
};

// zeta(z_k^j) = (-q)^{k-n} t_{n+k, n+j}; starred symbols go through adjoint.
ZetaImage zeta_image(const GeneratorSymbol& g, int n);

// *-homomorphic substitution of generator images. Exact whenever the
// element is phase-free and the representation images are exact.
TensorExpression evaluate(const FreeElement& e, const Representation& rep);

// x = (I - z21 z21* - z22 z22*)(I - z12 z12* - z22 z22*).
FreeElement element_x();

struct CoherentMonomial {
  FreeElement element;
  int k = 0, j = 0, m = 0;
  // c(q) with Omega_0(element) vacuum = c(q) e_k (x) e_j (x) e_m
  double normalization(double q) const;
};

// Degree k+j+m monomial in z_1^2, z_2^1, z_2^2 built from the coherent
// ladder structure.
CoherentMonomial coherent_monomial(int k, int j, int m);

// Seeded random elements for the sweep/check samples: up to `max_terms`
// words of length <= max_degree with small integer coefficients.
FreeElement random_free_element(std::uint64_t seed, int max_degree = 3, int max_terms = 4);

}  // namespace qmb
