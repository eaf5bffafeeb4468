// Symmetric group machinery: composition, inversion-count length,
// reduced-word validation and enumeration.
#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

namespace qmb {

// One-line notation: images[i] is the image of i+1, values in 1..n.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Adjacent transposition s_i = (i, i+1) inside S_n, 1 <= i <= n-1.
  static Permutation transposition(int i, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

private:
  std::vector<int> images_;
};

// Sequence of adjacent-transposition indices, each in 1..n-1.
struct Word {
  std::vector<int> letters;
};

// compose(p, r) applies r first: (p*r)(i) = p(r(i)).
Permutation compose(const Permutation& p, const Permutation& r);

// Product s_{j_1} s_{j_2} ... s_{j_m} of a word in S_n (rightmost applied first).
Permutation product(const Word& w, int n);

// Inversion count; equals the minimal word length.
int length(const Permutation& p);

bool is_reduced(const Word& w, int n);

// All reduced words of p. Guarded to degree <= 6.
std::set<std::vector<int>> reduced_words(const Permutation& p);

}  // namespace qmb
