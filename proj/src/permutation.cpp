#include "qmb/permutation.hpp"

#include <algorithm>

namespace qmb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw std::invalid_argument("Permutation: empty image list");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: images must be a bijection on 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("Permutation: transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= degree(); ++i) im[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& r) {
  if (p.degree() != r.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) im[static_cast<std::size_t>(i - 1)] = p(r(i));
  return Permutation(std::move(im));
}

Permutation product(const Word& w, int n) {
  Permutation acc = Permutation::identity(n);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    acc = compose(Permutation::transposition(*it, n), acc);
  return acc;
}

int length(const Permutation& p) {
  int inv = 0;
  const int n = p.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

bool is_reduced(const Word& w, int n) {
  for (int l : w.letters)
    if (l < 1 || l >= n) return false;
  return static_cast<int>(w.letters.size()) == length(product(w, n));
}

namespace {

// DFS peeling left descents: every reduced word of p starts with a letter i
// such that left-multiplying by s_i shortens p.
void collect_reduced(const Permutation& p, std::vector<int>& prefix,
                     std::set<std::vector<int>>& out) {
  const int len = length(p);
  if (len == 0) {
    out.insert(prefix);
    return;
  }
  const int n = p.degree();
  for (int i = 1; i < n; ++i) {
    Permutation next = compose(Permutation::transposition(i, n), p);
    if (length(next) == len - 1) {
      prefix.push_back(i);
      collect_reduced(next, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::set<std::vector<int>> reduced_words(const Permutation& p) {
  if (p.degree() > 6)
    throw std::invalid_argument("reduced_words: degree guard (n <= 6) exceeded");
  std::set<std::vector<int>> out;
  std::vector<int> prefix;
  collect_reduced(p, prefix, out);
  return out;
}

}  // namespace qmb
