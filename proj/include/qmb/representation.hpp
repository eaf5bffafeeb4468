// A representation of the quantized matrix-ball algebra: images of the four
// generators as tensor expressions on a fixed factor signature.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "qmb/tensor_expression.hpp"

namespace qmb {

struct Representation {
  std::string name;
  double q = 0.5;
  std::vector<FactorKind> kinds;
  // unstarred generator images, index (a-1)*2 + (alpha-1) for z_a^alpha
  std::array<TensorExpression, 4> images;
  std::vector<double> phi_grid{0.0};  // sample grid for circle factors

  const TensorExpression& image(int a, int alpha) const {
    return images[static_cast<std::size_t>((a - 1) * 2 + (alpha - 1))];
  }
  TensorExpression& image(int a, int alpha) {
    return images[static_cast<std::size_t>((a - 1) * 2 + (alpha - 1))];
  }
};

}  // namespace qmb
