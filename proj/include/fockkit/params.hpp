#pragma once

#include <vector>

#include "fockkit/error.hpp"
#include "fockkit/rational.hpp"

namespace fockkit {

// (h, H) with H = (h_1, ..., h_{l-1}); h_l is determined by sum h_p = 0.
struct CherednikParams {
  Rational h;
  std::vector<Rational> H;

  int level() const { return static_cast<int>(H.size()) + 1; }

  // 1-based
  Rational h_p(int p) const {
    require(p >= 1 && p <= level(), "h_p index out of range");
    if (p < level()) return H[p - 1];
    Rational acc = 0;
    for (const auto& x : H) acc -= x;
    return acc;
  }

  // h_1 + ... + h_{p-1}
  Rational partial_sum(int p) const {
    Rational acc = 0;
    for (int r = 1; r < p; ++r) acc += h_p(r);
    return acc;
  }
};

}  // namespace fockkit
