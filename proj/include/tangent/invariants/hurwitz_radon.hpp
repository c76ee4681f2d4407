// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "tangent/core/error.hpp"

namespace tangent::invariants {

// rho(n) = 8a + 2^b where n = 2^k * odd and k = 4a + b with 0 <= b <= 3.
inline std::int64_t hurwitz_radon(std::int64_t n) {
  if (n <= 0) throw Error("hurwitz_radon: n must be positive");
  int k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return 8 * (k / 4) + (std::int64_t{1} << (k % 4));
}

}  // namespace tangent::invariants
