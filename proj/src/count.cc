#include "ocagen/count.h"

namespace ocagen {

Count pow2(unsigned exponent) {
  Count c = 1;
  c <<= exponent;
  return c;
}

Count binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

}  // namespace ocagen
