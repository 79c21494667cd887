#include "catalan/counting.hpp"

#include <limits>
#include <stdexcept>

namespace catalan {

Count catalan_number(unsigned n) {
  // c_{k+1} = c_k * 2(2k+1) / (k+2); the division is exact at every step.
  Count c = 1;
  for (unsigned k = 0; k < n; ++k) {
    c *= 2 * (2 * Count(k) + 1);
    c /= k + 2;
  }
  return c;
}

Count factorial(unsigned n) {
  Count f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Count labelled_tree_count(unsigned n) {
  Count t = 1;
  for (unsigned k = n + 1; k <= 2 * n; ++k) t *= k;
  return t;
}

Count pure_match_set_count(unsigned n) {
  if (n % 2 == 0) return 0;
  const unsigned m = (n - 1) / 2;
  return labelled_tree_count(m) * labelled_tree_count(m + 1);
}

long long to_int64(const Count& c) {
  if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
    throw std::overflow_error("count does not fit in 64 bits: " + c.str());
  return c.convert_to<long long>();
}

}  // namespace catalan
