#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace catalan {

using Count = boost::multiprecision::cpp_int;

// c_n = binom(2n, n) / (n + 1), exact for any n.
Count catalan_number(unsigned n);

// t_n = (2n)! / n! = (n + 1)! c_n: labelled plane trees with n edges, and match sets of size n.
Count labelled_tree_count(unsigned n);

// |A_n|: match sets of size n made only of pure matches. Zero for even n, t_m t_{m+1} for n = 2m + 1.
Count pure_match_set_count(unsigned n);

Count factorial(unsigned n);

// Narrowing helper for tallies known to fit; throws std::overflow_error otherwise.
long long to_int64(const Count& c);

}  // namespace catalan
