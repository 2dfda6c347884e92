#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ocagen {

// Exact non-negative counts; a_n and l_k leave 64 bits quickly.
using Count = boost::multiprecision::cpp_int;

Count pow2(unsigned exponent);
Count binomial(unsigned n, unsigned k);

}  // namespace ocagen
