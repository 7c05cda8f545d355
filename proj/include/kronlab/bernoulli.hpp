#pragma once

#include "kronlab/rational.hpp"

namespace kronlab {

// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
Rational bernoulli_number(unsigned n);

// B_n(x) = sum_j C(n,j) B_j x^(n-j)
Rational bernoulli_polynomial(unsigned n, const Rational& x);

}  // namespace kronlab
