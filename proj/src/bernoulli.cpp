#include "kronlab/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace kronlab {

Rational bernoulli_number(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) {
    unsigned m = static_cast<unsigned>(memo.size());
    Rational s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * memo[j];
    Rational b = -s / Rational(m + 1);
    b.canonicalize();
    memo.push_back(b);
  }
  return memo[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  Rational s = 0;
  Rational xp = 1;  // x^(n-j), built from j = n downwards
  for (long j = n; j >= 0; --j) {
    s += Rational(binomial(n, j)) * bernoulli_number(static_cast<unsigned>(j)) * xp;
    xp *= x;
  }
  return s;
}

}  // namespace kronlab
