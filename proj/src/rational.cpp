#include "kronlab/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace kronlab {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> memo{Integer(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= n) memo.push_back(memo.back() * static_cast<unsigned long>(memo.size()));
  return memo[n];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer ipow(long base, unsigned e) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0) {
    if (e < 0) throw std::domain_error("0 to a negative power");
    return Rational(0);
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), a);
  Rational out = e > 0 ? Rational(n, d) : Rational(d, n);
  out.canonicalize();
  return out;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace kronlab
