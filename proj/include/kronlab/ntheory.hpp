#pragma once

#include <vector>

namespace kronlab {

std::vector<long> prime_factors(long n);  // distinct, increasing
std::vector<long> divisors(long n);       // increasing
bool is_squarefree(long n);
bool is_prime(long n);
long mod_pos(long a, long m);

}  // namespace kronlab
