#pragma once

#include <optional>
#include <vector>

#include "kronlab/cyclotomic.hpp"

namespace kronlab {

using CMatrix = std::vector<std::vector<Cyclotomic>>;

// Rank by fraction-free (Bareiss) elimination.
int matrix_rank(CMatrix m);

// Solves A x = b exactly. Overdetermined systems must be consistent;
// returns nullopt when inconsistent or when the solution is not unique.
std::optional<std::vector<Cyclotomic>> solve_exact(const CMatrix& a, const std::vector<Cyclotomic>& b);

}  // namespace kronlab
