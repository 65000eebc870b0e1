#pragma once

#include "heisengram/rational.hpp"

#include <vector>

namespace heisengram {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact rank by Gaussian elimination.
int rational_rank(RationalMatrix m);

struct RationalSolveResult {
    bool solvable = false;
    std::vector<Rational> solution;       // a solution when solvable (free variables set to 0)
    int rank = 0;
    std::vector<Rational> kernel_vector;  // one nonzero kernel vector when the matrix is singular
};

/// Exact solve of the square system m·x = rhs with full diagnostics.
RationalSolveResult rational_solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

}  // namespace heisengram
