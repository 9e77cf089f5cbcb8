#pragma once

#include <vector>

#include "tropmoduli/base.hpp"

namespace tropmoduli {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

// Rank over the rationals (Gaussian elimination, exact).
int rank(RatMatrix m);

struct LpResult {
    bool bounded = true;
    Rat value;       // optimal objective when bounded
    RatVec solution; // an optimal vertex when bounded
};

// maximize c.x  subject to  A x <= b, x >= 0, with b >= 0
// (the origin is feasible, so no phase-1 is needed). Exact rational
// arithmetic; Bland's rule, so no cycling.
LpResult simplex_max(const RatMatrix& A, const RatVec& b, const RatVec& c);

// Dimension of the polyhedral cone {x : eq.x = 0 for eq in equalities,
// row.x <= 0 for row in inequalities}. Finds the implicit equalities by
// maximizing each inequality's slack and counts independent tight rows.
int cone_dimension(int num_vars, const RatMatrix& equalities, const RatMatrix& inequalities);

}  // namespace tropmoduli
