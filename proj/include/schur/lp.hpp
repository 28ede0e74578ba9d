#pragma once

#include <vector>

#include "schur/numeric.hpp"

namespace schur {

// Exact-rational linear program
//   maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0,
// solved by two-phase dense simplex with Bland's anti-cycling rule. Meant
// for small problems; every pivot is exact.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;                 // size num_vars
    std::vector<std::vector<Rational>> a_ub;
    std::vector<Rational> b_ub;
    std::vector<std::vector<Rational>> a_eq;
    std::vector<Rational> b_eq;
};

struct LpSolution {
    Rational value;
    std::vector<Rational> x;
};

// Throws std::domain_error on infeasible input, std::logic_error if the
// objective is unbounded.
LpSolution solve_max(const LinearProgram& lp);

}  // namespace schur
