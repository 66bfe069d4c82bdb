#pragma once

#include "linkhom/eps_rational.hpp"

#include <vector>

namespace linkhom {

// Dense exact-rational linear program: maximize c^T x subject to A x <= b,
// x >= 0. Two-phase primal simplex with Bland's rule, so the pivot sequence
// and the reported optimum vertex are deterministic.
struct LinearProgram {
    std::vector<std::vector<Rational>> constraints;  // rows of A
    std::vector<Rational> bounds;                    // b
    std::vector<Rational> objective;                 // c

    void add_constraint(std::vector<Rational> row, Rational bound);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

LpSolution solve(const LinearProgram& lp);

}  // namespace linkhom
