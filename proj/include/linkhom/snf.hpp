#pragma once

#include "linkhom/eps_rational.hpp"

#include <vector>

namespace linkhom {

// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
    // Non-negative invariant factors d_1 | d_2 | ... (zeros omitted).
    std::vector<Int> diagonal;
    int rank = 0;
};

// Smith normal form over the integers: unimodular row/column reduction with
// pivoting on a minimal-absolute-value entry, exact big-integer arithmetic.
SmithResult smith_normal_form(IntMatrix a);

}  // namespace linkhom
