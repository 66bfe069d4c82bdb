#pragma once

#include "linkhom/length_vector.hpp"

#include <vector>

namespace linkhom {

// Critical sphere of the first-coordinate Morse-Bott function on the chain
// space of a sorted generic vector: J inside {1,...,n-2} with J+{n} short and
// J+{n-1,n} long; the index is (n-3-|J|)(d-1).
struct CriticalSphere {
    SubsetMask j;
    int index_multiple = 0;  // n - 3 - |J|
};

std::vector<CriticalSphere> critical_spheres(const LengthVector& sorted);

// (N_0,...,N_{n-3}): the number of critical spheres of index k(d-1) of the
// perfected Morse-Bott function, which equals the (2k)-th Betti number of the
// three-dimensional moduli space. All zero iff the moduli space is empty.
using BettiVector = std::vector<long long>;

BettiVector betti_counts(const LengthVector& lengths);

// Attachment schedule: the index multiples of all critical spheres, ascending
// (N_k copies of k).
std::vector<int> filtration(const LengthVector& lengths);

}  // namespace linkhom
