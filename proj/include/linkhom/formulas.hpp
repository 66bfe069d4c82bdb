#pragma once

#include <vector>

namespace linkhom {

// Dimension of the moduli space of closed n-linkages in R^d, for n > d >= 3:
// (n-3)(d-1) - (d-2)(d-3)/2.
long long dim_moduli(int n, int d);

// Codimension of the rank-(d-k) stratum, 2 <= k <= d-2, n > d:
// k(n-d) + k(k-1)/2.
long long codim_stratum(int n, int d, int k);

// Perversity for the stratified moduli space, stored as the tuple
// (p_2,...,p_{d-2}); slot i corresponds to the stratum of rank d-i, whose
// codimension is codim_stratum(n, d, i).
struct Perversity {
    int n = 0;
    int d = 0;
    std::vector<long long> values;  // values[i-2] = p_i, i = 2..d-2

    long long at(int i) const { return values.at(i - 2); }
    int slots() const { return static_cast<int>(values.size()); }

    // Conditions for the codimension-restricted stratification: entries
    // non-decreasing, p_2 <= 2(n-d)-1, p_{i+1} - p_i <= n-d+i.
    bool satisfies_growth_conditions() const;

    friend bool operator==(const Perversity& a, const Perversity& b) {
        return a.d == b.d && a.values == b.values;
    }
};

struct PerversityResult {
    Perversity perversity;
    bool valid = false;  // whether the scale is within the admissible range
};

// Scaled perversity (2k, 3k, ..., (d-2)k); valid iff 0 <= k <= n-d-1.
PerversityResult perversity_pk(int n, int d, int k);

// Top perversity: p_i = codim_stratum(n, d, i) - 2.
Perversity top_perversity(int n, int d);

}  // namespace linkhom
