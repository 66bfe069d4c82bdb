#pragma once

#include "linkhom/chain_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkhom {

// Cell of the local Morse datum for a critical sphere, encoded by the
// row-count tuple (k_1,...,k_{d-2}) of its symbolic (d-2) x k matrix:
// 0 <= k_1 <= k, 0 <= k_i <= max(0, k_{i-1}-1) for i = 2..d-3, and
// k_{d-2} = max(0, k_{d-3}-1). The cell dimension is k + k_1 + ... + k_{d-2}.
struct SymbolicCell {
    int d = 0;
    int k = 0;
    std::vector<int> rows;  // (k_1,...,k_{d-2})

    long long dimension() const;
    std::string str() const;  // "(3,2)"

    friend bool operator==(const SymbolicCell& a, const SymbolicCell& b) {
        return a.d == b.d && a.k == b.k && a.rows == b.rows;
    }
};

// Every valid row-count tuple, each exactly once, deterministic order.
std::vector<SymbolicCell> enumerate_cells(int d, int k);

// Allowability for the scaled perversity p_s, 0 <= s <= k+2-d, by the
// row-count rule: k-i+1-s <= k_i <= k-i+1 for all i = 1..d-3.
bool is_allowable(const SymbolicCell& cell, int s);

// Same predicate through the codimension inequality
// codim_stratum(k+3, d, d-c) - p_s(d-c) <= k_{c-1} + ... + k_{d-2} for all
// c = 2..d-2. Kept as an independent route for cross-checking.
bool is_allowable_codim(const SymbolicCell& cell, int s);

// The scale-one allowable subcomplex for k >= d-1: one cell s_i for
// i in {1,...,d-3, d-1} in dimension top - (d-1-i), with boundary
// d(s_i) = (1+(-1)^(d-1-i)) s_{i-1} (s_0 = 0, top cell closed).
IntegerChainComplex p1_subcomplex(int d, int k);

struct MorseDataTable {
    int d = 0;
    int k = 0;
    int s = 0;
    long long top_dim = 0;
    // offset r from the top dimension -> group in degree top_dim - r;
    // only nontrivial groups are listed
    std::map<int, HomologyGroup> groups;
    std::vector<std::string> warnings;
};

// Relative intersection homology of the Morse datum for scale s in {0,1}.
// s = 0 needs k >= d-2 and has a single closed top cell; s = 1 needs
// k >= d-1 and is computed from the scale-one subcomplex. For even d the
// computed table carries a warning: the group in offset d-2 is Z, which is
// what the rank bookkeeping downstream consumes.
MorseDataTable morse_data_table(int d, int k, int s);

}  // namespace linkhom
