#pragma once

#include "linkhom/length_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linkhom {

// Canonical chamber invariant of a generic vector: the family of short
// subsets of the sorted vector that contain the top index n, with sizes
// 1..n-2. Two generic vectors lie in the same chamber up to permutation iff
// their descriptors agree.
struct ChamberDescriptor {
    int n = 0;
    std::vector<SubsetMask> shorts;  // each contains n; sorted with lex_less
    bool empty_flag = false;         // {n} is long, i.e. the moduli space is empty

    // "{1,4}|{4}"; "empty" for the empty-moduli chamber
    std::string id() const;

    friend bool operator==(const ChamberDescriptor& a, const ChamberDescriptor& b) {
        return a.n == b.n && a.shorts == b.shorts && a.empty_flag == b.empty_flag;
    }
};

// Descriptor of the sorted vector. Throws NonGenericError on non-generic
// input.
ChamberDescriptor descriptor(const LengthVector& lengths);

bool same_chamber(const LengthVector& a, const LengthVector& b);

// An ordered rational vector realizing the descriptor, or nullopt when the
// strict system is infeasible. Decided exactly by maximizing an interior
// slack; the witness is scaled to integers. Throws std::invalid_argument if
// the family is not closed under subsets that keep the top index.
std::optional<LengthVector> realizable(const ChamberDescriptor& desc);

struct Chamber {
    ChamberDescriptor desc;
    LengthVector representative;
};

// All chambers up to permutation, 4 <= n <= 8, deterministically ordered.
// Depth-first search over subset-closed candidate families with exact
// feasibility pruning.
std::vector<Chamber> enumerate_chambers(int n);

// Chambers whose representatives are d-regular.
std::vector<Chamber> regular_chambers(int n, int d);

}  // namespace linkhom
