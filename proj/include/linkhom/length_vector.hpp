#pragma once

#include "linkhom/eps_rational.hpp"
#include "linkhom/subset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkhom {

// Positive exact bar lengths (l_1,...,l_n), n >= 3. Entries may carry
// infinitesimal parts so that degenerate representatives such as
// (eps,...,eps,1) stay strictly positive.
class LengthVector {
public:
    explicit LengthVector(std::vector<EpsRational> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    // 1-based access, matching subset element numbering
    const EpsRational& entry(int i) const { return entries_.at(i - 1); }
    const std::vector<EpsRational>& entries() const { return entries_; }

    bool is_sorted() const;
    // stable ascending sort
    LengthVector sorted() const;

    EpsRational total() const;
    EpsRational subset_sum(SubsetMask subset) const;

    // comma separated entries, e.g. "1,1,3/2,2" or "0+e,1"
    static LengthVector parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const LengthVector& a, const LengthVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<EpsRational> entries_;
};

enum class SubsetClass { Short, Long, Median };

std::string to_string(SubsetClass c);

// Raised where an operation requires a generic vector; carries an offending
// median subset.
class NonGenericError : public std::runtime_error {
public:
    NonGenericError(const LengthVector& lengths, SubsetMask median);
    SubsetMask median_subset() const { return median_; }

private:
    SubsetMask median_;
};

// Short iff sum over the subset is less than the sum over its complement.
SubsetClass classify_subset(const LengthVector& lengths, SubsetMask subset);

// Some median subset, if one exists.
std::optional<SubsetMask> find_median_subset(const LengthVector& lengths);
bool is_generic(const LengthVector& lengths);
void require_generic(const LengthVector& lengths);

// Largest index attaining the maximal entry.
int dominating_index(const LengthVector& lengths);

// All (k+1)-element short subsets containing the dominating index,
// 0 <= k <= n-3. Throws NonGenericError on non-generic input.
std::vector<SubsetMask> short_sets(const LengthVector& lengths, int k);

// (a_0,...,a_{n-3}) with a_k = |short_sets(lengths, k)|.
std::vector<long long> a_vector(const LengthVector& lengths);

// True iff all long subsets with d-1 elements share a common index
// (vacuously true when there are none).
bool is_d_regular(const LengthVector& lengths, int d);
// Equivalent rule for sorted vectors: {n-d+1,...,n-1} is not long.
bool is_d_regular_sorted_rule(const LengthVector& sorted, int d);

// True iff the singleton of the dominating index is long.
bool is_empty_moduli(const LengthVector& lengths);

// Merge the entries of `subset` (subset of {1,...,n-1}) into the last one:
// complement entries in order, then l_n + sum over the subset.
LengthVector merge(const LengthVector& lengths, SubsetMask subset);

// (l_1,...,l_{n-2}, l_n - l_{n-1}) and (l_1,...,l_{n-2}, l_n + l_{n-1}) for
// sorted input with n >= 4. A vanishing last entry of the minus variant is
// replaced by the next unused infinitesimal order, which preserves every
// strict subset-sum comparison.
LengthVector split_minus(const LengthVector& sorted);
LengthVector split_plus(const LengthVector& sorted);

}  // namespace linkhom
