#pragma once

#include "linkhom/snf.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkhom {

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;  // orders > 1, divisibility order

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string str() const;  // "Z", "Z/2", "Z + Z/2", "0", ...

    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// Graded free chain complex over the integers with explicit boundary
// matrices. Degrees may be sparse; absent degrees have no cells.
class IntegerChainComplex {
public:
    void set_cells(int degree, int count, std::vector<std::string> labels = {});
    // boundary from degree r to degree r-1; rows = cells in r-1, cols = cells in r
    void set_boundary(int degree, IntMatrix matrix);

    int cells(int degree) const;
    const std::vector<std::string>& labels(int degree) const;
    IntMatrix boundary(int degree) const;  // zero-filled when unset
    std::vector<int> degrees() const;      // ascending, with cells > 0

    bool boundary_condition_holds() const;

    // H_r = ker d_r / im d_{r+1} via Smith normal form. Throws
    // std::logic_error if d.d != 0.
    std::map<int, HomologyGroup> homology() const;

private:
    std::map<int, int> cells_;
    std::map<int, std::vector<std::string>> labels_;
    std::map<int, IntMatrix> boundaries_;
};

}  // namespace linkhom
