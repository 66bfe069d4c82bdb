#include "linkhom/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace linkhom {

std::string HomologyGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const Int& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

void IntegerChainComplex::set_cells(int degree, int count, std::vector<std::string> labels) {
    if (count < 0) throw std::invalid_argument("negative cell count");
    if (!labels.empty() && static_cast<int>(labels.size()) != count)
        throw std::invalid_argument("label count mismatch");
    cells_[degree] = count;
    if (!labels.empty()) labels_[degree] = std::move(labels);
}

void IntegerChainComplex::set_boundary(int degree, IntMatrix matrix) {
    int rows = cells(degree - 1);
    int cols = cells(degree);
    if (static_cast<int>(matrix.size()) != rows)
        throw std::invalid_argument("boundary row count mismatch");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("boundary column count mismatch");
    boundaries_[degree] = std::move(matrix);
}

int IntegerChainComplex::cells(int degree) const {
    auto it = cells_.find(degree);
    return it == cells_.end() ? 0 : it->second;
}

const std::vector<std::string>& IntegerChainComplex::labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = labels_.find(degree);
    return it == labels_.end() ? kEmpty : it->second;
}

IntMatrix IntegerChainComplex::boundary(int degree) const {
    auto it = boundaries_.find(degree);
    if (it != boundaries_.end()) return it->second;
    return IntMatrix(cells(degree - 1), std::vector<Int>(cells(degree), Int(0)));
}

std::vector<int> IntegerChainComplex::degrees() const {
    std::vector<int> out;
    for (const auto& [degree, count] : cells_)
        if (count > 0) out.push_back(degree);
    return out;
}

bool IntegerChainComplex::boundary_condition_holds() const {
    for (int r : degrees()) {
        if (cells(r - 1) == 0 || cells(r + 1) == 0) continue;
        IntMatrix a = boundary(r);      // C_r -> C_{r-1}
        IntMatrix b = boundary(r + 1);  // C_{r+1} -> C_r
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                Int sum = 0;
                for (std::size_t k = 0; k < b.size(); ++k) sum += a[i][k] * b[k][j];
                if (sum != 0) return false;
            }
    }
    return true;
}

std::map<int, HomologyGroup> IntegerChainComplex::homology() const {
    if (!boundary_condition_holds())
        throw std::logic_error("boundary of boundary is nonzero");
    std::map<int, HomologyGroup> out;
    for (int r : degrees()) {
        SmithResult out_map = smith_normal_form(boundary(r));
        SmithResult in_map = smith_normal_form(boundary(r + 1));
        HomologyGroup g;
        g.free_rank = cells(r) - out_map.rank - in_map.rank;
        for (const Int& d : in_map.diagonal)
            if (d > 1) g.torsion.push_back(d);
        out[r] = std::move(g);
    }
    return out;
}

}  // namespace linkhom
