#include "linkhom/morse_data.hpp"

#include "linkhom/formulas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linkhom {

long long SymbolicCell::dimension() const {
    long long dim = k;
    for (int r : rows) dim += r;
    return dim;
}

std::string SymbolicCell::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ",";
        out << rows[i];
    }
    out << ")";
    return out.str();
}

std::vector<SymbolicCell> enumerate_cells(int d, int k) {
    if (d < 4 || k < 1) throw std::invalid_argument("cells need d >= 4 and k >= 1");
    std::vector<SymbolicCell> out;
    std::vector<int> rows(d - 2, 0);
    // rows 1..d-3 are free below the running bound, the last row is forced
    auto recurse = [&](auto&& self, int i) -> void {
        if (i == d - 3) {
            rows[d - 3] = std::max(0, rows[d - 4] - 1);
            out.push_back(SymbolicCell{d, k, rows});
            return;
        }
        int bound = i == 0 ? k : std::max(0, rows[i - 1] - 1);
        for (int v = 0; v <= bound; ++v) {
            rows[i] = v;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), [](const SymbolicCell& a, const SymbolicCell& b) {
        return a.rows < b.rows;
    });
    return out;
}

namespace {

void check_scale(const SymbolicCell& cell, int s) {
    if (s < 0 || s > cell.k + 2 - cell.d)
        throw std::invalid_argument("perversity scale out of range for this datum");
}

}  // namespace

bool is_allowable(const SymbolicCell& cell, int s) {
    check_scale(cell, s);
    for (int i = 1; i <= cell.d - 3; ++i)
        if (cell.rows[i - 1] < cell.k - i + 1 - s) return false;
    return true;
}

bool is_allowable_codim(const SymbolicCell& cell, int s) {
    check_scale(cell, s);
    int d = cell.d, k = cell.k;
    Perversity p = perversity_pk(k + 3, d, s).perversity;
    for (int c = 2; c <= d - 2; ++c) {
        long long tail = 0;
        for (int i = c - 1; i <= d - 2; ++i) tail += cell.rows[i - 1];
        if (codim_stratum(k + 3, d, d - c) - p.at(d - c) > tail) return false;
    }
    return true;
}

namespace {

// The scale-one allowable cells have a unique first lowered row i0: rows
// k-i+1 before it and k-i from it on; the top cell corresponds to i0 = d-1.
int first_lowered_row(const SymbolicCell& cell) {
    int d = cell.d, k = cell.k;
    int i0 = d - 1;
    for (int i = 1; i <= d - 3; ++i)
        if (cell.rows[i - 1] == k - i) {
            i0 = i;
            break;
        }
    for (int i = 1; i <= d - 3; ++i) {
        int expect = i < i0 ? k - i + 1 : k - i;
        if (cell.rows[i - 1] != expect)
            throw std::logic_error("scale-one cell without a unique lowered row: " + cell.str());
    }
    return i0;
}

}  // namespace

IntegerChainComplex p1_subcomplex(int d, int k) {
    if (d < 4) throw std::invalid_argument("datum needs d >= 4");
    if (k < d - 1) throw std::invalid_argument("scale-one subcomplex needs k >= d-1");
    std::vector<SymbolicCell> cells;
    for (const SymbolicCell& cell : enumerate_cells(d, k))
        if (is_allowable(cell, 1)) cells.push_back(cell);

    IntegerChainComplex cx;
    long long top = dim_moduli(k + 3, d);
    for (const SymbolicCell& cell : cells) {
        int i0 = first_lowered_row(cell);
        long long degree = top - (d - 1 - i0);
        if (cell.dimension() != degree)
            throw std::logic_error("cell dimension disagrees with its lowered row");
        cx.set_cells(static_cast<int>(degree), 1, {cell.str()});
    }
    for (const SymbolicCell& cell : cells) {
        int i0 = first_lowered_row(cell);
        if (i0 < 2 || i0 > d - 3) continue;  // top cell and the lowest cell are closed
        long long degree = top - (d - 1 - i0);
        Int coeff = 1 + ((d - 1 - i0) % 2 == 0 ? 1 : -1);
        cx.set_boundary(static_cast<int>(degree), IntMatrix{{coeff}});
    }
    return cx;
}

MorseDataTable morse_data_table(int d, int k, int s) {
    if (s != 0 && s != 1) throw std::invalid_argument("table supports scales 0 and 1");
    if (d < 4) throw std::invalid_argument("table needs d >= 4");
    MorseDataTable table;
    table.d = d;
    table.k = k;
    table.s = s;

    if (s == 0) {
        if (k < d - 2) throw std::invalid_argument("scale zero needs k >= d-2");
        table.top_dim = dim_moduli(k + 3, d);
        std::vector<SymbolicCell> allowed;
        for (const SymbolicCell& cell : enumerate_cells(d, k))
            if (is_allowable(cell, 0)) allowed.push_back(cell);
        if (allowed.size() != 1 || allowed[0].dimension() != table.top_dim)
            throw std::logic_error("scale zero should leave exactly the top cell");
        HomologyGroup z;
        z.free_rank = 1;
        table.groups[0] = std::move(z);
        return table;
    }

    IntegerChainComplex cx = p1_subcomplex(d, k);
    table.top_dim = dim_moduli(k + 3, d);
    for (const auto& [degree, group] : cx.homology())
        if (!group.trivial()) table.groups[static_cast<int>(table.top_dim - degree)] = group;
    if (d % 2 == 0)
        table.warnings.push_back(
            "even-dimensional datum: the group in offset d-2 is the free group computed from "
            "the cell complex, which is what the rank bookkeeping in the next degree consumes");
    return table;
}

}  // namespace linkhom
