#include "linkhom/simplex.hpp"

#include <stdexcept>

namespace linkhom {

void LinearProgram::add_constraint(std::vector<Rational> row, Rational bound) {
    constraints.push_back(std::move(row));
    bounds.push_back(std::move(bound));
}

namespace {

// Tableau with an extra objective row kept canonical w.r.t. the basis.
// obj[j] = z_j - c_j, obj.back() = current objective value.
struct Tableau {
    int cols = 0;
    std::vector<std::vector<Rational>> rows;  // each of size cols + 1, rhs last
    std::vector<int> basis;                   // basic column per row
    std::vector<Rational> obj;

    void canonicalize(const std::vector<Rational>& c) {
        obj.assign(cols + 1, Rational(0));
        for (int j = 0; j < cols; ++j) obj[j] = -c[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= cols; ++j) obj[j] += cb * rows[i][j];
        }
    }

    void pivot(int row, int col) {
        Rational inv = 1 / rows[row][col];
        for (int j = 0; j <= cols; ++j) rows[row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == row || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (int j = 0; j <= cols; ++j) rows[i][j] -= f * rows[row][j];
        }
        if (obj[col] != 0) {
            Rational f = obj[col];
            for (int j = 0; j <= cols; ++j) obj[j] -= f * rows[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule; returns false on unboundedness.
    bool optimize() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols; ++j)
                if (obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    int m = static_cast<int>(lp.constraints.size());
    int n = m > 0 ? static_cast<int>(lp.constraints[0].size())
                  : static_cast<int>(lp.objective.size());
    for (const auto& row : lp.constraints)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged constraint matrix");
    if (static_cast<int>(lp.objective.size()) != n)
        throw std::invalid_argument("objective size mismatch");

    int artificials = 0;
    for (const Rational& b : lp.bounds)
        if (b < 0) ++artificials;

    Tableau t;
    t.cols = n + m + artificials;
    int next_artificial = n + m;
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> row(t.cols + 1, Rational(0));
        bool flip = lp.bounds[i] < 0;
        for (int j = 0; j < n; ++j) row[j] = flip ? Rational(-lp.constraints[i][j]) : lp.constraints[i][j];
        row[n + i] = flip ? -1 : 1;  // slack
        row[t.cols] = flip ? Rational(-lp.bounds[i]) : lp.bounds[i];
        if (flip) {
            row[next_artificial] = 1;
            t.basis.push_back(next_artificial);
            ++next_artificial;
        } else {
            t.basis.push_back(n + i);
        }
        t.rows.push_back(std::move(row));
    }

    LpSolution out;
    if (artificials > 0) {
        std::vector<Rational> phase1(t.cols, Rational(0));
        for (int j = n + m; j < t.cols; ++j) phase1[j] = -1;
        t.canonicalize(phase1);
        if (!t.optimize()) throw std::logic_error("phase one cannot be unbounded");
        if (t.obj[t.cols] != 0) {
            out.status = LpStatus::Infeasible;
            return out;
        }
        // drive leftover degenerate artificials out of the basis
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < n + m) {
                ++i;
                continue;
            }
            int col = -1;
            for (int j = 0; j < n + m; ++j)
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                t.pivot(static_cast<int>(i), col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        // artificial columns are nonbasic now; drop them for phase two
        for (auto& row : t.rows) row.erase(row.begin() + n + m, row.begin() + t.cols);
        t.cols = n + m;
    }

    std::vector<Rational> phase2(t.cols, Rational(0));
    for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
    t.canonicalize(phase2);
    if (!t.optimize()) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    out.status = LpStatus::Optimal;
    out.objective = t.obj[t.cols];
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) out.x[t.basis[i]] = t.rows[i][t.cols];
    return out;
}

}  // namespace linkhom
