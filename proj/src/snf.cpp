#include "linkhom/snf.hpp"

namespace linkhom {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

SmithResult smith_normal_form(IntMatrix a) {
    int m = static_cast<int>(a.size());
    int n = m > 0 ? static_cast<int>(a[0].size()) : 0;
    SmithResult out;
    int t = 0;
    while (t < m && t < n) {
        // minimal-absolute-value nonzero pivot in the working submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        if (pj != t)
            for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

        const Int p = a[t][t];
        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / p;
            if (q != 0)
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;  // remainder is smaller than p
        }
        if (!clean) continue;
        for (int j = t + 1; j < n; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / p;
            if (q != 0)
                for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // enforce the divisibility chain: fold a non-divisible row into row t
        bool divides = true;
        for (int i = t + 1; i < m && divides; ++i)
            for (int j = t + 1; j < n && divides; ++j)
                if (a[i][j] % p != 0) {
                    for (int jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    for (int i = 0; i < t; ++i) out.diagonal.push_back(abs_int(a[i][i]));
    out.rank = t;
    return out;
}

}  // namespace linkhom
