#include "linkhom/formulas.hpp"

#include <stdexcept>

namespace linkhom {

long long dim_moduli(int n, int d) {
    if (d < 3 || n <= d) throw std::invalid_argument("dim_moduli needs n > d >= 3");
    long long nn = n, dd = d;
    return (nn - 3) * (dd - 1) - (dd - 2) * (dd - 3) / 2;
}

long long codim_stratum(int n, int d, int k) {
    if (n <= d) throw std::invalid_argument("codim_stratum needs n > d");
    if (k < 2 || k > d - 2) throw std::invalid_argument("stratum index out of range");
    long long nn = n, dd = d, kk = k;
    return kk * (nn - dd) + kk * (kk - 1) / 2;
}

bool Perversity::satisfies_growth_conditions() const {
    if (values.empty()) return true;
    if (values.front() > 2LL * (n - d) - 1) return false;
    for (int i = 2; i + 1 <= d - 2; ++i) {
        long long step = at(i + 1) - at(i);
        if (step < 0 || step > n - d + i) return false;
    }
    return true;
}

PerversityResult perversity_pk(int n, int d, int k) {
    if (d < 4) throw std::invalid_argument("perversity needs d >= 4");
    Perversity p;
    p.n = n;
    p.d = d;
    for (int i = 2; i <= d - 2; ++i) p.values.push_back(static_cast<long long>(i) * k);
    return PerversityResult{p, k >= 0 && k <= n - d - 1};
}

Perversity top_perversity(int n, int d) {
    if (d < 4 || n <= d) throw std::invalid_argument("top perversity needs n > d >= 4");
    Perversity p;
    p.n = n;
    p.d = d;
    for (int i = 2; i <= d - 2; ++i) p.values.push_back(codim_stratum(n, d, i) - 2);
    return p;
}

}  // namespace linkhom
