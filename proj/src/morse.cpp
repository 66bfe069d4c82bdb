#include "linkhom/morse.hpp"

#include "linkhom/chambers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace linkhom {

std::vector<CriticalSphere> critical_spheres(const LengthVector& sorted) {
    if (!sorted.is_sorted()) throw std::invalid_argument("critical spheres need a sorted vector");
    require_generic(sorted);
    int n = sorted.size();
    std::vector<CriticalSphere> out;
    if (n < 4) return out;
    SubsetMask top = SubsetMask{}.with(n);
    SubsetMask top_two = SubsetMask{}.with(n - 1).with(n);
    std::uint32_t rest = SubsetMask::full(n - 2).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask j(sub);
        if (classify_subset(sorted, j | top) == SubsetClass::Short &&
            classify_subset(sorted, j | top_two) == SubsetClass::Long)
            out.push_back(CriticalSphere{j, n - 3 - j.count()});
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end(), [](const CriticalSphere& a, const CriticalSphere& b) {
        if (a.index_multiple != b.index_multiple) return a.index_multiple < b.index_multiple;
        return lex_less(a.j, b.j);
    });
    return out;
}

namespace {

// The count recursion works on chambers, so memoize on the canonical
// descriptor of the sorted vector.
class BettiCache {
public:
    BettiVector get(const LengthVector& lengths) {
        LengthVector sorted = lengths.sorted();
        ChamberDescriptor desc = descriptor(sorted);
        std::string key = std::to_string(desc.n) + ":" + desc.id();
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        BettiVector counts = compute(sorted, desc);
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(std::move(key), counts);
        return counts;
    }

private:
    std::mutex mutex_;
    std::map<std::string, BettiVector> cache_;

    // Each critical sphere attaches a single cell of dimension k(d-1) in the
    // quotient; the minimum submanifold contributes its own cells unshifted
    // and the maximum submanifold contributes with one extra index multiple.
    // All cells land in even positions, so the counts are the even Betti
    // numbers of the three-dimensional moduli space.
    BettiVector compute(const LengthVector& sorted, const ChamberDescriptor& desc) {
        int n = sorted.size();
        BettiVector counts(n - 2, 0);
        if (desc.empty_flag) return counts;
        if (n == 3) {
            counts[0] = 1;  // a nonempty generic triangle is a single point
            return counts;
        }
        BettiVector lower = get(split_minus(sorted));  // same index multiples
        BettiVector upper = get(split_plus(sorted));   // shifted up by one
        for (int k = 0; k <= n - 4; ++k) counts[k] += lower[k];
        for (int k = 1; k <= n - 3; ++k) counts[k] += upper[k - 1];
        for (const CriticalSphere& sphere : critical_spheres(sorted))
            counts[sphere.index_multiple] += 1;
        return counts;
    }
};

BettiCache& cache() {
    static BettiCache instance;
    return instance;
}

}  // namespace

BettiVector betti_counts(const LengthVector& lengths) { return cache().get(lengths); }

std::vector<int> filtration(const LengthVector& lengths) {
    BettiVector counts = betti_counts(lengths);
    std::vector<int> out;
    for (std::size_t k = 0; k < counts.size(); ++k)
        for (long long c = 0; c < counts[k]; ++c) out.push_back(static_cast<int>(k));
    return out;
}

}  // namespace linkhom
