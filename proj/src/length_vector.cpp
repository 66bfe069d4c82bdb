#include "linkhom/length_vector.hpp"

#include <algorithm>
#include <sstream>

namespace linkhom {

LengthVector::LengthVector(std::vector<EpsRational> entries) : entries_(std::move(entries)) {
    // merged vectors may drop to two entries; everything else wants n >= 3
    int n = static_cast<int>(entries_.size());
    if (n < 2) throw std::invalid_argument("length vector needs at least 2 entries");
    if (n > SubsetMask::kMaxElements)
        throw std::invalid_argument("length vector limited to " +
                                    std::to_string(SubsetMask::kMaxElements) + " entries");
    for (const EpsRational& e : entries_)
        if (!e.is_positive())
            throw std::invalid_argument("length vector entries must be positive, got " + e.str());
}

bool LengthVector::is_sorted() const {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i + 1] < entries_[i]) return false;
    return true;
}

LengthVector LengthVector::sorted() const {
    std::vector<EpsRational> copy(entries_);
    std::stable_sort(copy.begin(), copy.end());
    return LengthVector(std::move(copy));
}

EpsRational LengthVector::total() const {
    EpsRational sum;
    for (const EpsRational& e : entries_) sum += e;
    return sum;
}

EpsRational LengthVector::subset_sum(SubsetMask subset) const {
    EpsRational sum;
    for (int i = 1; i <= size(); ++i)
        if (subset.contains(i)) sum += entries_[i - 1];
    return sum;
}

LengthVector LengthVector::parse(const std::string& text) {
    std::vector<EpsRational> entries;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) entries.push_back(EpsRational::parse(item));
    return LengthVector(std::move(entries));
}

std::string LengthVector::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ",";
        out << entries_[i].str();
    }
    return out.str();
}

std::string to_string(SubsetClass c) {
    switch (c) {
        case SubsetClass::Short: return "short";
        case SubsetClass::Long: return "long";
        default: return "median";
    }
}

NonGenericError::NonGenericError(const LengthVector& lengths, SubsetMask median)
    : std::runtime_error("length vector (" + lengths.str() + ") is not generic: median subset " +
                         median.str()),
      median_(median) {}

SubsetClass classify_subset(const LengthVector& lengths, SubsetMask subset) {
    if (!subset.is_subset_of(SubsetMask::full(lengths.size())))
        throw std::invalid_argument("subset " + subset.str() + " exceeds index range");
    // compare 2*sum(J) against the total, so the complement sum is implicit
    EpsRational twice = lengths.subset_sum(subset).times(Rational(2));
    EpsRational total = lengths.total();
    if (twice < total) return SubsetClass::Short;
    if (total < twice) return SubsetClass::Long;
    return SubsetClass::Median;
}

std::optional<SubsetMask> find_median_subset(const LengthVector& lengths) {
    // a median subset and its complement are both median, so scanning the
    // subsets that contain index 1 is enough; report the smaller side
    int n = lengths.size();
    EpsRational total = lengths.total();
    std::uint32_t rest = SubsetMask::full(n).without(1).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask mask = SubsetMask(sub).with(1);
        if (lengths.subset_sum(mask).times(Rational(2)) == total) {
            SubsetMask other = mask.complement(n);
            if (other.count() < mask.count() || (other.count() == mask.count() && lex_less(other, mask)))
                return other;
            return mask;
        }
        if (sub == 0) break;
    }
    return std::nullopt;
}

bool is_generic(const LengthVector& lengths) { return !find_median_subset(lengths).has_value(); }

void require_generic(const LengthVector& lengths) {
    if (auto median = find_median_subset(lengths)) throw NonGenericError(lengths, *median);
}

int dominating_index(const LengthVector& lengths) {
    int best = 1;
    for (int i = 2; i <= lengths.size(); ++i)
        if (!(lengths.entry(i) < lengths.entry(best))) best = i;
    return best;
}

std::vector<SubsetMask> short_sets(const LengthVector& lengths, int k) {
    int n = lengths.size();
    if (k < 0 || k > n - 3) throw std::invalid_argument("short set size out of range");
    require_generic(lengths);
    int m = dominating_index(lengths);
    std::vector<SubsetMask> out;
    std::uint32_t rest = SubsetMask::full(n).without(m).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask mask = SubsetMask(sub).with(m);
        if (mask.count() == k + 1 && classify_subset(lengths, mask) == SubsetClass::Short)
            out.push_back(mask);
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<long long> a_vector(const LengthVector& lengths) {
    std::vector<long long> out;
    for (int k = 0; k <= lengths.size() - 3; ++k)
        out.push_back(static_cast<long long>(short_sets(lengths, k).size()));
    return out;
}

bool is_d_regular(const LengthVector& lengths, int d) {
    if (d < 2) throw std::invalid_argument("regularity needs d >= 2");
    int n = lengths.size();
    if (d - 1 > n) return true;
    // intersect all long subsets with d-1 elements
    SubsetMask common = SubsetMask::full(n);
    bool any = false;
    std::uint32_t all = SubsetMask::full(n).bits();
    for (std::uint32_t sub = all; sub > 0; sub = (sub - 1) & all) {
        SubsetMask mask(sub);
        if (mask.count() == d - 1 && classify_subset(lengths, mask) == SubsetClass::Long) {
            common = common & mask;
            any = true;
            if (common.empty()) return false;
        }
    }
    return !any || !common.empty();
}

bool is_d_regular_sorted_rule(const LengthVector& sorted, int d) {
    if (d < 2) throw std::invalid_argument("regularity needs d >= 2");
    if (!sorted.is_sorted()) throw std::invalid_argument("sorted rule needs a sorted vector");
    int n = sorted.size();
    if (d > n) return true;
    SubsetMask window;
    for (int i = n - d + 1; i <= n - 1; ++i) window = window.with(i);
    return classify_subset(sorted, window) != SubsetClass::Long;
}

bool is_empty_moduli(const LengthVector& lengths) {
    SubsetMask top = SubsetMask{}.with(dominating_index(lengths));
    return classify_subset(lengths, top) == SubsetClass::Long;
}

LengthVector merge(const LengthVector& lengths, SubsetMask subset) {
    int n = lengths.size();
    if (subset.contains(n))
        throw std::invalid_argument("merge subset must avoid the last index");
    if (!subset.is_subset_of(SubsetMask::full(n - 1)))
        throw std::invalid_argument("merge subset exceeds index range");
    std::vector<EpsRational> out;
    for (int i = 1; i <= n - 1; ++i)
        if (!subset.contains(i)) out.push_back(lengths.entry(i));
    out.push_back(lengths.entry(n) + lengths.subset_sum(subset));
    return LengthVector(std::move(out));
}

namespace {

LengthVector split(const LengthVector& sorted, bool plus) {
    if (!sorted.is_sorted()) throw std::invalid_argument("split needs a sorted vector");
    int n = sorted.size();
    if (n < 4) throw std::invalid_argument("split needs at least 4 entries");
    std::vector<EpsRational> out;
    for (int i = 1; i <= n - 2; ++i) out.push_back(sorted.entry(i));
    EpsRational last = plus ? sorted.entry(n) + sorted.entry(n - 1)
                            : sorted.entry(n) - sorted.entry(n - 1);
    if (last.is_zero()) {
        // next unused infinitesimal order: ties decided at lower orders stay
        // strict, and the new entry is positive
        int top = 0;
        for (const EpsRational& e : sorted.entries()) top = std::max(top, e.degree());
        last = EpsRational::eps(top + 1);
    }
    out.push_back(last);
    return LengthVector(std::move(out));
}

}  // namespace

LengthVector split_minus(const LengthVector& sorted) { return split(sorted, false); }

LengthVector split_plus(const LengthVector& sorted) { return split(sorted, true); }

}  // namespace linkhom
