#include "linkhom/chambers.hpp"

#include "linkhom/simplex.hpp"

#include <algorithm>
#include <bitset>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace linkhom {

std::string ChamberDescriptor::id() const {
    if (shorts.empty()) return "empty";
    std::ostringstream out;
    for (std::size_t i = 0; i < shorts.size(); ++i) {
        if (i) out << "|";
        out << shorts[i].str();
    }
    return out.str();
}

ChamberDescriptor descriptor(const LengthVector& lengths) {
    if (lengths.size() < 3) throw std::invalid_argument("chamber structure needs n >= 3");
    LengthVector s = lengths.sorted();
    require_generic(s);
    int n = s.size();
    ChamberDescriptor d;
    d.n = n;
    d.empty_flag = classify_subset(s, SubsetMask{}.with(n)) == SubsetClass::Long;
    if (!d.empty_flag) {
        std::uint32_t rest = SubsetMask::full(n - 1).bits();
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            SubsetMask t(sub);
            if (t.count() <= n - 3) {
                SubsetMask j = t.with(n);
                if (classify_subset(s, j) == SubsetClass::Short) d.shorts.push_back(j);
            }
            if (sub == 0) break;
        }
        std::sort(d.shorts.begin(), d.shorts.end(), lex_less);
    }
    return d;
}

bool same_chamber(const LengthVector& a, const LengthVector& b) {
    return descriptor(a) == descriptor(b);
}

namespace {

// j' <= j in the dominance order for ordered vectors: j' arises from j by
// deleting elements or lowering element indices (the top index stays). A
// short set dominates every set below it; a long set is dominated by every
// set above it.
bool dominates(SubsetMask high, SubsetMask low, int n) {
    // greedy matching of low's elements to distinct >= elements of high
    std::vector<int> h = high.without(n).elements();
    std::vector<int> l = low.without(n).elements();
    if (l.size() > h.size()) return false;
    // both ascending; match the r-th largest of low with the r-th largest of high
    for (std::size_t r = 0; r < l.size(); ++r)
        if (h[h.size() - 1 - r] < l[l.size() - 1 - r]) return false;
    return true;
}

struct FeasibilityProblem {
    int n;
    std::vector<SubsetMask> shorts;  // maximal decided shorts, masks containing n
    std::vector<SubsetMask> longs;   // minimal decided longs
};

// Maximize the interior slack over the ordered simplex. A strictly positive
// optimum certifies a chamber point; the witness is the x part.
std::optional<std::vector<Rational>> feasible_point(const FeasibilityProblem& fp) {
    int n = fp.n;
    int vars = n + 1;  // x_1..x_n, delta
    LinearProgram lp;
    auto zero_row = [&] { return std::vector<Rational>(vars, Rational(0)); };

    {
        auto row = zero_row();  // delta - x_1 <= 0
        row[0] = -1;
        row[n] = 1;
        lp.add_constraint(row, Rational(0));
    }
    for (int i = 0; i + 1 < n; ++i) {  // x_i <= x_{i+1}
        auto row = zero_row();
        row[i] = 1;
        row[i + 1] = -1;
        lp.add_constraint(row, Rational(0));
    }
    {
        auto row = zero_row();  // sum = 1
        for (int i = 0; i < n; ++i) row[i] = 1;
        lp.add_constraint(row, Rational(1));
        for (int i = 0; i < n; ++i) row[i] = -1;
        row[n] = 0;
        lp.add_constraint(row, Rational(-1));
    }
    auto add_class = [&](SubsetMask j, bool is_short) {
        auto row = zero_row();
        for (int i = 1; i <= n; ++i) row[i - 1] = j.contains(i) == is_short ? 1 : -1;
        row[n] = 1;
        lp.add_constraint(row, Rational(0));
    };
    for (SubsetMask j : fp.shorts) add_class(j, true);
    for (SubsetMask j : fp.longs) add_class(j, false);

    lp.objective.assign(vars, Rational(0));
    lp.objective[n] = 1;

    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal || !(sol.objective > 0)) return std::nullopt;
    return std::vector<Rational>(sol.x.begin(), sol.x.begin() + n);
}

LengthVector integer_representative(const std::vector<Rational>& x) {
    Int lcm = 1;
    for (const Rational& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<Int> ints;
    for (const Rational& v : x) ints.push_back(numerator(v) * (lcm / denominator(v)));
    Int g = 0;
    for (const Int& v : ints) g = boost::multiprecision::gcd(g, v);
    std::vector<EpsRational> entries;
    for (const Int& v : ints) entries.emplace_back(Rational(v / g));
    return LengthVector(std::move(entries));
}

}  // namespace

std::optional<LengthVector> realizable(const ChamberDescriptor& desc) {
    int n = desc.n;
    if (n < 3 || n > SubsetMask::kMaxElements) throw std::invalid_argument("descriptor size out of range");
    if (desc.empty_flag != desc.shorts.empty())
        throw std::invalid_argument("empty flag contradicts the short family");
    std::vector<SubsetMask> family(desc.shorts);
    std::sort(family.begin(), family.end());
    auto in_family = [&](SubsetMask j) {
        return std::binary_search(family.begin(), family.end(), j);
    };
    for (SubsetMask j : family) {
        if (!j.contains(n) || j.count() < 1 || j.count() > n - 2 ||
            !j.is_subset_of(SubsetMask::full(n)))
            throw std::invalid_argument("descriptor face " + j.str() + " out of range");
        for (int i : j.elements())
            if (i != n && !in_family(j.without(i)))
                throw std::invalid_argument("descriptor not closed under subsets: missing " +
                                            j.without(i).str());
    }

    // classify every candidate, then keep maximal shorts and minimal longs
    FeasibilityProblem fp;
    fp.n = n;
    std::vector<SubsetMask> shorts, longs;
    std::uint32_t rest = SubsetMask::full(n - 1).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask t(sub);
        if (t.count() <= n - 3) {
            SubsetMask j = t.with(n);
            (in_family(j) ? shorts : longs).push_back(j);
        }
        if (sub == 0) break;
    }
    for (SubsetMask j : shorts) {
        bool maximal = std::none_of(shorts.begin(), shorts.end(), [&](SubsetMask o) {
            return o != j && dominates(o, j, n);
        });
        if (maximal) fp.shorts.push_back(j);
    }
    for (SubsetMask j : longs) {
        bool minimal = std::none_of(longs.begin(), longs.end(), [&](SubsetMask o) {
            return o != j && dominates(j, o, n);
        });
        if (minimal) fp.longs.push_back(j);
    }

    auto witness = feasible_point(fp);
    if (!witness) return std::nullopt;
    return integer_representative(*witness);
}

namespace {

constexpr int kMaxCandidates = 128;
using CandidateSet = std::bitset<kMaxCandidates>;

struct CandidateTable {
    int n;
    std::vector<SubsetMask> sets;           // J = T + {n}, topological order
    std::vector<CandidateSet> predecessors;  // strict dominance predecessors
};

CandidateTable build_candidates(int n) {
    CandidateTable table;
    table.n = n;
    std::uint32_t rest = SubsetMask::full(n - 1).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask t(sub);
        if (t.count() <= n - 3) table.sets.push_back(t.with(n));
        if (sub == 0) break;
    }
    auto key = [&](SubsetMask j) {
        int sum = 0;
        for (int i : j.elements()) sum += i;
        return std::tuple<int, int, std::vector<int>>(j.count(), sum, j.elements());
    };
    std::sort(table.sets.begin(), table.sets.end(),
              [&](SubsetMask a, SubsetMask b) { return key(a) < key(b); });
    int count = static_cast<int>(table.sets.size());
    table.predecessors.resize(count);
    for (int i = 0; i < count; ++i)
        for (int p = 0; p < i; ++p)
            if (dominates(table.sets[i], table.sets[p], n)) table.predecessors[i].set(p);
    return table;
}

struct SearchState {
    CandidateSet decided_short;
    CandidateSet decided_long;
    std::vector<SubsetMask> max_shorts;
    std::vector<SubsetMask> min_longs;
    std::vector<Rational> witness;
};

SubsetClass witness_class(const std::vector<Rational>& x, SubsetMask j) {
    Rational side(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        side += j.contains(static_cast<int>(i) + 1) ? x[i] : -x[i];
    if (side < 0) return SubsetClass::Short;
    if (side > 0) return SubsetClass::Long;
    return SubsetClass::Median;
}

class ChamberSearch {
public:
    explicit ChamberSearch(int n) : table_(build_candidates(n)) {}

    std::vector<Chamber> run() {
        SearchState root;
        root.witness.reserve(table_.n);
        for (int i = 0; i < table_.n; ++i) root.witness.emplace_back(Int(1) << i);
        return explore(0, std::move(root), 0);
    }

private:
    CandidateTable table_;

    static constexpr int kSpawnDepth = 5;

    std::vector<Chamber> explore(std::size_t index, SearchState state, int spawn_depth) {
        while (index < table_.sets.size()) {
            int i = static_cast<int>(index);
            if ((table_.predecessors[i] & state.decided_long).any()) {
                // implied by a long set below it; no constraint to record
                state.decided_long.set(i);
                ++index;
                continue;
            }
            SubsetClass at_witness = witness_class(state.witness, table_.sets[i]);

            // the side the witness lies on is feasible as is; the other side
            // (or both, when the witness sits on the wall) needs a solve
            SearchState base = std::move(state);
            std::optional<SearchState> short_branch, long_branch;
            {
                SearchState s = base;
                bool ok = at_witness == SubsetClass::Long ? (decide_free(s, i, false), true)
                                                          : try_decide(s, i, false);
                if (ok) long_branch = std::move(s);
            }
            {
                SearchState s = std::move(base);
                bool ok = at_witness == SubsetClass::Short ? (decide_free(s, i, true), true)
                                                           : try_decide(s, i, true);
                if (ok) short_branch = std::move(s);
            }

            if (short_branch && long_branch) {
                std::vector<Chamber> left, right;
                if (spawn_depth < kSpawnDepth) {
                    auto future = std::async(
                        std::launch::async,
                        [this, index, s = std::move(*long_branch), spawn_depth]() mutable {
                            return explore(index + 1, std::move(s), spawn_depth + 1);
                        });
                    left = explore(index + 1, std::move(*short_branch), spawn_depth + 1);
                    right = future.get();
                } else {
                    left = explore(index + 1, std::move(*short_branch), spawn_depth);
                    right = explore(index + 1, std::move(*long_branch), spawn_depth);
                }
                left.insert(left.end(), std::make_move_iterator(right.begin()),
                            std::make_move_iterator(right.end()));
                return left;
            }
            if (!short_branch && !long_branch) return {};
            state = std::move(short_branch ? *short_branch : *long_branch);
            ++index;
        }
        return {finish(state)};
    }

    void decide_free(SearchState& state, int i, bool as_short) {
        SubsetMask j = table_.sets[i];
        if (as_short) {
            state.decided_short.set(i);
            std::erase_if(state.max_shorts, [&](SubsetMask o) { return dominates(j, o, table_.n); });
            state.max_shorts.push_back(j);
        } else {
            state.decided_long.set(i);
            state.min_longs.push_back(j);
        }
    }

    bool try_decide(SearchState& state, int i, bool as_short) {
        decide_free(state, i, as_short);
        FeasibilityProblem fp{table_.n, state.max_shorts, state.min_longs};
        auto witness = feasible_point(fp);
        if (!witness) return false;
        state.witness = std::move(*witness);
        return true;
    }

    Chamber finish(const SearchState& state) const {
        ChamberDescriptor desc;
        desc.n = table_.n;
        for (std::size_t i = 0; i < table_.sets.size(); ++i)
            if (state.decided_short.test(i)) desc.shorts.push_back(table_.sets[i]);
        std::sort(desc.shorts.begin(), desc.shorts.end(), lex_less);
        desc.empty_flag = desc.shorts.empty();
        return Chamber{std::move(desc), integer_representative(state.witness)};
    }
};

}  // namespace

std::vector<Chamber> enumerate_chambers(int n) {
    if (n < 4 || n > 8) throw std::invalid_argument("chamber enumeration supports 4 <= n <= 8");
    ChamberSearch search(n);
    std::vector<Chamber> chambers = search.run();
    std::sort(chambers.begin(), chambers.end(), [](const Chamber& a, const Chamber& b) {
        if (a.desc.shorts.size() != b.desc.shorts.size())
            return a.desc.shorts.size() < b.desc.shorts.size();
        return a.desc.id() < b.desc.id();
    });
    return chambers;
}

std::vector<Chamber> regular_chambers(int n, int d) {
    std::vector<Chamber> out;
    for (Chamber& c : enumerate_chambers(n))
        if (is_d_regular(c.representative, d)) out.push_back(std::move(c));
    return out;
}

}  // namespace linkhom
