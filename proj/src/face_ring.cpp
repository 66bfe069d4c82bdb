#include "linkhom/face_ring.hpp"

#include "linkhom/chambers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace linkhom {

bool FaceComplex::has_empty_face() const {
    return !faces.empty() && faces.front().empty();
}

std::vector<int> FaceComplex::vertices() const {
    std::vector<int> out;
    for (SubsetMask f : faces)
        if (f.count() == 1) out.push_back(f.elements()[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> FaceComplex::face_counts() const {
    std::vector<long long> counts;
    for (SubsetMask f : faces) {
        int r = f.count();
        if (static_cast<int>(counts.size()) <= r) counts.resize(r + 1, 0);
        ++counts[r];
    }
    return counts;
}

bool FaceComplex::is_face(SubsetMask f) const {
    return std::binary_search(faces.begin(), faces.end(), f, lex_less);
}

FaceComplex short_complex(const LengthVector& sorted) {
    if (!sorted.is_sorted()) throw std::invalid_argument("short complex needs a sorted vector");
    require_generic(sorted);
    int n = sorted.size();
    FaceComplex cx;
    cx.n = n;
    if (classify_subset(sorted, SubsetMask{}.with(n)) == SubsetClass::Long) return cx;
    std::uint32_t rest = SubsetMask::full(n - 1).bits();
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        SubsetMask t(sub);
        if (t.count() <= n - 3 &&
            classify_subset(sorted, t.with(n)) == SubsetClass::Short)
            cx.faces.push_back(t);
        if (sub == 0) break;
    }
    std::sort(cx.faces.begin(), cx.faces.end(), lex_less);
    return cx;
}

RingElement ring_unit(const FaceComplex& cx) {
    RingElement e;
    e.complex = &cx;
    if (cx.has_empty_face()) e.coeffs[SubsetMask{}] = 1;
    return e;
}

RingElement ring_generator(const FaceComplex& cx, int vertex) {
    RingElement e;
    e.complex = &cx;
    SubsetMask f{vertex};
    if (cx.is_face(f)) e.coeffs[f] = 1;
    return e;
}

namespace {

int shuffle_inversions(SubsetMask a, SubsetMask b) {
    int inversions = 0;
    for (int x : a.elements())
        for (int y : b.elements())
            if (x > y) ++inversions;
    return inversions;
}

}  // namespace

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.complex != b.complex) throw std::invalid_argument("elements of different complexes");
    RingElement out;
    out.complex = a.complex;
    for (const auto& [fa, ca] : a.coeffs) {
        for (const auto& [fb, cb] : b.coeffs) {
            if (!(fa & fb).empty()) continue;
            SubsetMask merged = fa | fb;
            if (!a.complex->is_face(merged)) continue;
            Rational term = ca * cb;
            if (shuffle_inversions(fa, fb) % 2 != 0) term = -term;
            Rational& slot = out.coeffs[merged];
            slot += term;
            if (slot == 0) out.coeffs.erase(merged);
        }
    }
    return out;
}

std::vector<long long> graded_ranks(const LengthVector& lengths, int d) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("graded ranks are computed for even d >= 4 only");
    LengthVector sorted = lengths.sorted();
    FaceComplex cx = short_complex(sorted);
    int n = sorted.size();
    std::vector<long long> ranks(n - 2, 0);
    std::vector<long long> counts = cx.face_counts();
    for (int r = 0; r < static_cast<int>(ranks.size()); ++r)
        if (r < static_cast<int>(counts.size())) ranks[r] = counts[r];
    return ranks;
}

FirstIhRank first_ih_rank(const LengthVector& lengths, int d) {
    if (d < 4) throw std::invalid_argument("first rank needs d >= 4");
    LengthVector sorted = lengths.sorted();
    require_generic(sorted);
    int n = sorted.size();
    if (n <= d) throw std::invalid_argument("first rank needs n > d");
    FirstIhRank out;
    out.coefficients = d % 2 == 0 ? "rational" : "integral";
    if (n < d + 2)
        out.warnings.push_back("n < d+2 is outside the proven range of the rank formula");
    if (d % 2 == 0 && !is_d_regular(sorted, d))
        out.warnings.push_back("vector is not d-regular; the even-d rank formula is unproven here");
    if (is_empty_moduli(sorted)) {
        out.rank = 0;
        out.warnings.push_back("empty moduli space");
        return out;
    }
    long long a1 = static_cast<long long>(short_sets(sorted, 1).size());
    out.rank = d % 2 == 0 ? a1 : 1 + a1;
    return out;
}

namespace {

// per-vertex count of incident faces for each face size
std::vector<std::vector<int>> vertex_signatures(const FaceComplex& cx, const std::vector<int>& verts) {
    int max_size = 0;
    for (SubsetMask f : cx.faces) max_size = std::max(max_size, f.count());
    std::vector<std::vector<int>> sig(verts.size(), std::vector<int>(max_size + 1, 0));
    for (SubsetMask f : cx.faces)
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (f.contains(verts[v])) ++sig[v][f.count()];
    return sig;
}

}  // namespace

bool complexes_isomorphic(const FaceComplex& a, const FaceComplex& b) {
    if (a.face_counts() != b.face_counts()) return false;
    std::vector<int> va = a.vertices(), vb = b.vertices();
    auto sig_a = vertex_signatures(a, va);
    auto sig_b = vertex_signatures(b, vb);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> assign(va.size(), -1);  // index into vb
    std::vector<bool> used(vb.size(), false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == va.size()) {
            std::vector<SubsetMask> mapped;
            for (SubsetMask f : a.faces) {
                SubsetMask g;
                for (int x : f.elements()) {
                    std::size_t pos = std::lower_bound(va.begin(), va.end(), x) - va.begin();
                    g = g.with(vb[assign[pos]]);
                }
                mapped.push_back(g);
            }
            std::sort(mapped.begin(), mapped.end(), lex_less);
            return mapped == b.faces;
        }
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (used[j] || sig_a[i] != sig_b[j]) continue;
            used[j] = true;
            assign[i] = static_cast<int>(j);
            if (place(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return place(0);
}

DistinguishVerdict distinguish(const LengthVector& a, const LengthVector& b, int d) {
    DistinguishVerdict v;
    v.same_chamber = same_chamber(a, b);
    v.rings_isomorphic = complexes_isomorphic(short_complex(a.sorted()), short_complex(b.sorted()));
    bool even = d >= 4 && d % 2 == 0;
    bool sizes = a.size() == b.size();
    bool regular = even && is_d_regular(a, d) && is_d_regular(b, d);
    v.theorem_applicable = even && sizes && regular;
    if (!even) v.warnings.push_back("theorem applies to even d >= 4 only");
    if (!sizes) v.warnings.push_back("vectors of different lengths are never compared by the theorem");
    if (even && !regular) v.warnings.push_back("theorem needs both vectors d-regular");
    v.consistent_with_theorem = v.theorem_applicable ? v.same_chamber == v.rings_isomorphic : true;
    return v;
}

SweepReport sweep(int n, int d) {
    SweepReport report;
    report.n = n;
    report.d = d;
    std::vector<Chamber> chambers = regular_chambers(n, d);
    for (const Chamber& c : chambers) {
        // scrambled same-chamber partner: reversed entries, rescaled
        std::vector<EpsRational> entries;
        const auto& src = c.representative.entries();
        for (auto it = src.rbegin(); it != src.rend(); ++it) entries.push_back(it->times(Rational(3, 2)));
        LengthVector partner{std::move(entries)};
        DistinguishVerdict v = distinguish(c.representative, partner, d);
        ++report.pairs_checked;
        if (!v.same_chamber || !v.rings_isomorphic || !v.consistent_with_theorem)
            report.violations.emplace_back(c.desc.id(), c.desc.id() + " (scrambled)");
    }
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        for (std::size_t j = i + 1; j < chambers.size(); ++j) {
            DistinguishVerdict v =
                distinguish(chambers[i].representative, chambers[j].representative, d);
            ++report.pairs_checked;
            if (!v.consistent_with_theorem)
                report.violations.emplace_back(chambers[i].desc.id(), chambers[j].desc.id());
        }
    }
    return report;
}

ShapeSpaceRing shape_space_ring(int d, int n) {
    if (n <= d) throw std::invalid_argument("family needs n > d");
    if (d < 4 || (d % 2 == 0 && d > 4))
        throw std::invalid_argument("presentation known for odd d >= 5 and d = 4 only");
    ShapeSpaceRing out;
    out.d = d;
    out.n = n;
    out.x_degree = d - 1;
    out.x_power = n - d;
    std::ostringstream text;
    if (d == 4) {
        out.x_power = n - 4;
        out.two_torsion = true;
        text << "Z[X]/(X^" << out.x_power << ", 2X)";
    } else {
        text << "Z[X]/(X^" << out.x_power << ")";
    }
    out.presentation = text.str();
    return out;
}

}  // namespace linkhom
