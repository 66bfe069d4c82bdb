#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linkhom/chambers.hpp"
#include "linkhom/face_ring.hpp"

#include <map>
#include <random>

using namespace linkhom;

namespace {

LengthVector lv(const std::string& text) { return LengthVector::parse(text); }

FaceComplex make_complex(int n, std::vector<SubsetMask> faces) {
    std::sort(faces.begin(), faces.end(), lex_less);
    return FaceComplex{n, std::move(faces)};
}

// rank over the rationals of a list of ring elements, by plain elimination
// in the face-indexed coordinate space
int span_rank(std::vector<RingElement> elements) {
    std::vector<std::map<SubsetMask, Rational>> basis;
    for (RingElement& e : elements) {
        std::map<SubsetMask, Rational> vec = e.coeffs;
        for (const auto& row : basis) {
            if (vec.empty()) break;
            auto lead = row.begin();
            auto hit = vec.find(lead->first);
            if (hit == vec.end()) continue;
            Rational factor = hit->second / lead->second;
            for (const auto& [face, coeff] : row) {
                Rational& slot = vec[face];
                slot -= factor * coeff;
                if (slot == 0) vec.erase(face);
            }
        }
        if (!vec.empty()) basis.push_back(std::move(vec));
    }
    return static_cast<int>(basis.size());
}

// iterated product of the listed vertex generators
RingElement product_of(const FaceComplex& cx, const std::vector<int>& vertices) {
    RingElement out = ring_unit(cx);
    for (int v : vertices) out = multiply(out, ring_generator(cx, v));
    return out;
}

}  // namespace

TEST_CASE("short subset complexes") {
    FaceComplex five = short_complex(lv("1,1,1,1,1,2"));
    CHECK(five.vertices() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(five.face_counts() == std::vector<long long>{1, 5});  // no edges

    FaceComplex none = short_complex(lv("1,1,1,1,1,4"));
    CHECK(none.vertices().empty());
    CHECK(none.face_counts() == std::vector<long long>{1});
    CHECK(none.has_empty_face());

    FaceComplex one = short_complex(lv("2,4,4,5"));
    CHECK(one.vertices() == std::vector<int>{1});
    CHECK(one.face_counts() == std::vector<long long>{1, 1});

    FaceComplex void_complex = short_complex(lv("1,1,3"));
    CHECK(void_complex.faces.empty());
    CHECK(!void_complex.has_empty_face());

    CHECK_THROWS_AS(short_complex(lv("2,1,1,2")), std::invalid_argument);
    CHECK_THROWS_AS(short_complex(lv("1,1,1,1")), NonGenericError);
}

TEST_CASE("exterior multiplication") {
    // two-element faces appear once three short bars fit together
    LengthVector v = lv("1,1,1,4,4,6");
    FaceComplex cx = short_complex(v);
    REQUIRE(cx.is_face(SubsetMask{1, 2}));

    RingElement y1 = ring_generator(cx, 1);
    RingElement y2 = ring_generator(cx, 2);
    CHECK(multiply(y1, y1).is_zero());

    RingElement y12 = multiply(y1, y2);
    REQUIRE(!y12.is_zero());
    CHECK(y12.coeffs.at(SubsetMask{1, 2}) == Rational(1));
    RingElement y21 = multiply(y2, y1);
    CHECK(y21.coeffs.at(SubsetMask{1, 2}) == Rational(-1));

    // unit acts as identity
    CHECK(multiply(ring_unit(cx), y1).coeffs == y1.coeffs);

    // no common face, product dies
    FaceComplex sparse = short_complex(lv("1,1,1,1,1,2"));
    CHECK(multiply(ring_generator(sparse, 1), ring_generator(sparse, 2)).is_zero());

    // associativity on the nontrivial complex
    RingElement y3 = ring_generator(cx, 3);
    CHECK(multiply(multiply(y1, y2), y3).coeffs == multiply(y1, multiply(y2, y3)).coeffs);

    CHECK_THROWS_AS(multiply(y1, ring_generator(sparse, 1)), std::invalid_argument);
}

TEST_CASE("graded ranks") {
    CHECK(graded_ranks(lv("1,1,1,1,1,2"), 4) == std::vector<long long>{1, 5, 0, 0});
    CHECK(graded_ranks(lv("1,1,1,1,1,4"), 4) == std::vector<long long>{1, 0, 0, 0});
    CHECK(graded_ranks(lv("1,1,3"), 4) == std::vector<long long>{0});
    CHECK_THROWS_AS(graded_ranks(lv("1,1,1,1,1,2"), 5), std::invalid_argument);

    // rank of the span of r-fold products equals the r-face count
    for (int n = 4; n <= 6; ++n) {
        for (const Chamber& c : enumerate_chambers(n)) {
            FaceComplex cx = short_complex(c.representative);
            std::vector<int> verts = cx.vertices();
            std::vector<long long> ranks = graded_ranks(c.representative, 4);
            for (int r = 1; r <= n - 3; ++r) {
                std::vector<RingElement> products;
                std::vector<int> pick(r);
                auto choose = [&](auto&& self, int offset, int depth) -> void {
                    if (depth == r) {
                        products.push_back(product_of(cx, pick));
                        return;
                    }
                    for (int i = offset; i < static_cast<int>(verts.size()); ++i) {
                        pick[depth] = verts[i];
                        self(self, i + 1, depth + 1);
                    }
                };
                choose(choose, 0, 0);
                CHECK(span_rank(std::move(products)) == ranks[r]);
            }
        }
    }
}

TEST_CASE("graded sign rule on larger faces") {
    // nine bars with a fractional top entry give three-vertex faces
    LengthVector v = lv("1,1,1,1,1,1,1,1,3/2");
    FaceComplex cx = short_complex(v);
    REQUIRE(cx.is_face(SubsetMask{1, 2, 3}));
    RingElement y12 = multiply(ring_generator(cx, 1), ring_generator(cx, 2));
    RingElement y3 = ring_generator(cx, 3);
    // degree-2 times degree-1 basis classes commute: (-1)^(2*1) = +1
    CHECK(multiply(y12, y3).coeffs == multiply(y3, y12).coeffs);
    RingElement y123 = multiply(y12, y3);
    CHECK(y123.coeffs.at(SubsetMask{1, 2, 3}) == Rational(1));
    // odd-degree generators anticommute
    RingElement y1 = ring_generator(cx, 1);
    RingElement ab = multiply(y1, y3), ba = multiply(y3, y1);
    for (const auto& [face, coeff] : ab.coeffs) CHECK(ba.coeffs.at(face) == -coeff);
}

TEST_CASE("iterated products hit signed basis classes") {
    FaceComplex cx = short_complex(lv("1,1,1,4,4,6"));
    RingElement forward = product_of(cx, {1, 2});
    RingElement backward = product_of(cx, {2, 1});
    REQUIRE(!forward.is_zero());
    CHECK(forward.coeffs.at(SubsetMask{1, 2}) == Rational(1));
    CHECK(backward.coeffs.at(SubsetMask{1, 2}) == Rational(-1));
}

TEST_CASE("first intersection rank") {
    CHECK(first_ih_rank(lv("1,1,1,1,1,2"), 5).rank == 6);
    CHECK(first_ih_rank(lv("1,1,1,1,1,2"), 5).coefficients == "integral");
    CHECK(first_ih_rank(lv("1,1,1,1,1,2"), 4).rank == 5);
    CHECK(first_ih_rank(lv("1,1,1,1,1,2"), 4).coefficients == "rational");
    CHECK(first_ih_rank(lv("1,1,1,1,1,1,5"), 5).rank == 1);
    // outside the proven range, the value is computed but flagged
    CHECK(!first_ih_rank(lv("1,1,1,1,1,2"), 5).warnings.empty());
    CHECK(first_ih_rank(lv("1,1,1,1,1,1,3"), 5).warnings.empty());
    CHECK(first_ih_rank(lv("1,1,1,1,1,8"), 4).rank == 0);
    CHECK_THROWS_AS(first_ih_rank(lv("1,1,1,2"), 4), std::invalid_argument);
    CHECK_THROWS_AS(first_ih_rank(lv("1,1,1,1"), 4), NonGenericError);
}

TEST_CASE("complex isomorphism") {
    FaceComplex a = short_complex(lv("1,1,1,1,1,2"));
    CHECK(complexes_isomorphic(a, a));

    FaceComplex five = make_complex(
        6, {SubsetMask{}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3}, SubsetMask{4}, SubsetMask{5}});
    FaceComplex four =
        make_complex(6, {SubsetMask{}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3}, SubsetMask{4}});
    CHECK(!complexes_isomorphic(five, four));

    FaceComplex path_a = make_complex(5, {SubsetMask{}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3},
                                          SubsetMask{1, 2}, SubsetMask{2, 3}});
    FaceComplex path_b = make_complex(5, {SubsetMask{}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3},
                                          SubsetMask{1, 3}, SubsetMask{2, 3}});
    CHECK(complexes_isomorphic(path_a, path_b));
    CHECK(complexes_isomorphic(path_b, path_a));
    FaceComplex star = make_complex(5, {SubsetMask{}, SubsetMask{1}, SubsetMask{2}, SubsetMask{3},
                                        SubsetMask{1, 2}, SubsetMask{1, 3}});
    CHECK(complexes_isomorphic(path_a, star));  // relabeling 1 <-> 2
    CHECK(complexes_isomorphic(star, path_b));

    // a complex without even the empty face is the invariant of an empty
    // moduli space; it differs from the complex with just the empty face
    FaceComplex void_complex = make_complex(5, {});
    FaceComplex point_complex = make_complex(5, {SubsetMask{}});
    CHECK(!complexes_isomorphic(void_complex, point_complex));
    CHECK(complexes_isomorphic(void_complex, make_complex(6, {})));
}

TEST_CASE("ordered complexes are equal exactly for equal chambers") {
    for (int n = 4; n <= 7; ++n) {
        std::vector<Chamber> chambers = enumerate_chambers(n);
        std::vector<FaceComplex> complexes;
        for (const Chamber& c : chambers) complexes.push_back(short_complex(c.representative));
        for (std::size_t i = 0; i < chambers.size(); ++i)
            for (std::size_t j = i; j < chambers.size(); ++j)
                CHECK((complexes[i] == complexes[j]) == (i == j));
    }
}

TEST_CASE("graded ranks are a chamber invariant") {
    std::mt19937 rng(909);
    for (const Chamber& c : enumerate_chambers(5)) {
        std::vector<EpsRational> shuffled = c.representative.entries();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (EpsRational& e : shuffled) e = e.times(Rational(5, 2));
        LengthVector partner(std::move(shuffled));
        CHECK(graded_ranks(partner, 4) == graded_ranks(c.representative, 4));
    }
}

TEST_CASE("distinguish verdicts") {
    DistinguishVerdict same = distinguish(lv("1,1,1,2"), lv("2,2,2,3"), 4);
    CHECK(same.same_chamber);
    CHECK(same.rings_isomorphic);
    CHECK(same.consistent_with_theorem);

    DistinguishVerdict diff = distinguish(lv("1,1,1,1,1,2"), lv("1,1,1,1,1,4"), 4);
    CHECK(!diff.same_chamber);
    CHECK(!diff.rings_isomorphic);
    CHECK(diff.theorem_applicable);
    CHECK(diff.consistent_with_theorem);

    DistinguishVerdict odd = distinguish(lv("1,1,1,2"), lv("1,1,1,4"), 5);
    CHECK(!odd.theorem_applicable);
    CHECK(odd.consistent_with_theorem);
}

TEST_CASE("sweeps find no counterexample") {
    SweepReport r = sweep(6, 4);
    CHECK(r.violations.empty());
    CHECK(r.pairs_checked == 28);  // 7 regular chambers: 7 partners + 21 pairs
    CHECK(sweep(5, 4).violations.empty());
    CHECK(sweep(6, 6).violations.empty());
}

TEST_CASE("documented presentations for the single-long-bar family") {
    ShapeSpaceRing r57 = shape_space_ring(5, 7);
    CHECK(r57.presentation == "Z[X]/(X^2)");
    CHECK(r57.x_degree == 4);
    CHECK(r57.x_power == 2);
    CHECK(!r57.two_torsion);

    ShapeSpaceRing r47 = shape_space_ring(4, 7);
    CHECK(r47.presentation == "Z[X]/(X^3, 2X)");
    CHECK(r47.two_torsion);

    CHECK(shape_space_ring(5, 6).presentation == "Z[X]/(X^1)");
    CHECK_THROWS_AS(shape_space_ring(6, 8), std::invalid_argument);
    CHECK_THROWS_AS(shape_space_ring(5, 5), std::invalid_argument);
}
