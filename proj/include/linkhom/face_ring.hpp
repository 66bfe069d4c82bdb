#pragma once

#include "linkhom/length_vector.hpp"

#include <map>
#include <string>
#include <vector>

namespace linkhom {

// Abstract simplicial complex of short subsets of a sorted generic vector:
// faces are the J inside {1,...,n-1} with J+{n} short, stored without the top
// index. Contains the empty face iff {n} itself is short; closed under
// subsets.
struct FaceComplex {
    int n = 0;
    std::vector<SubsetMask> faces;  // sorted with lex_less; may include the empty mask

    bool has_empty_face() const;
    std::vector<int> vertices() const;      // elements of the 1-element faces
    std::vector<long long> face_counts() const;  // index r = number of r-element faces
    bool is_face(SubsetMask f) const;

    friend bool operator==(const FaceComplex& a, const FaceComplex& b) {
        return a.n == b.n && a.faces == b.faces;
    }
};

FaceComplex short_complex(const LengthVector& sorted);

// Element of the exterior face ring over the rationals: a linear combination
// of basis classes Y_J indexed by faces; the empty face is the unit.
struct RingElement {
    const FaceComplex* complex = nullptr;
    std::map<SubsetMask, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
};

RingElement ring_unit(const FaceComplex& cx);
RingElement ring_generator(const FaceComplex& cx, int vertex);

// Bilinear extension of Y_J * Y_K = sign(shuffle) * Y_{J u K} when J, K are
// disjoint and J u K is a face, and 0 otherwise.
RingElement multiply(const RingElement& a, const RingElement& b);

// Ranks of the graded pieces in degrees r(d-1), r = 0..n-3, for even d >= 4:
// the number of r-element faces (1 in degree zero for a nonempty moduli
// space). Throws for odd d.
std::vector<long long> graded_ranks(const LengthVector& lengths, int d);

struct FirstIhRank {
    long long rank = 0;
    std::string coefficients;  // "integral" or "rational"
    std::vector<std::string> warnings;
};

// Rank of the degree-(d-1) piece: 1 + a_1 over the integers for odd d,
// a_1 over the rationals for even d; 0 for an empty moduli space.
FirstIhRank first_ih_rank(const LengthVector& lengths, int d);

// Simplicial isomorphism by brute-force vertex bijection with face-count and
// degree-signature pruning.
bool complexes_isomorphic(const FaceComplex& a, const FaceComplex& b);

struct DistinguishVerdict {
    bool same_chamber = false;
    bool rings_isomorphic = false;
    bool theorem_applicable = false;  // d even >= 4, equal n, both d-regular
    bool consistent_with_theorem = true;
    std::vector<std::string> warnings;
};

// Chamber comparison against the ring invariant: same chamber up to
// permutation versus isomorphism of the short-subset complexes (faithful for
// the exterior face ring). When applicable the two must agree.
DistinguishVerdict distinguish(const LengthVector& a, const LengthVector& b, int d);

struct SweepReport {
    int n = 0;
    int d = 0;
    long long pairs_checked = 0;
    std::vector<std::pair<std::string, std::string>> violations;  // chamber id pairs
};

// Pairwise distinguish over all d-regular chamber representatives, plus a
// scrambled same-chamber partner for each representative.
SweepReport sweep(int n, int d);

struct ShapeSpaceRing {
    int d = 0;
    int n = 0;
    std::string presentation;  // e.g. "Z[X]/(X^2)" or "Z[X]/(X^3, 2X)"
    int x_degree = 0;
    int x_power = 0;      // exponent in the leading relation
    bool two_torsion = false;
};

// Documented presentations for the equilateral-with-one-long-bar family
// (1,...,1,n-2): Z[X]/(X^{n-d}) for odd d, Z[X]/(X^{n-4}, 2X) for d = 4.
// Unsupported for even d >= 6.
ShapeSpaceRing shape_space_ring(int d, int n);

}  // namespace linkhom
