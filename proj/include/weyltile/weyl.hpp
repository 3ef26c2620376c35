// Weyl group and affine Weyl group elements, parabolic subgroups, and
// extended-diagram automorphisms.
//
// Linear parts are exact rational matrices acting in simple-root
// coordinates; translations are integer vectors in the simple-coroot basis.
// An affine element acts as x |-> M x + lambda.
#pragma once

#include "weyltile/exactgeo.hpp"
#include "weyltile/rootsys.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weyltile {

struct WeylElement {
    Mat matrix;
    std::vector<int> word;  // generator indices in 1..l, shortest found
};

struct AffineWeylElement {
    TypeLabel label;
    VecI translation;       // coroot-basis coordinates of lambda_w = w(0)
    Mat matrix;             // linear part, simple-root coordinates
    std::vector<int> word;  // indices in 0..l; metadata only

    bool is_linear() const {
        for (const auto& m : translation)
            if (m != 0) return false;
        return true;
    }
    bool operator==(const AffineWeylElement& o) const {
        return label == o.label && translation == o.translation && mat_eq(matrix, o.matrix);
    }
};

// Canonical total order on elements: translation lex, then matrix lex.
int element_cmp(const AffineWeylElement& a, const AffineWeylElement& b);

AffineWeylElement identity_element(const RootSystem& rs);

// Affine simple reflection s_i, i in 0..l.
AffineWeylElement simple_reflection(const RootSystem& rs, int i);

// Reflection in an arbitrary root (finite, lambda = 0).
AffineWeylElement root_reflection(const RootSystem& rs, const Root& r);

struct EnumerateOptions {
    Int cap = Int(1000000);
    bool allow_large = false;
};

// All of W by breadth-first closure over the simple reflections, in
// canonical order (word length, then matrix entries lexicographically).
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, const EnumerateOptions& opts = {});

// Subset with det(id - w) != 0.
std::vector<WeylElement> regular_elements(const std::vector<WeylElement>& group);

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& a,
                          const AffineWeylElement& b);
AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& a);
Vec apply(const RootSystem& rs, const AffineWeylElement& a, const Vec& x);

// Linear part as an affine element with zero translation.
AffineWeylElement linear_part(const RootSystem& rs, const AffineWeylElement& a);

struct ParabolicSubgroup {
    std::vector<int> index_set;  // proper subset of 0..l, sorted
    std::vector<AffineWeylElement> elements;
};

// Finite subgroup generated by { s_i : i in I }, I a proper subset of
// {0,...,l}. BFS capped at 1152 elements.
ParabolicSubgroup parabolic(const RootSystem& rs, const std::vector<int>& index_set);

struct DiagramAutomorphism {
    std::vector<int> node_permutation;  // tau over 0..l
    Mat linear;                         // G, the linear part of g
    Vec translation;                    // g(x) = G x + t, root coordinates
};

Vec automorphism_apply(const DiagramAutomorphism& g, const Vec& x);
// g w g^{-1}, which is again in the affine Weyl group.
AffineWeylElement automorphism_conjugate(const RootSystem& rs, const DiagramAutomorphism& g,
                                         const AffineWeylElement& w);

// All symmetries of the extended Dynkin diagram, each realized by the
// Euclidean alcove symmetry implementing it. Verified on generators.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

}  // namespace weyltile
