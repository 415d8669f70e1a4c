#pragma once
// Canonical sphere bases for the cycle space of the k-skeleton: every element
// is the boundary of a (k+1)-cell, hence a k-sphere, and carries a private
// face that no earlier element at its level contains.

#include <vector>

#include "spherebasis/complex.hpp"

namespace sphb {

struct BasisElement {
    Cell generator;     // the (k+1)-cell whose boundary this element is
    Cell private_face;  // k-cell identifying the element during peeling
    int level;          // attaching coordinate (cube) or 0 (simplex)
    Chain chain;        // the k-sphere itself
};

struct SphereBasis {
    SkeletonSpec spec;
    std::vector<BasisElement> elements;
};

// Basis of the cycle space of the k-skeleton of the n-cube, built by growing
// the cube one coordinate at a time: the seed sphere lives in the first k+1
// coordinates (level k+1), and each later coordinate m+1 contributes the
// boundaries of the prisms s x [0,1] over the k-cells s of the m-cube, at
// level m+1 with private face s x {1}. Requires 1 <= k <= n-1. Elements are
// ordered by (level, generator).
SphereBasis cube_basis(int n, int k);

// Basis of the cycle space of the k-skeleton of the n-simplex: boundaries of
// the (k+1)-simplices spanned by vertex sets containing vertex 1. Requires
// 1 <= k <= n-1. The private face of an element is its generator minus
// vertex 1, which no other element contains.
SphereBasis simplex_basis(int n, int k);

// True iff the union of the element chains is the full set of k-cells of the
// ambient polytope.
bool coverage_check(const SphereBasis& basis);

struct CoverageReport {
    std::size_t cell_count = 0;     // k-cells of the ambient
    std::size_t covered_count = 0;  // of which some element contains
    bool covers = false;
};
CoverageReport coverage_report(const SphereBasis& basis);

}  // namespace sphb
