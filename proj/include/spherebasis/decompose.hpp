#pragma once
// Decomposition of even subcomplexes (cycles) into canonical basis spheres:
// closed-form rules per family, a linear-solve oracle, the toroidal example,
// and the connected-sum ordering search.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spherebasis/bases.hpp"
#include "spherebasis/complex.hpp"

namespace sphb {

struct DecompositionResult {
    std::vector<std::size_t> indices;  // ascending indices into the basis
    Chain residual;                    // empty iff success
    std::string method;                // "cone", "peel", or "solve"
};

// Closed-form decomposition over the simplex basis: the selected elements are
// exactly those generated by {1} u sigma for the cells sigma of z avoiding
// vertex 1. Requires z to be a cycle (rejected naming an odd-degree face
// otherwise); the re-summed selection is verified to equal z.
DecompositionResult simplex_decompose(const Chain& z);
DecompositionResult simplex_decompose(const Chain& z, const SphereBasis& basis);

// Greedy peel over the cube basis, top level downward: at each level select
// every element whose private face lies in the current residual and add its
// chain in; the final residual must be empty or the seed sphere. Requires z
// to be a cycle.
DecompositionResult cube_decompose(const Chain& z);
DecompositionResult cube_decompose(const Chain& z, const SphereBasis& basis);

// Independent check: solve the GF(2) system whose columns are the element
// chains. Succeeds iff z is in the span; otherwise the residual is the
// reduced remainder of z.
DecompositionResult oracle_decompose(const Chain& z, const SphereBasis& basis);

// Re-sum of the indexed element chains (for round-trip verification).
Chain resum(const DecompositionResult& result, const SphereBasis& basis);

// Closed-surface evidence for a k-chain z: every (k-1)-cell of the closure
// lies in exactly two k-cells of z, the closure is connected, and its Euler
// characteristic / Z2 Betti profile are as computed. Betti numbers cannot
// distinguish a torus from a Klein bottle; the certificate reports only Z2
// invariants.
struct SurfaceCertificate {
    bool closed_surface = false;  // every (k-1)-face in exactly 2 cells of z
    bool connected = false;
    long long euler = 0;
    std::vector<std::size_t> betti;  // of the closure, unreduced
};
SurfaceCertificate surface_certificate(const Chain& z);

// Search for a toroidal sum of elements of the 7-element basis of the
// 2-skeleton of the 4-cube. First searches the 21 exclusion pairs (5-element
// sums); if none is a torus, falls back to exclusion triples (4-element
// sums). pair_found records whether the pair search succeeded.
struct TorusReport {
    bool pair_found = false;
    std::vector<std::size_t> excluded;  // indices left out of the sum
    Chain torus;                        // empty when nothing was found
    DecompositionResult decomposition;  // peel of the torus chain
    SurfaceCertificate certificate;
    std::string note;
};
TorusReport torus_build();

enum class OrderOutcome {
    ordered,       // an ordering was found
    none_found,    // search space exhausted, no ordering exists
    inconclusive,  // node budget hit before exhaustion
};

struct OrderResult {
    OrderOutcome outcome = OrderOutcome::none_found;
    std::vector<std::size_t> ordering;  // permutation of the input indices
    std::size_t nodes = 0;              // search nodes visited
};

// Backtracking search for an ordering of the indexed elements such that each
// summand meets the previous partial sum in a "ball": for k = 1 the
// intersection of closures must be a nontrivial simple path; for k >= 2 it
// must be pure of dimension k, connected, with vanishing positive-degree Z2
// Betti numbers, and greedily collapsible to a point via free faces (a
// conservative proxy for being a k-ball, reported as such). Ties break
// toward the smallest basis index; the node budget bounds the search.
OrderResult connected_sum_order(const Chain& z, const std::vector<std::size_t>& indices,
                                const SphereBasis& basis, std::size_t node_budget = 1000000);

// Exhaustive robustness check at k = 1: enumerates every simple circuit of
// the complete graph on n+1 vertices (the 1-skeleton of the n-simplex),
// decomposes each over the simplex basis, and searches for a connected-sum
// ordering. Guarded at n <= 5.
struct RobustReport {
    int n = 0;
    std::size_t circuits = 0;
    std::size_t verified = 0;
    std::size_t failed = 0;
    std::size_t inconclusive = 0;
};
RobustReport robust_check_all(int n, std::size_t node_budget = 1000000);

}  // namespace sphb
