#pragma once
// Z2 cellular-spanning-tree check: do the basis generators form a set of
// (k+1)-cells whose boundaries span the full boundary space B_k?

#include <cstddef>

#include "spherebasis/complex.hpp"

namespace sphb {

struct TreeCheckReport {
    SkeletonSpec spec;              // ambient and k
    std::size_t facet_count = 0;    // number of generator (k+1)-cells
    std::size_t boundary_rank = 0;  // rank of the full boundary map on (k+1)-chains
    bool independent = false;       // generator columns are GF(2)-independent
    bool verdict = false;           // independent and facet_count == boundary_rank
    bool z2_analog_only = true;     // only the Z2 analog of the integer
                                    // spanning-tree condition is checked
};

// Tests whether the generators of cube_basis / simplex_basis(n, k) form a Z2
// spanning tree of the (k+1)-skeleton: their boundary columns must be
// independent and number exactly rank of the full boundary map (so their
// boundaries span B_k = Z_k). Guarded at n <= 8 (cube) / n <= 10 (simplex).
TreeCheckReport spanning_tree_check(Family family, int n, int k);

}  // namespace sphb
