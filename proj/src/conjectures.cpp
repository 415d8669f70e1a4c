#include "spherebasis/conjectures.hpp"

#include <stdexcept>

#include "spherebasis/bases.hpp"

namespace sphb {

TreeCheckReport spanning_tree_check(Family family, int n, int k) {
    const int guard = family == Family::cube ? 8 : 10;
    if (n > guard)
        throw std::domain_error("spanning_tree_check: n=" + std::to_string(n) +
                                " exceeds the size guard " + std::to_string(guard) + " for the " +
                                to_string(family) + " family");
    const SphereBasis basis =
        family == Family::cube ? cube_basis(n, k) : simplex_basis(n, k);

    TreeCheckReport report;
    report.spec = basis.spec;
    report.facet_count = basis.elements.size();

    // columns of the boundary map restricted to the generators
    std::vector<Chain> chains;
    chains.reserve(basis.elements.size());
    for (const auto& element : basis.elements) chains.push_back(element.chain);
    const CellIndex index(basis.spec.ambient, k);
    const std::size_t restricted_rank = chains_to_columns(chains, index).rank();
    report.independent = restricted_rank == report.facet_count;

    report.boundary_rank = boundary_matrix(basis.spec.ambient, k + 1).rank();
    report.verdict = report.independent && report.facet_count == report.boundary_rank;
    return report;
}

}  // namespace sphb
