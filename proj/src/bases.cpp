#include "spherebasis/bases.hpp"

#include <stdexcept>
#include <string>

namespace sphb {

namespace {

void require_range(int n, int k, const char* which) {
    if (k < 1 || k > n - 1)
        throw std::domain_error(std::string(which) + " basis needs 1 <= k <= n-1 (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

Chain boundary_of(const Ambient& ambient, const Cell& generator) {
    return boundary(Chain::from_sorted(ambient, generator.dim(), {generator}));
}

}  // namespace

SphereBasis cube_basis(int n, int k) {
    require_range(n, k, "cube");
    const Ambient ambient{Family::cube, n};
    SphereBasis basis{SkeletonSpec{ambient, k}, {}};

    // seed: the boundary of the (k+1)-cube spanned by the first k+1 coordinates
    std::string seed_word(static_cast<std::size_t>(k + 1), '*');
    seed_word.append(static_cast<std::size_t>(n - k - 1), '0');
    const Cell seed = Cell::cube(seed_word);
    Chain seed_chain = boundary_of(ambient, seed);
    basis.elements.push_back(
        BasisElement{seed, seed_chain.cells().front(), k + 1, std::move(seed_chain)});

    // growth: coordinate m+1 attaches a prism over every k-cell of the m-cube
    for (int m = k + 1; m < n; ++m) {
        const std::string zeros(static_cast<std::size_t>(n - m - 1), '0');
        for (const auto& s : enumerate_cells(Ambient{Family::cube, m}, k)) {
            const Cell generator = Cell::cube(s.word() + '*' + zeros);
            const Cell private_face = Cell::cube(s.word() + '1' + zeros);
            basis.elements.push_back(
                BasisElement{generator, private_face, m + 1, boundary_of(ambient, generator)});
        }
    }
    return basis;
}

SphereBasis simplex_basis(int n, int k) {
    require_range(n, k, "simplex");
    const Ambient ambient{Family::simplex, n};
    SphereBasis basis{SkeletonSpec{ambient, k}, {}};

    // (k+2)-subsets of {1..n+1} containing vertex 1, in ascending order
    std::vector<int> rest(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i) rest[static_cast<std::size_t>(i)] = i + 2;
    while (true) {
        std::vector<int> verts{1};
        verts.insert(verts.end(), rest.begin(), rest.end());
        const Cell generator = Cell::simplex(verts);
        const Cell private_face = Cell::simplex(rest);
        basis.elements.push_back(
            BasisElement{generator, private_face, 0, boundary_of(ambient, generator)});

        // next (k+1)-combination of {2..n+1}
        int i = k;
        while (i >= 0 && rest[static_cast<std::size_t>(i)] == n + 1 - (k - i)) --i;
        if (i < 0) break;
        ++rest[static_cast<std::size_t>(i)];
        for (int t = i + 1; t <= k; ++t)
            rest[static_cast<std::size_t>(t)] = rest[static_cast<std::size_t>(t - 1)] + 1;
    }
    return basis;
}

CoverageReport coverage_report(const SphereBasis& basis) {
    CoverageReport report;
    const CellIndex index(basis.spec.ambient, basis.spec.k);
    report.cell_count = index.size();
    Gf2Vector covered(index.size());
    for (const auto& element : basis.elements)
        for (const auto& cell : element.chain.cells()) covered.set(index.index_of(cell), true);
    report.covered_count = covered.popcount();
    report.covers = report.covered_count == report.cell_count;
    return report;
}

bool coverage_check(const SphereBasis& basis) { return coverage_report(basis).covers; }

}  // namespace sphb
