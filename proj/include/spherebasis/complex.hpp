#pragma once
// GF(2) chains on simplex / cube skeleta, boundary operators, Betti numbers,
// and finite face-closed cell complexes.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherebasis/cells.hpp"
#include "spherebasis/gf2.hpp"

namespace sphb {

// Thrown when an operation that needs a cycle (an even subcomplex) receives a
// chain with nonempty boundary.
class NotACycleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The k-skeleton of the ambient polytope.
struct SkeletonSpec {
    Ambient ambient;
    int k = 0;
    friend bool operator==(const SkeletonSpec&, const SkeletonSpec&) = default;
};

// A finite GF(2) chain: a set of distinct k-cells of one ambient polytope,
// kept sorted in canonical cell order. Addition is symmetric difference.
class Chain {
public:
    Chain(Ambient ambient, int dim);
    // Sums the given cells mod 2 (duplicates cancel); all must be dim-cells
    // of the ambient.
    static Chain from_cells(Ambient ambient, int dim, std::vector<Cell> cells);
    // Fast path: cells are already canonically sorted and distinct.
    static Chain from_sorted(Ambient ambient, int dim, std::vector<Cell> cells);

    const Ambient& ambient() const noexcept { return ambient_; }
    Family family() const noexcept { return ambient_.family; }
    int dim() const noexcept { return dim_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    bool contains(const Cell& cell) const;

    Chain& operator+=(const Chain& other);
    friend Chain operator+(Chain lhs, const Chain& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    Ambient ambient_;
    int dim_;
    std::vector<Cell> cells_;
};

// Boundary of a chain: the mod-2 sum of codimension-1 faces of its cells.
// For a 0-chain this is the augmentation (parity times the empty cell).
Chain boundary(const Chain& chain);
bool is_cycle(const Chain& chain);

// Canonically ordered j-cells of an ambient polytope, with reverse lookup.
class CellIndex {
public:
    CellIndex(const Ambient& ambient, int dim);

    const Ambient& ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const Cell& cell(std::size_t i) const { return cells_.at(i); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t index_of(const Cell& cell) const;  // throws if absent
    bool contains(const Cell& cell) const;

private:
    Ambient ambient_;
    int dim_;
    std::vector<Cell> cells_;
    std::map<std::string, std::size_t> lookup_;
};

// Matrix of the boundary map from ell-chains to (ell-1)-chains of the ambient
// polytope, rows/columns in canonical cell order. ell = 0 gives the zero map
// (0 rows), matching the unreduced convention used throughout. Cached.
const Gf2Matrix& boundary_matrix(const Ambient& ambient, int ell);

Gf2Vector chain_to_vector(const Chain& chain, const CellIndex& index);
Chain chain_from_vector(const Gf2Vector& v, const CellIndex& index);
// One column per chain.
Gf2Matrix chains_to_columns(const std::vector<Chain>& chains, const CellIndex& index);

// Betti number b_ell of the k-skeleton (unreduced, so b_0 counts components).
std::size_t betti(const SkeletonSpec& spec, int ell);
std::vector<std::size_t> betti_profile(const SkeletonSpec& spec);  // b_0..b_k

// A finite set of cells of one ambient polytope, any mix of dimensions,
// sorted by (dimension, canonical order).
class CellComplex {
public:
    CellComplex(Ambient ambient, std::vector<Cell> cells);
    static CellComplex closure_of(const Ambient& ambient, const std::vector<Cell>& cells);

    const Ambient& ambient() const noexcept { return ambient_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::vector<Cell> cells_of_dim(int j) const;
    std::vector<std::size_t> f_vector() const;  // cell counts by dimension 0..dim()
    int dim() const;                            // -1 for the empty complex
    bool empty() const noexcept { return cells_.empty(); }
    std::size_t size() const noexcept { return cells_.size(); }
    bool contains(const Cell& cell) const;

    bool is_closed() const;  // contains every face of every cell
    CellComplex closure() const;

    // Requires a face-closed complex; throws naming a missing face otherwise.
    long long euler_characteristic() const;
    // Z2 Betti numbers b_0..b_dim of a face-closed complex (unreduced).
    std::vector<std::size_t> betti_profile() const;
    // Connectivity of the 1-skeleton of the closure; false when empty.
    bool is_connected() const;

private:
    Ambient ambient_;
    std::vector<Cell> cells_;
};

// All faces of all cells of the chain, as a face-closed complex.
CellComplex closure(const Chain& chain);

// Cells present in both complexes (same ambient required).
CellComplex intersect(const CellComplex& a, const CellComplex& b);

}  // namespace sphb
