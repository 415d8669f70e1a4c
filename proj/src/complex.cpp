#include "spherebasis/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sphb {

namespace {

void require_same_shape(const Chain& a, const Chain& b, const char* what) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument(std::string(what) + ": chain ambients differ");
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": chain dimensions differ (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
}

}  // namespace

Chain::Chain(Ambient ambient, int dim) : ambient_(ambient), dim_(dim) {
    if (dim < -1 || dim > ambient.n)
        throw std::domain_error("chain dimension " + std::to_string(dim) +
                                " out of range [-1, " + std::to_string(ambient.n) + "]");
}

Chain Chain::from_cells(Ambient ambient, int dim, std::vector<Cell> cells) {
    for (const auto& cell : cells) {
        if (!belongs_to(cell, ambient))
            throw std::invalid_argument("cell " + cell.text() + " does not live in the ambient " +
                                        to_string(ambient.family) + " of dimension " +
                                        std::to_string(ambient.n));
        if (cell.dim() != dim)
            throw std::invalid_argument("cell " + cell.text() + " has dimension " +
                                        std::to_string(cell.dim()) + ", expected " +
                                        std::to_string(dim));
    }
    std::sort(cells.begin(), cells.end());
    // cancel pairs mod 2
    std::vector<Cell> reduced;
    reduced.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        while (j < cells.size() && cells[j] == cells[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(cells[i]);
        i = j;
    }
    Chain chain(ambient, dim);
    chain.cells_ = std::move(reduced);
    return chain;
}

Chain Chain::from_sorted(Ambient ambient, int dim, std::vector<Cell> cells) {
    Chain chain(ambient, dim);
    chain.cells_ = std::move(cells);
    return chain;
}

bool Chain::contains(const Cell& cell) const {
    return std::binary_search(cells_.begin(), cells_.end(), cell);
}

Chain& Chain::operator+=(const Chain& other) {
    require_same_shape(*this, other, "chain sum");
    std::vector<Cell> merged;
    merged.reserve(cells_.size() + other.cells_.size());
    auto a = cells_.begin();
    auto b = other.cells_.begin();
    while (a != cells_.end() && b != other.cells_.end()) {
        if (*a < *b) {
            merged.push_back(*a++);
        } else if (*b < *a) {
            merged.push_back(*b++);
        } else {
            ++a;
            ++b;  // cancels mod 2
        }
    }
    merged.insert(merged.end(), a, cells_.end());
    merged.insert(merged.end(), b, other.cells_.end());
    cells_ = std::move(merged);
    return *this;
}

Chain boundary(const Chain& chain) {
    if (chain.dim() < 0)
        throw std::domain_error("boundary needs a chain of dimension >= 0");
    if (chain.dim() == 0) {
        Chain out(chain.ambient(), -1);
        if (chain.size() % 2 == 1)
            out += Chain::from_sorted(chain.ambient(), -1, {Cell::empty(chain.family())});
        return out;
    }
    Chain out(chain.ambient(), chain.dim() - 1);
    for (const auto& cell : chain.cells())
        out += Chain::from_sorted(chain.ambient(), chain.dim() - 1,
                                  faces(cell, chain.dim() - 1));
    return out;
}

bool is_cycle(const Chain& chain) { return boundary(chain).empty(); }

CellIndex::CellIndex(const Ambient& ambient, int dim)
    : ambient_(ambient), dim_(dim), cells_(enumerate_cells(ambient, dim)) {
    for (std::size_t i = 0; i < cells_.size(); ++i) lookup_[cells_[i].text()] = i;
}

std::size_t CellIndex::index_of(const Cell& cell) const {
    const auto it = lookup_.find(cell.text());
    if (it == lookup_.end())
        throw std::out_of_range("cell " + cell.text() + " is not a " + std::to_string(dim_) +
                                "-cell of the ambient " + to_string(ambient_.family));
    return it->second;
}

bool CellIndex::contains(const Cell& cell) const {
    return lookup_.find(cell.text()) != lookup_.end();
}

const Gf2Matrix& boundary_matrix(const Ambient& ambient, int ell) {
    if (ell < 0 || ell > ambient.n)
        throw std::domain_error("boundary matrix index " + std::to_string(ell) +
                                " out of range [0, " + std::to_string(ambient.n) + "]");
    using Key = std::tuple<Family, int, int>;
    static std::map<Key, Gf2Matrix> cache;
    static std::mutex mutex;
    const Key key{ambient.family, ambient.n, ell};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const CellIndex cols(ambient, ell);
    if (ell == 0) {
        // unreduced convention: the boundary of a vertex is zero
        return cache.emplace(key, Gf2Matrix(0, cols.size())).first->second;
    }
    const CellIndex rows(ambient, ell - 1);
    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& face : faces(cols.cell(c), ell - 1))
            m.set(rows.index_of(face), c, true);
    return cache.emplace(key, std::move(m)).first->second;
}

Gf2Vector chain_to_vector(const Chain& chain, const CellIndex& index) {
    if (chain.dim() != index.dim() || !(chain.ambient() == index.ambient()))
        throw std::invalid_argument("chain does not match the cell index");
    Gf2Vector v(index.size());
    for (const auto& cell : chain.cells()) v.set(index.index_of(cell), true);
    return v;
}

Chain chain_from_vector(const Gf2Vector& v, const CellIndex& index) {
    if (v.size() != index.size())
        throw std::invalid_argument("vector length does not match the cell index");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) cells.push_back(index.cell(i));
    return Chain::from_sorted(index.ambient(), index.dim(), std::move(cells));
}

Gf2Matrix chains_to_columns(const std::vector<Chain>& chains, const CellIndex& index) {
    Gf2Matrix m(index.size(), chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c) {
        const auto& chain = chains[c];
        if (chain.dim() != index.dim() || !(chain.ambient() == index.ambient()))
            throw std::invalid_argument("chain does not match the cell index");
        for (const auto& cell : chain.cells()) m.set(index.index_of(cell), c, true);
    }
    return m;
}

std::size_t betti(const SkeletonSpec& spec, int ell) {
    if (spec.k < 0 || spec.k > spec.ambient.n)
        throw std::domain_error("skeleton dimension out of range");
    if (ell < 0 || ell > spec.k)
        throw std::domain_error("Betti index out of range for this skeleton");
    const auto& d_ell = boundary_matrix(spec.ambient, ell);
    const std::size_t cycles = d_ell.cols() - d_ell.rank();
    // no (ell+1)-cells in the skeleton when ell == k
    const std::size_t bounds =
        ell < spec.k ? boundary_matrix(spec.ambient, ell + 1).rank() : 0;
    return cycles - bounds;
}

std::vector<std::size_t> betti_profile(const SkeletonSpec& spec) {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(spec.k) + 1);
    for (int ell = 0; ell <= spec.k; ++ell) out.push_back(betti(spec, ell));
    return out;
}

namespace {

bool complex_cell_less(const Cell& a, const Cell& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
}

}  // namespace

CellComplex::CellComplex(Ambient ambient, std::vector<Cell> cells)
    : ambient_(ambient), cells_(std::move(cells)) {
    for (const auto& cell : cells_) {
        if (cell.is_empty_cell())
            throw std::invalid_argument("the empty cell is not part of a cell complex");
        if (!belongs_to(cell, ambient_))
            throw std::invalid_argument("cell " + cell.text() + " does not live in the ambient " +
                                        to_string(ambient_.family) + " of dimension " +
                                        std::to_string(ambient_.n));
    }
    std::sort(cells_.begin(), cells_.end(), complex_cell_less);
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

CellComplex CellComplex::closure_of(const Ambient& ambient, const std::vector<Cell>& cells) {
    return CellComplex(ambient, cells).closure();
}

std::vector<Cell> CellComplex::cells_of_dim(int j) const {
    std::vector<Cell> out;
    for (const auto& cell : cells_)
        if (cell.dim() == j) out.push_back(cell);
    return out;
}

std::vector<std::size_t> CellComplex::f_vector() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& cell : cells_) ++counts[static_cast<std::size_t>(cell.dim())];
    return counts;
}

int CellComplex::dim() const { return cells_.empty() ? -1 : cells_.back().dim(); }

bool CellComplex::contains(const Cell& cell) const {
    return std::binary_search(cells_.begin(), cells_.end(), cell, complex_cell_less);
}

bool CellComplex::is_closed() const {
    for (const auto& cell : cells_) {
        if (cell.dim() == 0) continue;
        for (const auto& face : faces(cell, cell.dim() - 1))
            if (!contains(face)) return false;
    }
    return true;
}

CellComplex CellComplex::closure() const {
    std::vector<Cell> all = cells_;
    std::size_t head = 0;
    std::vector<Cell> seen = cells_;  // sorted membership set
    auto known = [&](const Cell& c) {
        return std::binary_search(seen.begin(), seen.end(), c, complex_cell_less);
    };
    while (head < all.size()) {
        const Cell cell = all[head++];
        if (cell.dim() <= 0) continue;
        for (auto& face : faces(cell, cell.dim() - 1)) {
            if (known(face)) continue;
            seen.insert(std::upper_bound(seen.begin(), seen.end(), face, complex_cell_less),
                        face);
            all.push_back(std::move(face));
        }
    }
    return CellComplex(ambient_, std::move(all));
}

long long CellComplex::euler_characteristic() const {
    for (const auto& cell : cells_) {
        if (cell.dim() == 0) continue;
        for (const auto& face : faces(cell, cell.dim() - 1))
            if (!contains(face))
                throw std::domain_error("complex is not face-closed: missing face " +
                                        face.text() + " of " + cell.text());
    }
    long long chi = 0;
    for (const auto& cell : cells_) chi += cell.dim() % 2 == 0 ? 1 : -1;
    return chi;
}

std::vector<std::size_t> CellComplex::betti_profile() const {
    if (!is_closed())
        throw std::domain_error("Betti profile needs a face-closed complex");
    const int top = dim();
    if (top < 0) return {};

    // index the complex's own cells per dimension
    std::vector<std::vector<Cell>> by_dim(static_cast<std::size_t>(top) + 1);
    for (const auto& cell : cells_) by_dim[static_cast<std::size_t>(cell.dim())].push_back(cell);

    auto index_in = [](const std::vector<Cell>& cells, const Cell& cell) {
        const auto it = std::lower_bound(cells.begin(), cells.end(), cell);
        return static_cast<std::size_t>(it - cells.begin());
    };

    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // rank of d_ell
    for (int ell = 1; ell <= top; ++ell) {
        const auto& rows = by_dim[static_cast<std::size_t>(ell - 1)];
        const auto& cols = by_dim[static_cast<std::size_t>(ell)];
        Gf2Matrix m(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& face : faces(cols[c], ell - 1))
                m.set(index_in(rows, face), c, true);
        ranks[static_cast<std::size_t>(ell)] = m.rank();
    }

    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1, 0);
    for (int ell = 0; ell <= top; ++ell) {
        const std::size_t cells_here = by_dim[static_cast<std::size_t>(ell)].size();
        out[static_cast<std::size_t>(ell)] = cells_here - ranks[static_cast<std::size_t>(ell)] -
                                             ranks[static_cast<std::size_t>(ell + 1)];
    }
    return out;
}

bool CellComplex::is_connected() const {
    if (cells_.empty()) return false;
    const CellComplex closed = is_closed() ? *this : closure();
    const auto verts = closed.cells_of_dim(0);
    if (verts.empty()) return false;

    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto vert_index = [&](const Cell& v) {
        const auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return static_cast<std::size_t>(it - verts.begin());
    };
    for (const auto& edge : closed.cells_of_dim(1)) {
        const auto ends = faces(edge, 0);
        parent[find(vert_index(ends[0]))] = find(vert_index(ends[1]));
    }
    const std::size_t root = find(0);
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

CellComplex closure(const Chain& chain) {
    return CellComplex(chain.ambient(), chain.cells()).closure();
}

CellComplex intersect(const CellComplex& a, const CellComplex& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("intersect: ambient polytopes differ");
    std::vector<Cell> common;
    for (const auto& cell : a.cells())
        if (b.contains(cell)) common.push_back(cell);
    return CellComplex(a.ambient(), std::move(common));
}

}  // namespace sphb
