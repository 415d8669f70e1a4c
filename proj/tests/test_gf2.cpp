#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "spherebasis/cells.hpp"
#include "spherebasis/complex.hpp"
#include "spherebasis/gf2.hpp"

using namespace sphb;

namespace {

// independent oracle: connected components of a graph by union-find
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t components() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

Gf2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1u) m.set(r, c, true);
    return m;
}

Gf2Vector random_vector(std::size_t size, std::mt19937_64& rng) {
    Gf2Vector v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng() & 1u) v.set(i, true);
    return v;
}

}  // namespace

TEST_CASE("vector basics") {
    Gf2Vector v(70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    v.flip(69);
    v.flip(68);
    CHECK(v.popcount() == 2);
    CHECK(v.get(0));
    CHECK(v.get(68));
    CHECK_FALSE(v.get(69));

    Gf2Vector w(70);
    w.set(0, true);
    w.set(1, true);
    v += w;  // xor
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.popcount() == 2);
}

TEST_CASE("rank of the edge-vertex incidence matrix matches a union-find oracle") {
    // rank of d_1 over Z2 equals #vertices - #components of the 1-skeleton graph
    for (int n = 1; n <= 4; ++n) {
        const Ambient q{Family::cube, n};
        const Gf2Matrix& d1 = boundary_matrix(q, 1);
        const CellIndex verts(q, 0);
        const CellIndex edges(q, 1);
        UnionFind uf(verts.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::vector<std::size_t> ends;
            for (const auto& v : faces(edges.cell(e), 0)) ends.push_back(verts.index_of(v));
            uf.unite(ends[0], ends[1]);
        }
        CHECK(d1.rank() == verts.size() - uf.components());
        // the hypercube graph is connected
        CHECK(uf.components() == 1);
    }
}

TEST_CASE("identity, transpose, row and column access") {
    std::mt19937_64 rng(7);
    const Gf2Matrix id = Gf2Matrix::identity(5);
    CHECK(id.rank() == 5);
    for (int trial = 0; trial < 10; ++trial) {
        const Gf2Vector v = random_vector(5, rng);
        CHECK(id.multiply(v) == v);
    }
    const Gf2Matrix a = random_matrix(5, 9, rng);
    const Gf2Matrix at = a.transposed();
    CHECK(at.rows() == 9);
    CHECK(at.cols() == 5);
    CHECK(at.rank() == a.rank());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a.get(r, c) == at.get(c, r));
    for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a.col(c) == at.row(c));
}

TEST_CASE("add_row_into xors rows") {
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(0, 2, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    m.add_row_into(0, 1);
    CHECK_FALSE(m.get(1, 0));
    CHECK(m.get(1, 1));
    CHECK(m.get(1, 2));
    CHECK(m.get(0, 0));  // source untouched
}

TEST_CASE("kernel basis spans the kernel exactly") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng() % 12;
        const std::size_t cols = 1 + rng() % 12;
        const Gf2Matrix m = random_matrix(rows, cols, rng);
        const auto kernel = m.kernel_basis();
        CHECK(kernel.size() == cols - m.rank());
        for (const auto& v : kernel) CHECK(m.multiply(v).is_zero());
        // kernel vectors are independent
        if (!kernel.empty()) {
            CHECK(Gf2Matrix::from_columns(kernel).rank() == kernel.size());
        }
    }
}

TEST_CASE("solve finds a preimage exactly when one exists") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng() % 10;
        const std::size_t cols = 1 + rng() % 10;
        const Gf2Matrix m = random_matrix(rows, cols, rng);

        // b in the image by construction
        const Gf2Vector x = random_vector(cols, rng);
        const Gf2Vector b = m.multiply(x);
        const auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m.multiply(*sol) == b);

        // solve_or_reduce: residual zero iff solvable, and m x + residual = b
        const auto red = m.solve_or_reduce(b);
        CHECK(red.residual.is_zero());
        CHECK(m.multiply(red.x) + red.residual == b);
    }
}

TEST_CASE("solve_or_reduce reports an unreachable target") {
    // the zero matrix cannot hit a nonzero b
    Gf2Matrix zero(3, 2);
    Gf2Vector b(3);
    b.set(1, true);
    CHECK_FALSE(zero.solve(b).has_value());
    const auto red = zero.solve_or_reduce(b);
    CHECK_FALSE(red.residual.is_zero());
    CHECK(red.residual == b);
    CHECK(zero.multiply(red.x) + red.residual == b);
}

TEST_CASE("boundary of boundary is zero as a matrix product") {
    for (int n = 1; n <= 4; ++n) {
        for (const Family family : {Family::cube, Family::simplex}) {
            const Ambient ambient{family, n};
            for (int ell = 1; ell <= n; ++ell) {
                const Gf2Matrix& lower = boundary_matrix(ambient, ell - 1);
                const Gf2Matrix& upper = boundary_matrix(ambient, ell);
                for (std::size_t c = 0; c < upper.cols(); ++c)
                    CHECK(lower.multiply(upper.col(c)).is_zero());
            }
        }
    }
}
