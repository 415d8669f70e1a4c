#pragma once

// Cells of the n-simplex and the n-cube, their text codecs, and the face /
// coface combinatorics everything else is built on.
//
// Cube cells are words of length n over {0,1,*}: coordinate i is fixed at 0
// or 1, or free ('*'); the dimension is the number of free coordinates.
// Simplex cells are strictly ascending vertex lists drawn from {1,...,n+1}.
// The canonical order is lexicographic with 0 < 1 < * for cube words and
// ascending-vector lexicographic for simplex cells.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sphb {

enum class Family : std::uint8_t { simplex, cube };

std::string to_string(Family family);
Family family_from_string(std::string_view text);

// The polytope a cell or chain lives in.
struct Ambient {
    Family family = Family::cube;
    int n = 1;  // dimension of the polytope, n >= 1

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

// Thrown on malformed cell text; position is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// One face of an ambient polytope. The unique empty cell (dimension -1) is
// representable so that the boundary of a 0-chain has somewhere to live; it
// never appears in enumerations.
class Cell {
public:
    static Cell cube(std::string word);
    static Cell simplex(std::vector<int> vertices);
    static Cell empty(Family family);

    Family family() const noexcept { return family_; }
    bool is_empty_cell() const noexcept { return empty_; }
    int dim() const noexcept;

    const std::string& word() const;           // cube cells only
    const std::vector<int>& vertices() const;  // simplex cells only

    std::string text() const;  // canonical codec form

    bool operator==(const Cell& other) const;
    bool operator<(const Cell& other) const;  // canonical order

private:
    Cell() = default;

    Family family_ = Family::cube;
    bool empty_ = false;
    std::string word_;        // cube payload
    std::vector<int> verts_;  // simplex payload
};

// Codec. Cube cells parse from their word ("**0"); simplex cells from a
// brace list ("{1,3,5}"). Errors carry the 1-based offending position.
Cell parse_cell(std::string_view text, const Ambient& ambient);
std::string format_cell(const Cell& cell);

bool belongs_to(const Cell& cell, const Ambient& ambient);

// All j-faces of a cell, canonically ordered. j = -1 yields the empty cell;
// for 0 <= j <= dim the count is C(dim,j)·2^(dim-j) (cube) or
// C(dim+1, j+1) (simplex).
std::vector<Cell> faces(const Cell& cell, int j);

// All (dim+1)-cells of the ambient containing the cell; exactly n - dim of
// them. Requires dim(cell) in [0, n-1].
std::vector<Cell> cofaces(const Cell& cell, const Ambient& ambient);

// All j-cells of the ambient in canonical order, 0 <= j <= n.
std::vector<Cell> enumerate_cells(const Ambient& ambient, int j);

}  // namespace sphb
