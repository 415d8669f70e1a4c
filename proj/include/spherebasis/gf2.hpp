#pragma once
// Dense linear algebra over GF(2), bit-packed 64 columns per word.

#include <cstdint>
#include <optional>
#include <vector>

namespace sphb {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    Gf2Vector& operator+=(const Gf2Vector& other);
    friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major matrix over GF(2); each row is bit-packed into 64-bit lanes.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_columns(const std::vector<Gf2Vector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void add_row_into(std::size_t src, std::size_t dst);  // row[dst] += row[src]

    Gf2Vector row(std::size_t r) const;
    Gf2Vector col(std::size_t c) const;
    Gf2Matrix transposed() const;
    Gf2Vector multiply(const Gf2Vector& x) const;  // this * x

    std::size_t rank() const;
    // Basis of the null space {x : this*x = 0}.
    std::vector<Gf2Vector> kernel_basis() const;
    // One solution of this*x = b, if any.
    std::optional<Gf2Vector> solve(const Gf2Vector& b) const;

    // Best-effort solve: x uses only pivot columns of the row-reduced system;
    // residual = b + this*x is zero exactly when b is in the column space.
    struct Reduction {
        Gf2Vector x;
        Gf2Vector residual;
    };
    Reduction solve_or_reduce(const Gf2Vector& b) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    // Row echelon reduction of [this | rhs] in place on a copy; returns the
    // pivot column of each pivot row, in row order.
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t lane_count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sphb
