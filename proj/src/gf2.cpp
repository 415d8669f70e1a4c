#include "spherebasis/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace sphb {

namespace {
constexpr std::size_t kLaneBits = 64;

std::size_t lanes_for(std::size_t bits) { return (bits + kLaneBits - 1) / kLaneBits; }
}  // namespace

Gf2Vector::Gf2Vector(std::size_t size) : size_(size), words_(lanes_for(size), 0) {}

bool Gf2Vector::get(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("Gf2Vector index out of range");
    return words_[i / kLaneBits] >> (i % kLaneBits) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    if (i >= size_) throw std::out_of_range("Gf2Vector index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % kLaneBits);
    if (value)
        words_[i / kLaneBits] |= bit;
    else
        words_[i / kLaneBits] &= ~bit;
}

void Gf2Vector::flip(std::size_t i) {
    if (i >= size_) throw std::out_of_range("Gf2Vector index out of range");
    words_[i / kLaneBits] ^= std::uint64_t{1} << (i % kLaneBits);
}

bool Gf2Vector::is_zero() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t Gf2Vector::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
    if (size_ != other.size_)
        throw std::invalid_argument("Gf2Vector size mismatch in +=");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), lane_count_(lanes_for(cols)), words_(rows * lane_count_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<Gf2Vector>& columns) {
    if (columns.empty()) return Gf2Matrix(0, 0);
    const std::size_t rows = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
    Gf2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (columns[c].get(r)) m.set(r, c, true);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix index out of range");
    return words_[r * lane_count_ + c / kLaneBits] >> (c % kLaneBits) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (c % kLaneBits);
    auto& word = words_[r * lane_count_ + c / kLaneBits];
    if (value)
        word |= bit;
    else
        word &= ~bit;
}

void Gf2Matrix::add_row_into(std::size_t src, std::size_t dst) {
    if (src >= rows_ || dst >= rows_) throw std::out_of_range("Gf2Matrix row out of range");
    const std::size_t s = src * lane_count_;
    const std::size_t d = dst * lane_count_;
    for (std::size_t i = 0; i < lane_count_; ++i) words_[d + i] ^= words_[s + i];
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("Gf2Matrix row out of range");
    Gf2Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

Gf2Vector Gf2Matrix::col(std::size_t c) const {
    if (c >= cols_) throw std::out_of_range("Gf2Matrix column out of range");
    Gf2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) m.set(c, r, true);
    return m;
}

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("Gf2Matrix::multiply dimension mismatch");
    Gf2Vector out(rows_);
    const auto& xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::size_t base = r * lane_count_;
        for (std::size_t i = 0; i < lane_count_; ++i) acc ^= words_[base + i] & xw[i];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

namespace {

// Reduced row echelon form of [m | rhs] (rhs optional), pivots preferring the
// lowest-index row for each column. Returns pivot columns in row order.
struct Echelon {
    Gf2Matrix m;
    Gf2Vector rhs;
    std::vector<std::size_t> pivot_cols;
};

Echelon rref(const Gf2Matrix& input, const Gf2Vector* rhs_in) {
    Echelon e{input, rhs_in ? *rhs_in : Gf2Vector(input.rows()), {}};
    const std::size_t rows = e.m.rows();
    const std::size_t cols = e.m.cols();
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = next_row; r < rows; ++r) {
            if (e.m.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != next_row) {
            // swap rows pivot <-> next_row via three xors
            e.m.add_row_into(pivot, next_row);
            e.m.add_row_into(next_row, pivot);
            e.m.add_row_into(pivot, next_row);
            const bool a = e.rhs.get(pivot);
            const bool b = e.rhs.get(next_row);
            e.rhs.set(pivot, b);
            e.rhs.set(next_row, a);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != next_row && e.m.get(r, c)) {
                e.m.add_row_into(next_row, r);
                if (e.rhs.get(next_row)) e.rhs.flip(r);
            }
        }
        e.pivot_cols.push_back(c);
        ++next_row;
    }
    return e;
}

}  // namespace

std::size_t Gf2Matrix::rank() const { return rref(*this, nullptr).pivot_cols.size(); }

std::vector<Gf2Vector> Gf2Matrix::kernel_basis() const {
    const Echelon e = rref(*this, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Gf2Vector> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        Gf2Vector v(cols_);
        v.set(free_col, true);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            if (e.m.get(r, free_col)) v.set(e.pivot_cols[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

Gf2Matrix::Reduction Gf2Matrix::solve_or_reduce(const Gf2Vector& b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("solve_or_reduce dimension mismatch");
    const Echelon e = rref(*this, &b);
    Gf2Vector x(cols_);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.rhs.get(r)) x.set(e.pivot_cols[r], true);
    Gf2Vector residual = b + multiply(x);
    return {std::move(x), std::move(residual)};
}

std::optional<Gf2Vector> Gf2Matrix::solve(const Gf2Vector& b) const {
    Reduction red = solve_or_reduce(b);
    if (!red.residual.is_zero()) return std::nullopt;
    return std::move(red.x);
}

}  // namespace sphb
